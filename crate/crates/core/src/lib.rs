pub mod acceptance;
pub mod bounds;
pub mod classification;
pub mod decomposition;
pub mod error;
pub mod group;
pub mod io;
pub mod irredundance;
pub mod perm;
pub mod wreath;

pub use error::{Error, Result};
pub use group::PermGroup;
pub use perm::Permutation;
