//! Wreath products `S ≀ P` in their imprimitive action, subdirect products of `S²`, Hall's
//! generation criterion for `S^k`, and irredundant witnesses inside wreath products.

mod goursat;
mod hall;
mod product;
mod witness;

pub use goursat::{goursat_classify, twisted_diagonal, GoursatClass, GOURSAT_ORDER_CAP};
pub use hall::{default_outer_automorphisms, hall_generates, HallReport, AUT_ENUM_CAP, DIRECT_CHECK_CAP};
pub use product::{
    build_wreath, embed_in_block, embed_top, embed_vector, is_nonabelian_simple, is_two_transitive, Wreath,
};
pub use witness::{default_irredundant_set, thm10_nonreplacement_witness, thm10_witness, thm11_witness, WreathWitness};
