//! M-decompositions relative to ordered partitions, the closures `G(T, P)` and
//! `G(I, K, P)`, and small covers of element sets under those closures.

mod closure;
mod cover;
mod mdecomp;
mod partition;

pub use closure::{
    block_generators, block_product, gikp_closure, has_k_property, has_m_property, has_sp_property, m_closure,
    SP_DEGREE_CAP,
};
pub use cover::{closure_cover, fix_pointwise_reduce, CoverBound, CoverMode, CoverReport, PointwiseReduction};
pub use mdecomp::{m_decompose, strong_m_decompose, MDecomposition};
pub use partition::OrderedPartition;
