//! Exact evaluation of the bound tower `f, f₁, g, g₁, φ, ψ, ω, Ψ`, the displacement
//! description of `ι_{n−k}(S_n)` with its explicit witnesses, and bound audits.

mod audit;
mod lemma18;
mod tower;

pub use audit::{bound_audit, AuditClaim, BoundAuditReport, Verdict};
pub use lemma18::{iota_member, lemma18_construct, Lemma18Witness};
pub use tower::{
    capital_psi, capital_psi_lower_bound, f, f1, f_brute_force, g, g1, monotonicity_grid, omega, phi, psi, rational,
    set_partition_weight_sum, GridIndex, GridPoint, MonotonicityReport, DEFAULT_N0, F_WORK_LIMIT,
};
