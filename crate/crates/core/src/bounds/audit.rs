use num_bigint::BigUint;
use serde::Serialize;

use crate::bounds::{capital_psi, capital_psi_lower_bound};
use crate::error::{Error, Result};
use crate::group::blocks::BlockSystem;
use crate::group::PermGroup;
use crate::irredundance::{is_irredundant_generating, m_search, SearchOptions};
use crate::perm::Permutation;

#[derive(Clone, Debug)]
pub enum AuditClaim {
    /// `m(H) ≤ |Γ| + 2|Δ| − 3` when the block kernel acts as `S_Γ` or `A_Γ` on some block.
    Lemma2 { block_size: usize },
    /// `m(H) ≤ 2|Δ| − k` for `H ≤ S_2 ≀ S_|Δ|`.
    Lemma15 { k: usize },
    /// `m(H) ≤ n − 4`.
    Thm2,
    /// `m(H) ≤ n − k` for transitive `H ∉ {A_n, S_n}` once `n ≥ Ψ(k)`.
    Thm7 { k: usize, n0: u64 },
    /// Every member of an irredundant generating set of `S_n` of size `n − k` has `d ≤ k + 1`,
    /// and is even when equality holds, once `n ≥ Ψ(k + 2)`.
    Thm8 { k: usize, set: Vec<Permutation> },
}

impl AuditClaim {
    pub fn id(&self) -> &'static str {
        match self {
            AuditClaim::Lemma2 { .. } => "lemma2",
            AuditClaim::Lemma15 { .. } => "lemma15",
            AuditClaim::Thm2 => "thm2",
            AuditClaim::Thm7 { .. } => "thm7",
            AuditClaim::Thm8 { .. } => "thm8",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    Verified,
    Vacuous,
    /// The search budget ran out before the observed value was exact.
    Inconclusive,
    #[serde(rename = "FALSIFIED")]
    Falsified,
}

#[derive(Clone, Debug, Serialize)]
pub struct BoundAuditReport {
    pub claim: &'static str,
    pub hypothesis: String,
    pub hypothesis_met: bool,
    pub observed: Option<String>,
    pub bound: Option<String>,
    pub verdict: Verdict,
}

struct Observed {
    value: usize,
    exact: bool,
}

fn observe_m(h: &PermGroup, opts: &SearchOptions) -> Option<Observed> {
    m_search(h, opts).ok().map(|r| Observed { value: r.value, exact: r.exact })
}

fn judge(met: bool, obs: &Option<Observed>, bound: i64) -> Verdict {
    match obs {
        _ if !met => Verdict::Vacuous,
        None => Verdict::Inconclusive,
        Some(o) if (o.value as i64) > bound => Verdict::Falsified,
        Some(o) if !o.exact => Verdict::Inconclusive,
        Some(_) => Verdict::Verified,
    }
}

fn report(
    claim: &'static str,
    hypothesis: String,
    met: bool,
    obs: Option<Observed>,
    bound: Option<i64>,
) -> BoundAuditReport {
    let verdict = match bound {
        Some(b) => judge(met, &obs, b),
        None => Verdict::Vacuous,
    };
    BoundAuditReport {
        claim,
        hypothesis,
        hypothesis_met: met,
        observed: obs.map(|o| if o.exact { o.value.to_string() } else { format!("≥ {}", o.value) }),
        bound: bound.map(|b| b.to_string()),
        verdict,
    }
}

/// Block kernel `H ∩ Π S_{Γ_i}` restricted to block `i`: `S` or `A` on that block.
fn kernel_full_on_some_block(h: &PermGroup, sys: &BlockSystem) -> Result<bool> {
    let elems = h.elements(crate::group::table::ORDER_CAP)?;
    let kernel: Vec<Permutation> =
        elems.into_iter().filter(|g| (0..g.degree()).all(|x| sys.block_of(g.image(x)) == sys.block_of(x))).collect();
    let k = PermGroup::from_generators(h.degree(), &kernel);
    for b in sys.blocks() {
        let Some(r) = k.restrict(b) else { continue };
        if r.is_symmetric_on_degree() || (b.len() >= 3 && r.is_alternating_on_degree()) {
            return Ok(true);
        }
    }
    Ok(false)
}

/// Proper transitive subgroups other than `A_n` satisfy `m ≤ n − k + 1` from this degree on:
/// every subgroup for `k ≤ 2`, Whiston's `n − 2` for `k = 3`, and `n − 3` from `n = 5` for `k = 4`.
fn lemma15_n0(k: usize) -> Option<usize> {
    match k {
        0..=3 => Some(1),
        4 => Some(5),
        _ => None,
    }
}

/// Evaluates a claim's hypotheses on `h` and, when they hold, compares an exact search
/// against the bound. `FALSIFIED` needs the hypotheses met and the bound exceeded.
pub fn bound_audit(h: &PermGroup, claim: &AuditClaim, opts: &SearchOptions) -> Result<BoundAuditReport> {
    let n = h.degree();
    let id = claim.id();
    match claim {
        AuditClaim::Lemma2 { block_size } => {
            let bs = *block_size;
            if bs < 2 || !n.is_multiple_of(bs) || n / bs < 2 {
                return Err(Error::InvalidInput(format!("block size {bs} does not split degree {n} into ≥ 2 blocks")));
            }
            let sys = BlockSystem::consecutive(bs, n / bs);
            let preserved = sys.is_preserved_by(h);
            let met = preserved && kernel_full_on_some_block(h, &sys)?;
            let hyp = format!("H ≤ S_{bs} ≀ S_{} and the block kernel acts as S or A on some block", n / bs);
            let obs = if met { observe_m(h, opts) } else { None };
            Ok(report(id, hyp, met, obs, Some((bs + 2 * (n / bs)) as i64 - 3)))
        }
        AuditClaim::Lemma15 { k } => {
            if !n.is_multiple_of(2) {
                return Err(Error::InvalidInput("degree must be even".into()));
            }
            let blocks = n / 2;
            let preserved = BlockSystem::consecutive(2, blocks).is_preserved_by(h);
            let n0 = lemma15_n0(*k);
            let met = preserved && n0.is_some_and(|n0| blocks >= n0.max(k + 1));
            let hyp = match n0 {
                Some(n0) => format!("H ≤ S_2 ≀ S_{blocks} and {blocks} ≥ max({n0}, {})", k + 1),
                None => format!("the m ≤ n − {} hypothesis on transitive groups is not established for k = {k}", k - 1),
            };
            let obs = if met { observe_m(h, opts) } else { None };
            Ok(report(id, hyp, met, obs, Some(2 * blocks as i64 - *k as i64)))
        }
        AuditClaim::Thm2 => {
            let order = h.order();
            let sn = PermGroup::symmetric(n);
            let an = PermGroup::alternating(n);
            let proper = order < sn.order();
            let is_an = h.same_group(&an);
            let transitive_case = proper && !is_an && h.is_transitive() && n >= 25;
            let alt_case = h.is_subgroup_of(&an) && !is_an && n >= 9;
            let met = transitive_case || alt_case;
            let hyp = "transitive proper H ≠ A_n with n ≥ 25, or proper H < A_n with n ≥ 9".to_string();
            let obs = observe_m(h, opts);
            Ok(report(id, hyp, met, obs, Some(n as i64 - 4)))
        }
        AuditClaim::Thm7 { k, n0 } => {
            let k = *k as u64;
            let is_full = h.is_symmetric_on_degree() || h.is_alternating_on_degree();
            let threshold: BigUint = match capital_psi(k, *n0) {
                Ok(v) => v,
                Err(Error::Intractable(_)) => {
                    let lb = capital_psi_lower_bound(k, *n0)?;
                    if BigUint::from(n) >= lb {
                        return Err(Error::Intractable(format!("Ψ({k}) is intractable and n ≥ its lower bound {lb}")));
                    }
                    lb
                }
                Err(e) => return Err(e),
            };
            let met = h.is_transitive() && !is_full && BigUint::from(n) >= threshold;
            let hyp = format!("transitive H ∉ {{A_n, S_n}} and n ≥ Ψ({k}) (≥ {threshold})");
            let obs = if met { observe_m(h, opts) } else { None };
            Ok(report(id, hyp, met, obs, Some(n as i64 - k as i64)))
        }
        AuditClaim::Thm8 { k, set } => {
            let sn = PermGroup::symmetric(n);
            if set.len() + k != n || !is_irredundant_generating(&sn, set) {
                return Err(Error::Precondition(format!(
                    "set is not an irredundant generating set of S_{n} of size n − {k}"
                )));
            }
            let lb = capital_psi_lower_bound(*k as u64 + 2, crate::bounds::DEFAULT_N0)?;
            let met = BigUint::from(n) >= lb;
            let ds: Vec<usize> = set.iter().map(Permutation::displacement).collect();
            let within = set.iter().all(|x| x.displacement() <= k + 1 && (x.displacement() < k + 1 || x.is_even()));
            let verdict = match (met, within) {
                (false, _) => Verdict::Vacuous,
                (true, true) => Verdict::Verified,
                (true, false) => Verdict::Falsified,
            };
            Ok(BoundAuditReport {
                claim: id,
                hypothesis: format!("n ≥ Ψ({}) (≥ {lb})", k + 2),
                hypothesis_met: met,
                observed: Some(format!("d = {ds:?}, all within: {within}")),
                bound: Some(format!("d ≤ {}, even at equality", k + 1)),
                verdict,
            })
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn lemma2_on_wreath() {
        // S_2 on the first block with a 3-cycle of the blocks.
        let p = |s: &str| Permutation::parse(6, s).unwrap();
        let h = PermGroup::from_generators(6, &[p("(1 2)"), p("(1 3 5)(2 4 6)")]);
        let r = bound_audit(&h, &AuditClaim::Lemma2 { block_size: 2 }, &SearchOptions::default()).unwrap();
        assert!(r.hypothesis_met);
        assert_eq!(r.bound.as_deref(), Some("5"));
        assert_eq!(r.verdict, Verdict::Verified);
    }

    #[test]
    fn vacuous_at_desk_scale() {
        let s6 = PermGroup::symmetric(6);
        let r = bound_audit(&PermGroup::dihedral(6), &AuditClaim::Thm2, &SearchOptions::default()).unwrap();
        assert_eq!(r.verdict, Verdict::Vacuous);
        assert_eq!(r.observed.as_deref(), Some("3"));
        let set: Vec<Permutation> = (0..5).map(|i| Permutation::transposition(6, i, i + 1)).collect();
        let r = bound_audit(&s6, &AuditClaim::Thm8 { k: 1, set }, &SearchOptions::default()).unwrap();
        assert_eq!(r.verdict, Verdict::Vacuous);
    }
}
