use crate::decomposition::OrderedPartition;
use crate::error::{Error, Result};
use crate::group::maximality::young_generators;
use crate::group::PermGroup;
use crate::perm::Permutation;

/// Largest degree for which the SP-property is decided by exhaustion.
pub const SP_DEGREE_CAP: usize = 10;
const INTERSECTION_CAP: usize = 4_000_000;

/// Generators of `Π_{i≥1} S_{X_i}`.
pub fn block_generators(p: &OrderedPartition) -> Vec<Permutation> {
    young_generators(p.degree(), p.blocks())
}

pub fn block_product(p: &OrderedPartition) -> PermGroup {
    PermGroup::from_generators(p.degree(), &block_generators(p))
}

/// Closed under conjugation by `Π S_{X_i}`; checked on generators.
pub fn has_m_property(g: &PermGroup, p: &OrderedPartition) -> bool {
    closed_under(g, &block_generators(p))
}

fn closed_under(g: &PermGroup, conj: &[Permutation]) -> bool {
    g.generators().iter().all(|h| conj.iter().all(|s| g.contains(&h.conjugate_by(s))))
}

/// `G(T, P)`: the smallest group containing `t` with the M-property.
pub fn m_closure(t: &[Permutation], p: &OrderedPartition) -> PermGroup {
    PermGroup::from_generators(p.degree(), t).closure_under_conjugation(&block_generators(p))
}

/// `I ∩ Π S_{X_i}`, enumerating whichever side is smaller.
fn intersect_with_blocks(i: &PermGroup, w: &PermGroup) -> Result<PermGroup> {
    let (small, big) = if i.order() <= w.order() { (i, w) } else { (w, i) };
    let elems = small.elements(INTERSECTION_CAP)?;
    let mut j = PermGroup::trivial(i.degree());
    for e in elems {
        if big.contains(&e) && !j.contains(&e) {
            j.add_generator(e);
        }
    }
    Ok(j)
}

/// For every choice of transpositions `s_t ∈ S_{X_t}` and every `s ∈ Π S_{X_i}`, some
/// `s · Π s_t^{ε_t}` lies in `I`. Decided exactly for degree ≤ 10; above that only the
/// sufficient conditions `Π S_{X_i} ≤ I` or `Π S_{X_i} ∩ A_n ≤ I` are recognised.
pub fn has_sp_property(i: &PermGroup, p: &OrderedPartition) -> Result<bool> {
    let n = p.degree();
    if i.degree() != n {
        return Err(Error::DegreeMismatch(i.degree(), n));
    }
    let w = block_product(p);
    if w.is_subgroup_of(i) {
        return Ok(true);
    }
    let has_transposition = p.blocks().iter().any(|b| b.len() >= 2);
    if has_transposition && w.even_part().is_subgroup_of(i) {
        return Ok(true);
    }
    if n > SP_DEGREE_CAP {
        return Err(Error::DegreeCap(n, SP_DEGREE_CAP));
    }
    let j = intersect_with_blocks(i, &w)?;
    let index = w.order() / j.order();
    // `s τ ∈ I` for some `s` forces `s ∈ J τ`, so the cosets `J τ_ε` must exhaust `W`.
    let choices: Vec<Vec<Option<Permutation>>> = p
        .blocks()
        .iter()
        .map(|b| {
            let mut ts = Vec::new();
            for (a, &x) in b.iter().enumerate() {
                for &y in &b[a + 1..] {
                    ts.push(Some(Permutation::transposition(n, x, y)));
                }
            }
            if ts.is_empty() {
                ts.push(None);
            }
            ts
        })
        .collect();
    let mut idx = vec![0usize; choices.len()];
    loop {
        let tuple: Vec<&Permutation> = idx.iter().zip(&choices).filter_map(|(&k, c)| c[k].as_ref()).collect();
        let mut reps: Vec<Permutation> = Vec::new();
        for mask in 0u64..(1u64 << tuple.len()) {
            let tau = tuple
                .iter()
                .enumerate()
                .filter(|(b, _)| mask >> b & 1 == 1)
                .fold(Permutation::identity(n), |acc, (_, t)| &acc * *t);
            if !reps.iter().any(|r| j.contains(&(&tau * &r.inverse()))) {
                reps.push(tau);
            }
        }
        if num_bigint::BigUint::from(reps.len()) < index {
            return Ok(false);
        }
        let mut k = 0;
        loop {
            if k == idx.len() {
                return Ok(true);
            }
            idx[k] += 1;
            if idx[k] < choices[k].len() {
                break;
            }
            idx[k] = 0;
            k += 1;
        }
    }
}

/// `G` is closed under conjugation by `I`.
pub fn has_k_property(g: &PermGroup, i: &PermGroup) -> bool {
    closed_under(g, i.generators())
}

/// `G(I, K, P)`, generated by `x k x⁻¹` for `x ∈ I`, `k ∈ K`. Fails when `I` lacks the
/// SP-property (or it cannot be decided at this degree).
pub fn gikp_closure(i: &PermGroup, k: &[Permutation], p: &OrderedPartition) -> Result<PermGroup> {
    if !has_sp_property(i, p)? {
        return Err(Error::Precondition("I lacks the SP-property".into()));
    }
    Ok(gikp_closure_unchecked(i, k, p.degree()))
}

pub(crate) fn gikp_closure_unchecked(i: &PermGroup, k: &[Permutation], n: usize) -> PermGroup {
    PermGroup::from_generators(n, k).closure_under_conjugation(i.generators())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(n: usize, s: &str) -> Permutation {
        Permutation::parse(n, s).unwrap()
    }

    #[test]
    fn m_property_examples() {
        let part = OrderedPartition::parse("0:|1:1,2,3,4").unwrap();
        assert!(has_m_property(&PermGroup::alternating(4), &part));
        assert!(!has_m_property(&PermGroup::from_generators(4, &[p(4, "(1 2 3 4)")]), &part));
        let part = OrderedPartition::parse("0:|1:1,2,3|2:4,5").unwrap();
        assert!(has_m_property(&block_product(&part), &part));
        assert_eq!(m_closure(&[p(5, "(1 2 3)")], &part).order_u64(), Some(3));
        assert_eq!(m_closure(&[], &part).order_u64(), Some(1));
        let c = m_closure(&[p(5, "(1 4)")], &part);
        assert!(has_m_property(&c, &part));
        for a in [0, 1, 2] {
            for b in [3, 4] {
                assert!(c.contains(&Permutation::transposition(5, a, b)));
            }
        }
    }

    #[test]
    fn sp_examples() {
        let part = OrderedPartition::parse("0:6|1:1,2,3|2:4,5").unwrap();
        let w = block_product(&part);
        assert!(has_sp_property(&w, &part).unwrap());
        assert!(has_sp_property(&w.even_part(), &part).unwrap());
        assert!(!has_sp_property(&PermGroup::trivial(6), &part).unwrap());
        let first = PermGroup::from_generators(6, &[p(6, "(1 2)"), p(6, "(1 3)")]);
        assert!(has_sp_property(&first, &part).unwrap());
        let small = PermGroup::from_generators(6, &[p(6, "(1 2)")]);
        assert!(!has_sp_property(&small, &part).unwrap());
    }

    #[test]
    fn gikp_matches_m_closure_for_block_product() {
        let part = OrderedPartition::parse("0:6|1:1,2,3|2:4,5").unwrap();
        let h = p(6, "(1 4 6)");
        let a = gikp_closure(&block_product(&part), std::slice::from_ref(&h), &part).unwrap();
        assert!(a.same_group(&m_closure(&[h], &part)));
        assert_eq!(gikp_closure(&block_product(&part), &[], &part).unwrap().order_u64(), Some(1));
        assert!(gikp_closure(&PermGroup::trivial(6), &[], &part).is_err());
    }
}
