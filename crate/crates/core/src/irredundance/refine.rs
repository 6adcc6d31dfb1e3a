use serde::Serialize;

use crate::error::{Error, Result};
use crate::group::PermGroup;
use crate::irredundance::{is_irredundant, is_irredundant_generating, m_search, SearchOptions};
use crate::perm::Permutation;

const ENUM_CAP: usize = 1_000_000;

#[derive(Clone, Debug, Serialize)]
pub struct WhistonRefinement {
    /// Number of leading elements whose images form an irredundant generating set of G/N.
    pub k: usize,
    pub kept: Vec<Permutation>,
    /// `(original, replacement)` pairs; each replacement lies in N.
    pub replaced: Vec<(Permutation, Permutation)>,
    pub refined: Vec<Permutation>,
    pub verified: bool,
}

/// Reorders `s` and replaces its tail by elements of `n` so that the head maps onto an
/// irredundant generating set of `G/N` and the whole set stays irredundant generating.
pub fn whiston_refine(g: &PermGroup, n: &PermGroup, s: &[Permutation]) -> Result<WhistonRefinement> {
    let deg = g.degree();
    if !is_irredundant_generating(g, s) {
        return Err(Error::Precondition("set is not an irredundant generating set of G".into()));
    }
    if !n.is_subgroup_of(g)
        || !g.generators().iter().all(|x| n.generators().iter().all(|y| n.contains(&y.conjugate_by(x))))
    {
        return Err(Error::Precondition("N is not a normal subgroup of G".into()));
    }
    let mut kept: Vec<Permutation> = s.to_vec();
    let mut removed = Vec::new();
    for j in (0..s.len()).rev() {
        let mut others: Vec<Permutation> = kept.iter().filter(|p| *p != &s[j]).cloned().collect();
        others.extend(n.generators().iter().cloned());
        if PermGroup::from_generators(deg, &others).contains(&s[j]) {
            kept.retain(|p| p != &s[j]);
            removed.push(s[j].clone());
        }
    }
    removed.reverse();
    let span_a = PermGroup::from_generators(deg, &kept);
    let mut n_elems = n.elements(ENUM_CAP)?;
    n_elems.sort();
    let mut replaced = Vec::new();
    for b in &removed {
        let h = n_elems
            .iter()
            .find(|x| span_a.contains(&b.compose(&x.inverse())))
            .ok_or_else(|| Error::VerificationFailed(format!("{b} not in <A>N")))?;
        replaced.push((b.clone(), h.clone()));
    }
    let mut refined = kept.clone();
    refined.extend(replaced.iter().map(|(_, h)| h.clone()));
    let verified = is_irredundant_generating(g, &refined);
    Ok(WhistonRefinement { k: kept.len(), kept, replaced, refined, verified })
}

#[derive(Clone, Debug, Serialize)]
pub struct FactorPart {
    pub points: Vec<usize>,
    /// Elements chosen for this factor, in their modified form.
    pub chosen: Vec<Permutation>,
    pub projection_order: u64,
    /// Whether the projections of `chosen` are irredundant and generate the projection.
    pub projection_irredundant_generating: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub m_projection: Option<usize>,
}

#[derive(Clone, Debug, Serialize)]
pub struct DirectProductCertificate {
    pub size: usize,
    pub parts: Vec<FactorPart>,
    /// `size = Σ |chosen_i|` and every part passes; then `size ≤ Σ m(T_i)`.
    pub certified: bool,
}

fn project(p: &Permutation, pts: &[usize]) -> Result<Permutation> {
    p.restrict(pts).ok_or_else(|| Error::Precondition(format!("{p} does not preserve factor {pts:?}")))
}

fn projected_group(set: &[Permutation], pts: &[usize]) -> Result<PermGroup> {
    let gens = set.iter().map(|p| project(p, pts)).collect::<Result<Vec<_>>>()?;
    Ok(PermGroup::from_generators(pts.len(), &gens))
}

/// Splits an irredundant set of a direct product, factor by factor, into parts whose
/// projections are irredundant generating sets of the projected groups.
pub fn direct_product_refine(
    n: usize,
    factors: &[Vec<usize>],
    s: &[Permutation],
    opts: &SearchOptions,
) -> Result<DirectProductCertificate> {
    if !is_irredundant(n, s) {
        return Err(Error::Precondition("set is not irredundant".into()));
    }
    let mut k: Vec<Permutation> = s.to_vec();
    let mut parts = Vec::new();
    for pts in factors {
        let target = projected_group(&k, pts)?;
        let mut h: Vec<Permutation> = k.clone();
        for j in (0..k.len()).rev() {
            let trial: Vec<Permutation> = h.iter().filter(|p| *p != &k[j]).cloned().collect();
            if projected_group(&trial, pts)?.order() == target.order() {
                h = trial;
            }
        }
        let span_h = PermGroup::from_generators(n, &h);
        let elems = span_h.elements(ENUM_CAP)?;
        let mut next = Vec::new();
        for x in k.iter().filter(|x| !h.contains(x)) {
            let want = project(x, pts)?.inverse();
            let g = elems
                .iter()
                .find(|e| project(e, pts).map(|p| p == want).unwrap_or(false))
                .ok_or_else(|| Error::VerificationFailed("projection not reached".into()))?;
            let y = g.compose(x);
            if y.is_identity() {
                return Err(Error::VerificationFailed("element became trivial".into()));
            }
            next.push(y);
        }
        let proj: Vec<Permutation> = h.iter().map(|p| project(p, pts)).collect::<Result<_>>()?;
        let ok = is_irredundant_generating(&target, &proj) && proj.len() == h.len();
        let m_projection =
            if target.order_u64().is_some_and(|o| o <= 10_000) { Some(m_search(&target, opts)?.value) } else { None };
        parts.push(FactorPart {
            points: pts.clone(),
            chosen: h,
            projection_order: target.order_u64().unwrap_or(u64::MAX),
            projection_irredundant_generating: ok,
            m_projection,
        });
        k = next;
    }
    let total: usize = parts.iter().map(|p| p.chosen.len()).sum();
    let certified = k.is_empty()
        && total == s.len()
        && parts
            .iter()
            .all(|p| p.projection_irredundant_generating && p.m_projection.is_none_or(|m| p.chosen.len() <= m));
    Ok(DirectProductCertificate { size: s.len(), parts, certified })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(n: usize, s: &str) -> Permutation {
        Permutation::parse(n, s).unwrap()
    }

    #[test]
    fn s3_mod_a3() {
        let r = whiston_refine(&PermGroup::symmetric(3), &PermGroup::alternating(3), &[p(3, "(1 2)"), p(3, "(1 3)")])
            .unwrap();
        assert_eq!(r.k, 1);
        assert_eq!(r.refined, vec![p(3, "(1 2)"), p(3, "(1 3 2)")]);
        assert!(r.verified);
    }

    #[test]
    fn klein_diagonal() {
        let s = [p(4, "(1 2)(3 4)"), p(4, "(1 2)")];
        let c = direct_product_refine(4, &[vec![0, 1], vec![2, 3]], &s, &SearchOptions::default()).unwrap();
        assert!(c.certified);
        assert_eq!(c.parts[0].chosen.len(), 1);
        assert_eq!(c.parts[1].chosen.len(), 1);
    }

    #[test]
    fn s3_times_s4() {
        let s = [p(7, "(1 2)"), p(7, "(2 3)"), p(7, "(4 5)"), p(7, "(5 6)"), p(7, "(6 7)")];
        let c = direct_product_refine(7, &[vec![0, 1, 2], vec![3, 4, 5, 6]], &s, &SearchOptions::default()).unwrap();
        assert!(c.certified);
        assert!(c.parts[0].chosen.len() <= 2 && c.parts[1].chosen.len() <= 3);
    }
}
