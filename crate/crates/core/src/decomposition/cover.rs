use serde::Serialize;

use crate::bounds;
use crate::decomposition::closure::{gikp_closure, gikp_closure_unchecked, has_sp_property, m_closure};
use crate::decomposition::OrderedPartition;
use crate::error::{Error, Result};
use crate::group::PermGroup;
use crate::perm::Permutation;

#[derive(Clone, Debug)]
pub enum CoverMode {
    /// Closure `G(K, P)` under `Π S_{X_i}`.
    M,
    /// Closure `G(I, K, P)` under the given `I`.
    K(PermGroup),
}

#[derive(Clone, Debug, Serialize)]
pub struct CoverBound {
    pub lemma: &'static str,
    /// Decimal string; `None` when the bound is too large to evaluate.
    pub value: Option<String>,
    pub within: Option<bool>,
}

#[derive(Clone, Debug, Serialize)]
pub struct CoverReport {
    pub cover: Vec<Permutation>,
    pub size: usize,
    pub closure_order: String,
    pub contains_h: bool,
    /// Every bound whose hypotheses `P` meets. A minimal greedy cover above a bound does not
    /// contradict it: the bound only promises that some cover of that size exists.
    pub bounds: Vec<CoverBound>,
}

fn closure(mode: &CoverMode, k: &[Permutation], p: &OrderedPartition) -> PermGroup {
    match mode {
        CoverMode::M => m_closure(k, p),
        CoverMode::K(i) => gikp_closure_unchecked(i, k, p.degree()),
    }
}

fn bound_entry(lemma: &'static str, value: Result<num_bigint::BigUint>, size: usize) -> CoverBound {
    match value {
        Ok(v) => CoverBound { lemma, within: Some(num_bigint::BigUint::from(size) <= v), value: Some(v.to_string()) },
        Err(_) => CoverBound { lemma, value: None, within: None },
    }
}

/// Greedy cover of `h` in the given order, then pruned until no element can be dropped.
pub fn closure_cover(h: &[Permutation], p: &OrderedPartition, mode: &CoverMode) -> Result<CoverReport> {
    let n = p.degree();
    if let Some(x) = h.iter().find(|x| x.degree() != n) {
        return Err(Error::DegreeMismatch(x.degree(), n));
    }
    if let CoverMode::K(i) = mode {
        gikp_closure(i, &[], p)?;
    }
    let mut k: Vec<Permutation> = Vec::new();
    let mut g = closure(mode, &k, p);
    for x in h {
        if !g.contains(x) {
            k.push(x.clone());
            g = closure(mode, &k, p);
        }
    }
    let mut j = k.len();
    while j > 0 {
        j -= 1;
        let trial: Vec<Permutation> = k.iter().enumerate().filter(|&(i, _)| i != j).map(|(_, x)| x.clone()).collect();
        let c = closure(mode, &trial, p);
        if c.contains_all(h) {
            k = trial;
            g = c;
        }
    }
    let sizes: Vec<usize> = p.blocks().iter().map(Vec::len).collect();
    let (x0, m) = (p.x0().len(), p.m());
    let mut found = Vec::new();
    if let CoverMode::M = mode {
        if m == 2 && x0 == 0 && n >= 10 {
            found.push(bound_entry("two-block", Ok(9u32.into()), k.len()));
        }
        if sizes.iter().all(|&s| s >= 4) {
            found.push(bound_entry("psi", bounds::psi(x0 as u64, m as u64), k.len()));
        }
    }
    if let CoverMode::K(_) = mode {
        if sizes.iter().all(|&s| s >= 6) {
            found.push(bound_entry("omega", bounds::omega(x0 as u64, m as u64), k.len()));
        }
    }
    Ok(CoverReport {
        size: k.len(),
        closure_order: g.order().to_string(),
        contains_h: g.contains_all(h),
        cover: k,
        bounds: found,
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct PointwiseReduction {
    pub cover: Vec<Permutation>,
    /// `g[j]` pairs with `h[j]`; `g[j]·h[j]` fixes every point of `X`.
    pub g: Vec<Permutation>,
    /// `|X|·(m + |X_0|)`.
    pub bound: usize,
    pub verified: bool,
}

/// Builds `K ⊆ H` and `g_h ∈ G(I, K, P)` so that each `g_h·h` fixes `X`, one point of `X` at a
/// time: moved images of the current point are grouped by block, one representative per
/// group joins `K`, and the rest are matched to it by conjugating with an element of `I`
/// of the form `(s_h s_i)·Π (y_t z_t)^{ε_t}`.
pub fn fix_pointwise_reduce(
    h: &[Permutation],
    x: &[usize],
    i: &PermGroup,
    p: &OrderedPartition,
) -> Result<PointwiseReduction> {
    let n = p.degree();
    if let Some(e) = h.iter().find(|e| e.degree() != n) {
        return Err(Error::DegreeMismatch(e.degree(), n));
    }
    if x.iter().any(|&pt| pt >= n || p.block_of(pt) == 0) {
        return Err(Error::Precondition("X must lie in X_1 ∪ .. ∪ X_m".into()));
    }
    if p.blocks().iter().any(|b| b.iter().filter(|pt| !x.contains(pt)).count() < 4) {
        return Err(Error::Precondition("every X_i needs at least 4 points outside X".into()));
    }
    if let Ok(false) = has_sp_property(i, p) {
        return Err(Error::Precondition("I lacks the SP-property".into()));
    }
    let mut g: Vec<Permutation> = vec![Permutation::identity(n); h.len()];
    let mut l: Vec<Permutation> = h.to_vec();
    let mut cover: Vec<usize> = Vec::new();
    let class_of = |s: usize| match p.block_of(s) {
        0 => (0, s),
        j => (j, 0),
    };
    for &pt in x {
        let mut reps: Vec<((usize, usize), usize)> = Vec::new();
        for (j, lj) in l.iter().enumerate() {
            let s = lj.image(pt);
            if s != pt && !reps.iter().any(|r| r.0 == class_of(s)) {
                reps.push((class_of(s), j));
                if !cover.contains(&j) {
                    cover.push(j);
                }
            }
        }
        let snapshot = l.clone();
        for j in 0..h.len() {
            let s_h = l[j].image(pt);
            if s_h == pt {
                continue;
            }
            let ki = reps.iter().find(|r| r.0 == class_of(s_h)).unwrap().1;
            let lk = &snapshot[ki];
            let s_i = lk.image(pt);
            let m_h = if s_h == s_i { lk.clone() } else { lk.conjugate_by(&sp_element(i, p, x, s_h, s_i)?) };
            let inv = m_h.inverse();
            l[j] = &inv * &l[j];
            g[j] = &inv * &g[j];
        }
    }
    let cover: Vec<Permutation> = {
        let mut c = cover;
        c.sort_unstable();
        c.into_iter().map(|j| h[j].clone()).collect()
    };
    let bound = x.len() * (p.m() + p.x0().len());
    let span = gikp_closure_unchecked(i, &cover, n);
    let verified = cover.len() <= bound
        && g.iter().zip(h).all(|(gh, hh)| span.contains(gh) && x.iter().all(|&pt| (gh * hh).image(pt) == pt));
    Ok(PointwiseReduction { cover, g, bound, verified })
}

/// `(a b)·Π (y_t z_t)^{ε_t} ∈ I` with `y_t, z_t ∈ X_t \ X` avoiding `a, b`.
fn sp_element(i: &PermGroup, p: &OrderedPartition, x: &[usize], a: usize, b: usize) -> Result<Permutation> {
    let n = p.degree();
    let pairs: Vec<Permutation> = p
        .blocks()
        .iter()
        .map(|blk| {
            let free: Vec<usize> = blk.iter().copied().filter(|q| !x.contains(q) && *q != a && *q != b).collect();
            Permutation::transposition(n, free[0], free[1])
        })
        .collect();
    let base = Permutation::transposition(n, a, b);
    for mask in 0u64..(1u64 << pairs.len()) {
        let cand =
            pairs.iter().enumerate().filter(|(t, _)| mask >> t & 1 == 1).fold(base.clone(), |acc, (_, t)| &acc * t);
        if i.contains(&cand) {
            return Ok(cand);
        }
    }
    Err(Error::Precondition("I lacks the SP-property".into()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::decomposition::closure::block_product;

    fn p(n: usize, s: &str) -> Permutation {
        Permutation::parse(n, s).unwrap()
    }

    #[test]
    fn singleton_cover() {
        let part = OrderedPartition::parse("0:|1:1,2,3|2:4,5,6").unwrap();
        let r = closure_cover(&[p(6, "(1 4)")], &part, &CoverMode::M).unwrap();
        assert_eq!(r.cover, vec![p(6, "(1 4)")]);
        assert!(r.contains_h);
    }

    #[test]
    fn three_cycles_of_a6() {
        let part = OrderedPartition::parse("0:|1:1,2,3|2:4,5,6").unwrap();
        let mut h = Vec::new();
        for a in 0..6 {
            for b in 0..6 {
                for c in 0..6 {
                    if a < b && a < c && b != c {
                        h.push(Permutation::cycle(6, &[a, b, c]).unwrap());
                    }
                }
            }
        }
        let r = closure_cover(&h, &part, &CoverMode::M).unwrap();
        assert!(r.contains_h && r.size <= 9);
    }

    #[test]
    fn pointwise_reduction() {
        let part = OrderedPartition::parse("0:|1:1,2,3,4,5|2:6,7,8,9,10").unwrap();
        let w = block_product(&part);
        let r = fix_pointwise_reduce(&[p(10, "(1 6)(2 7)")], &[0], &w, &part).unwrap();
        assert!(r.verified && r.cover.len() <= 2);
        let r = fix_pointwise_reduce(&[p(10, "(2 3)")], &[0], &w, &part).unwrap();
        assert!(r.cover.is_empty() && r.g[0].is_identity());
        let r = fix_pointwise_reduce(&[p(10, "(1 2)")], &[], &w, &part).unwrap();
        assert!(r.cover.is_empty());
        let h = [p(10, "(1 2 6)"), p(10, "(1 3)(4 5)"), p(10, "(1 7 2)"), p(10, "(1 4 8 9)"), p(10, "(1 2)(6 7)")];
        let r = fix_pointwise_reduce(&h, &[0, 5], &w.even_part(), &part).unwrap();
        assert!(r.verified);
    }
}
