use num_bigint::BigUint;
use num_traits::Pow;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::group::PermGroup;
use crate::perm::Permutation;
use crate::wreath::product::{embed_vector, is_nonabelian_simple};

/// Largest `|S|^k` for which the criterion is also checked by generating `S^k` directly.
pub const DIRECT_CHECK_CAP: u64 = 1_000_000;
/// Largest group of conjugating permutations enumerated for the automorphism test.
pub const AUT_ENUM_CAP: usize = 100_000;

#[derive(Clone, Debug, Serialize)]
pub struct HallReport {
    /// The criterion: every coordinate tuple generates `S` and no two are related by an automorphism.
    pub generates: bool,
    /// Coordinate whose tuple fails to generate `S`.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub non_generating: Option<usize>,
    /// Coordinates `(i, j)` with an automorphism carrying tuple `i` onto tuple `j`, and that automorphism as a conjugating permutation.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub related: Option<(usize, usize, Permutation)>,
    /// Whether the vectors generate `S^k`, computed in the permutation representation on `k` blocks.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub direct: Option<bool>,
}

impl HallReport {
    pub fn agrees(&self) -> bool {
        self.direct.is_none_or(|d| d == self.generates)
    }
}

/// Outer automorphisms supplied by default, as conjugating permutations: a transposition for
/// `A_n` and `x ↦ a·x` with `a` a non-residue for the builtin `PSL2(p)`.
pub fn default_outer_automorphisms(s: &PermGroup) -> Vec<Permutation> {
    let n = s.degree();
    if n >= 3 && s.is_alternating_on_degree() {
        return vec![Permutation::transposition(n, 0, 1)];
    }
    let p = s.name().and_then(|name| name.strip_prefix("PSL2(")?.strip_suffix(')')?.parse::<usize>().ok());
    if let Some(p) = p.filter(|&p| p + 1 == n) {
        let residues: Vec<usize> = (1..p).map(|x| x * x % p).collect();
        if let Some(a) = (2..p).find(|a| !residues.contains(a)) {
            let images: Vec<usize> = (0..n).map(|x| if x == p { p } else { a * x % p }).collect();
            return vec![Permutation::from_images(&images).expect("multiplication by a unit permutes the line")];
        }
    }
    Vec::new()
}

/// `vectors[j][i]` is coordinate `i` of the `j`-th element of `S^k`. Automorphisms of `S` are
/// conjugations by the group generated by `S` and `outer`.
pub fn hall_generates(vectors: &[Vec<Permutation>], s: &PermGroup, outer: &[Permutation]) -> Result<HallReport> {
    let Some(k) = vectors.first().map(Vec::len) else {
        return Err(Error::InvalidInput("no vectors".into()));
    };
    let g = s.degree();
    if k == 0 || vectors.iter().any(|v| v.len() != k) {
        return Err(Error::InvalidInput("vectors must share a positive length".into()));
    }
    if vectors.iter().flatten().any(|x| x.degree() != g || !s.contains(x)) {
        return Err(Error::InvalidInput("every coordinate must be an element of S".into()));
    }
    if outer.iter().any(|c| c.degree() != g || !s.generators().iter().all(|x| s.contains(&x.conjugate_by(c)))) {
        return Err(Error::InvalidInput("outer automorphisms must normalise S".into()));
    }
    if !is_nonabelian_simple(s)? {
        return Err(Error::Precondition("S must be nonabelian simple".into()));
    }
    let tuples: Vec<Vec<Permutation>> = (0..k).map(|i| vectors.iter().map(|v| v[i].clone()).collect()).collect();
    let mut report = HallReport { generates: true, non_generating: None, related: None, direct: None };
    report.non_generating = tuples.iter().position(|t| !PermGroup::from_generators(g, t).same_group(s));
    if report.non_generating.is_none() {
        let mut conj: Vec<Permutation> = s.generators().to_vec();
        conj.extend(outer.iter().cloned());
        let auts = PermGroup::from_generators(g, &conj).elements(AUT_ENUM_CAP)?;
        'pairs: for i in 0..k {
            for j in i + 1..k {
                let (a, b) = (&tuples[i], &tuples[j]);
                if let Some(c) = auts.iter().find(|c| a.iter().zip(b).all(|(x, y)| x.conjugate_by(c) == *y)) {
                    report.related = Some((i, j, c.clone()));
                    break 'pairs;
                }
            }
        }
    }
    report.generates = report.non_generating.is_none() && report.related.is_none();
    let power: BigUint = Pow::pow(s.order(), k);
    if power <= BigUint::from(DIRECT_CHECK_CAP) {
        let gens: Vec<Permutation> = vectors.iter().map(|v| embed_vector(v)).collect();
        report.direct = Some(PermGroup::from_generators(g * k, &gens).order() == power);
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Permutation {
        Permutation::parse(5, s).unwrap()
    }

    #[test]
    fn criterion_examples() {
        let a5 = PermGroup::alternating(5);
        let outer = default_outer_automorphisms(&a5);
        let (a, b) = (p("(1 2 3 4 5)"), p("(1 2 3)"));
        let dup = hall_generates(&[vec![a.clone(), a.clone()], vec![b.clone(), b.clone()]], &a5, &outer).unwrap();
        assert!(!dup.generates && dup.agrees());
        let twisted = vec![vec![a.clone(), a.clone()], vec![b.clone(), b.inverse()]];
        let r = hall_generates(&twisted, &a5, &outer).unwrap();
        assert!(r.generates && r.direct == Some(true));
        let weak = hall_generates(&[vec![a.clone(), a.clone()], vec![a.pow(2), b]], &a5, &outer).unwrap();
        assert_eq!(weak.non_generating, Some(0));
        assert!(weak.agrees());
    }

    #[test]
    fn outer_needed() {
        let a5 = PermGroup::alternating(5);
        let t = Permutation::transposition(5, 0, 1);
        let (a, b) = (p("(1 2 3 4 5)"), p("(1 2 3)"));
        let v = vec![vec![a.clone(), a.conjugate_by(&t)], vec![b.clone(), b.conjugate_by(&t)]];
        let inner_only = hall_generates(&v, &a5, &[]).unwrap();
        assert!(inner_only.generates && inner_only.direct == Some(false));
        assert!(!hall_generates(&v, &a5, &default_outer_automorphisms(&a5)).unwrap().generates);
    }

    #[test]
    fn psl2_outer() {
        let s = crate::group::builtins::psl2(7).unwrap();
        let c = &default_outer_automorphisms(&s)[0];
        assert!(!s.contains(c));
        assert!(s.generators().iter().all(|x| s.contains(&x.conjugate_by(c))));
    }
}
