use std::collections::HashMap;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::group::PermGroup;
use crate::perm::Permutation;
use crate::wreath::product::is_nonabelian_simple;

/// Largest `|S|` accepted by [`goursat_classify`].
pub const GOURSAT_ORDER_CAP: usize = 10_000;

#[derive(Clone, Debug, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum GoursatClass {
    Full,
    /// `K = {(s, φ(s))}`; `phi` lists `(s, φ(s))` for the generators of `S`.
    GraphOfAutomorphism {
        phi: Vec<(Permutation, Permutation)>,
        verified: bool,
    },
    NotSubdirect {
        first_onto: bool,
        second_onto: bool,
    },
}

/// Classifies `K ≤ S × S`, with the first factor on points `0..g` and the second on `g..2g`.
pub fn goursat_classify(k: &PermGroup, s: &PermGroup) -> Result<GoursatClass> {
    let g = s.degree();
    if k.degree() != 2 * g {
        return Err(Error::DegreeMismatch(k.degree(), 2 * g));
    }
    let order = s.order_u64().filter(|&o| o as usize <= GOURSAT_ORDER_CAP);
    let Some(order) = order else { return Err(Error::OrderCap(s.order().to_string(), GOURSAT_ORDER_CAP)) };
    if !is_nonabelian_simple(s)? {
        return Err(Error::Precondition("S must be nonabelian simple".into()));
    }
    let first: Vec<usize> = (0..g).collect();
    let second: Vec<usize> = (g..2 * g).collect();
    let (Some(p1), Some(p2)) = (k.restrict(&first), k.restrict(&second)) else {
        return Err(Error::InvalidInput("K does not preserve the two factors".into()));
    };
    if !p1.is_subgroup_of(s) || !p2.is_subgroup_of(s) {
        return Err(Error::InvalidInput("K is not contained in S × S".into()));
    }
    let (first_onto, second_onto) = (p1.same_group(s), p2.same_group(s));
    if !first_onto || !second_onto {
        return Ok(GoursatClass::NotSubdirect { first_onto, second_onto });
    }
    let k_order = k.order_u64().unwrap_or(u64::MAX);
    if k_order == order * order {
        return Ok(GoursatClass::Full);
    }
    if k_order != order {
        return Err(Error::VerificationFailed(format!("subdirect product of order {k_order} is neither |S| nor |S|²")));
    }
    let mut phi: HashMap<Permutation, Permutation> = HashMap::with_capacity(order as usize);
    for x in k.elements(GOURSAT_ORDER_CAP)? {
        phi.insert(x.restrict(&first).unwrap(), x.restrict(&second).unwrap());
    }
    // φ(a·t) = φ(a)·φ(t) for all a and generators t makes φ a homomorphism; |K| = |S| makes it bijective.
    let verified = phi.len() == order as usize
        && phi.iter().all(|(a, fa)| s.generators().iter().all(|t| phi.get(&(a * t)) == Some(&(fa * &phi[t]))));
    let on_gens = s.generators().iter().map(|t| (t.clone(), phi[t].clone())).collect();
    Ok(GoursatClass::GraphOfAutomorphism { phi: on_gens, verified })
}

/// `{(s, φ(s))}` inside `S × S` for `φ` conjugation by `c`.
pub fn twisted_diagonal(s: &PermGroup, c: &Permutation) -> PermGroup {
    let g = s.degree();
    let gens: Vec<Permutation> =
        s.generators().iter().map(|x| &x.shift(0, 2 * g) * &x.conjugate_by(c).shift(g, 2 * g)).collect();
    PermGroup::from_generators(2 * g, &gens)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn diagonal_and_full() {
        let a5 = PermGroup::alternating(5);
        let id = Permutation::identity(5);
        match goursat_classify(&twisted_diagonal(&a5, &id), &a5).unwrap() {
            GoursatClass::GraphOfAutomorphism { phi, verified } => {
                assert!(verified && phi.iter().all(|(a, b)| a == b));
            }
            other => panic!("{other:?}"),
        }
        let gens: Vec<Permutation> = a5.generators().iter().flat_map(|x| [x.shift(0, 10), x.shift(5, 10)]).collect();
        let full = PermGroup::from_generators(10, &gens);
        assert!(matches!(goursat_classify(&full, &a5).unwrap(), GoursatClass::Full));
    }

    #[test]
    fn outer_twist() {
        let a5 = PermGroup::alternating(5);
        let t = Permutation::transposition(5, 0, 1);
        match goursat_classify(&twisted_diagonal(&a5, &t), &a5).unwrap() {
            GoursatClass::GraphOfAutomorphism { phi, verified } => {
                assert!(verified);
                assert!(phi.iter().all(|(a, b)| *b == a.conjugate_by(&t)));
            }
            other => panic!("{other:?}"),
        }
        let x = Permutation::parse(10, "(1 2 3)").unwrap();
        assert!(matches!(
            goursat_classify(&PermGroup::from_generators(10, &[x]), &a5).unwrap(),
            GoursatClass::NotSubdirect { first_onto: false, second_onto: false }
        ));
    }
}
