//! Overgroups of intransitive subgroups of the alternating group.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::group::PermGroup;
use crate::perm::Permutation;

/// `Π S_{X_i}` for disjoint point sets, generated by star transpositions.
pub fn young_subgroup(n: usize, blocks: &[Vec<usize>]) -> PermGroup {
    PermGroup::from_generators(n, &young_generators(n, blocks))
}

pub fn young_generators(n: usize, blocks: &[Vec<usize>]) -> Vec<Permutation> {
    let mut gens = Vec::new();
    for b in blocks {
        for &y in b.iter().skip(1) {
            gens.push(Permutation::transposition(n, b[0], y));
        }
    }
    gens
}

/// `(S_X × S_Y) ∩ A_n` with `Y` the complement of `X`.
pub fn intransitive_even(n: usize, x: &[usize]) -> PermGroup {
    let y = complement(n, x);
    young_subgroup(n, &[x.to_vec(), y]).even_part()
}

/// `(S_X ≀ S_2) ∩ A_n` for `|X| = n/2`, the swap pairing the sorted points of `X` and `Y`.
pub fn balanced_wreath_even(n: usize, x: &[usize]) -> PermGroup {
    let y = complement(n, x);
    let mut xs = x.to_vec();
    xs.sort_unstable();
    let mut images: Vec<usize> = (0..n).collect();
    for (&a, &b) in xs.iter().zip(&y) {
        images[a] = b;
        images[b] = a;
    }
    let mut gens = young_generators(n, &[xs, y]);
    gens.push(Permutation::from_images(&images).unwrap());
    PermGroup::from_generators(n, &gens).even_part()
}

fn complement(n: usize, x: &[usize]) -> Vec<usize> {
    (0..n).filter(|p| !x.contains(p)).collect()
}

#[derive(Clone, Debug, Serialize)]
#[serde(tag = "outcome", rename_all = "snake_case")]
pub enum AlmostMaximal {
    Maximal,
    UniqueOvergroup { generators: Vec<Permutation>, order: u64 },
    Counterexample { h: Permutation, generated_order: u64 },
}

/// Checks every `h ∈ A_n \ G` for `G = (S_X × S_Y) ∩ A_n`: either `⟨G, h⟩ = A_n`, or, when
/// `|X| = n/2`, `⟨G, h⟩` lies in the balanced wreath intersection, which is itself maximal.
pub fn verify_almost_maximal(n: usize, x: &[usize]) -> Result<AlmostMaximal> {
    if !(3..=8).contains(&n) {
        return Err(Error::Precondition(format!("exhaustive check needs 3 <= n <= 8, got {n}")));
    }
    let mut xs = x.to_vec();
    xs.sort_unstable();
    xs.dedup();
    if xs.is_empty() || xs.len() >= n || xs.iter().any(|&p| p >= n) {
        return Err(Error::Precondition("X must be a proper nonempty subset of the points".into()));
    }
    let g = intransitive_even(n, &xs);
    let an = PermGroup::alternating(n);
    let an_order = an.order_u64().unwrap();
    let balanced = 2 * xs.len() == n;
    let m = balanced.then(|| balanced_wreath_even(n, &xs));
    for h in an.elements(usize::MAX)? {
        if g.contains(&h) {
            continue;
        }
        let mut f = g.clone();
        f.add_generator(h.clone());
        let order = f.order_u64().unwrap();
        if order == an_order {
            continue;
        }
        match &m {
            Some(m) if m.contains(&h) => {}
            _ => return Ok(AlmostMaximal::Counterexample { h, generated_order: order }),
        }
    }
    let Some(m) = m else { return Ok(AlmostMaximal::Maximal) };
    for h in an.elements(usize::MAX)? {
        if m.contains(&h) {
            continue;
        }
        let mut f = m.clone();
        f.add_generator(h.clone());
        let order = f.order_u64().unwrap();
        if order != an_order {
            return Ok(AlmostMaximal::Counterexample { h, generated_order: order });
        }
    }
    Ok(AlmostMaximal::UniqueOvergroup { order: m.order_u64().unwrap(), generators: m.generators().to_vec() })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_cases() {
        assert!(matches!(verify_almost_maximal(4, &[0]).unwrap(), AlmostMaximal::Maximal));
        let r = verify_almost_maximal(6, &[0, 1, 2]).unwrap();
        assert!(matches!(r, AlmostMaximal::UniqueOvergroup { order: 36, .. }), "{r:?}");
        assert!(matches!(verify_almost_maximal(6, &[0, 1]).unwrap(), AlmostMaximal::Maximal));
    }

    #[test]
    fn intransitive_even_order() {
        assert_eq!(intransitive_even(7, &[0, 1, 2]).order_u64(), Some(6 * 24 / 2));
    }
}
