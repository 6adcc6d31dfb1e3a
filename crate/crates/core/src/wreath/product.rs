use num_bigint::BigUint;
use num_traits::Pow;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::group::table::FiniteGroup;
use crate::group::PermGroup;
use crate::perm::{Permutation, MAX_DEGREE};

/// `S ≀ P` acting on `|Γ|·|Δ|` points; point `b·|Γ| + x` is point `x` of block `b`.
#[derive(Clone, Debug, Serialize)]
pub struct Wreath {
    #[serde(skip)]
    pub group: PermGroup,
    pub base_degree: usize,
    pub top_degree: usize,
    pub degree: usize,
    pub order: String,
}

/// `x` acting on block `block` and fixing every other point.
pub fn embed_in_block(x: &Permutation, block: usize, blocks: usize) -> Permutation {
    let g = x.degree();
    x.shift(block * g, g * blocks)
}

/// The element `(v_1, .., v_d)` of the base group `S^d`.
pub fn embed_vector(v: &[Permutation]) -> Permutation {
    let d = v.len();
    v.iter().enumerate().fold(Permutation::identity(v[0].degree() * d), |acc, (b, x)| &acc * &embed_in_block(x, b, d))
}

/// `p` permuting whole blocks of size `g`.
pub fn embed_top(p: &Permutation, g: usize) -> Permutation {
    let images: Vec<usize> = (0..p.degree() * g).map(|pt| p.image(pt / g) * g + pt % g).collect();
    Permutation::from_images(&images).expect("block permutation is a permutation")
}

pub fn build_wreath(base: &PermGroup, top: &PermGroup) -> Result<Wreath> {
    let (g, d) = (base.degree(), top.degree());
    let n = g * d;
    if n > MAX_DEGREE {
        return Err(Error::DegreeCap(n, MAX_DEGREE));
    }
    let mut gens: Vec<Permutation> = top
        .orbits()
        .iter()
        .flat_map(|orbit| base.generators().iter().map(|x| embed_in_block(x, orbit[0], d)))
        .collect();
    gens.extend(top.generators().iter().map(|p| embed_top(p, g)));
    let group = PermGroup::from_generators(n, &gens);
    let expected: BigUint = Pow::pow(base.order(), d) * top.order();
    let order = group.order();
    if order != expected {
        return Err(Error::VerificationFailed(format!("wreath order {order} differs from |S|^d·|P| = {expected}")));
    }
    Ok(Wreath { group, base_degree: g, top_degree: d, degree: n, order: order.to_string() })
}

/// Transitive on ordered pairs of distinct points.
pub fn is_two_transitive(p: &PermGroup) -> bool {
    let d = p.degree();
    if d < 2 {
        return false;
    }
    let mut seen = vec![false; d * d];
    seen[1] = true;
    let mut stack = vec![(0usize, 1usize)];
    let mut count = 1;
    while let Some((a, b)) = stack.pop() {
        for g in p.generators() {
            let (x, y) = (g.image(a), g.image(b));
            if !seen[x * d + y] {
                seen[x * d + y] = true;
                count += 1;
                stack.push((x, y));
            }
        }
    }
    count == d * (d - 1)
}

/// Nonabelian and every nontrivial conjugacy class has normal closure `S`.
pub fn is_nonabelian_simple(s: &PermGroup) -> Result<bool> {
    let gens = s.generators();
    if gens.iter().all(|a| gens.iter().all(|b| a.commutes_with(b))) {
        return Ok(false);
    }
    let fg = FiniteGroup::new(s)?;
    let classes = fg.conjugacy_classes(&[])?;
    let mut reps: Vec<u32> = classes.clone();
    reps.sort_unstable();
    reps.dedup();
    Ok(reps.into_iter().filter(|&r| r != 0).all(|r| {
        let x = fg.element(r).clone();
        PermGroup::from_generators(s.degree(), &[x]).closure_under_conjugation(gens).same_group(s)
    }))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn orders() {
        let s2 = PermGroup::symmetric(2);
        assert_eq!(build_wreath(&s2, &s2).unwrap().order, "8");
        let a5 = PermGroup::alternating(5);
        let w = build_wreath(&a5, &PermGroup::symmetric(3)).unwrap();
        assert_eq!(w.order, (60u64.pow(3) * 6).to_string());
        assert_eq!(w.degree, 15);
        assert!(build_wreath(&a5, &PermGroup::trivial(1)).unwrap().group.same_group(&a5));
    }

    #[test]
    fn predicates() {
        assert!(is_two_transitive(&PermGroup::symmetric(3)));
        assert!(is_two_transitive(&PermGroup::alternating(5)));
        assert!(!is_two_transitive(&PermGroup::cyclic(5)));
        assert!(is_nonabelian_simple(&PermGroup::alternating(5)).unwrap());
        assert!(!is_nonabelian_simple(&PermGroup::symmetric(5)).unwrap());
        assert!(!is_nonabelian_simple(&PermGroup::cyclic(5)).unwrap());
    }
}
