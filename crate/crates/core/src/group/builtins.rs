//! Named groups: `Sn`, `An` (n ≤ 64), `Cn`, `Dn`, `PSL2(p)` for primes p ≤ 61.

use crate::error::{Error, Result};
use crate::group::PermGroup;
use crate::perm::Permutation;

pub const BUILTIN_MAX_DEGREE: usize = 64;

/// `PSL_2(p)` on the projective line `0, 1, .., p−1, ∞` (points 1..p+1, infinity last),
/// generated by the Möbius maps `x ↦ x + 1` and `x ↦ −1/x`.
pub fn psl2(p: usize) -> Result<PermGroup> {
    if p < 2 || p + 1 > BUILTIN_MAX_DEGREE || !is_prime(p) {
        return Err(Error::InvalidInput(format!("PSL2({p}) needs a prime p with p + 1 ≤ {BUILTIN_MAX_DEGREE}")));
    }
    let inf = p;
    let shift: Vec<usize> = (0..=p).map(|x| if x == inf { inf } else { (x + 1) % p }).collect();
    let invert: Vec<usize> = (0..=p)
        .map(|x| match x {
            _ if x == inf => 0,
            0 => inf,
            _ => p - (1..p).find(|y| x * y % p == 1).expect("p is prime"),
        })
        .collect();
    let gens = vec![Permutation::from_images(&shift)?, Permutation::from_images(&invert)?];
    Ok(PermGroup::from_generators(p + 1, &gens).named(format!("PSL2({p})")))
}

fn is_prime(p: usize) -> bool {
    p >= 2 && (2..p).take_while(|d| d * d <= p).all(|d| !p.is_multiple_of(d))
}

/// Parses a builtin name such as `S4`, `A7`, `C5`, `D6` or `PSL2(17)`.
pub fn builtin(name: &str) -> Result<PermGroup> {
    let name = name.trim();
    let bad = || Error::InvalidInput(format!("unknown builtin group {name:?}"));
    if let Some(rest) = name.strip_prefix("PSL2(").and_then(|r| r.strip_suffix(')')) {
        return psl2(rest.parse().map_err(|_| bad())?);
    }
    let (kind, num) = name.split_at(1);
    let n: usize = num.parse().map_err(|_| bad())?;
    if n == 0 || n > BUILTIN_MAX_DEGREE {
        return Err(Error::InvalidInput(format!("builtin degree {n} outside 1..={BUILTIN_MAX_DEGREE}")));
    }
    match kind {
        "S" => Ok(PermGroup::symmetric(n)),
        "A" => Ok(PermGroup::alternating(n)),
        "C" => Ok(PermGroup::cyclic(n)),
        "D" => Ok(PermGroup::dihedral(n)),
        _ => Err(bad()),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn psl2_orders() {
        assert_eq!(psl2(7).unwrap().order_u64(), Some(168));
        assert_eq!(psl2(17).unwrap().order_u64(), Some(2448));
        assert_eq!(psl2(11).unwrap().order_u64(), Some(660));
        assert_eq!(psl2(13).unwrap().order_u64(), Some(1092));
        assert!(psl2(9).is_err());
    }

    #[test]
    fn parses_names() {
        assert_eq!(builtin("S4").unwrap().order_u64(), Some(24));
        assert_eq!(builtin("A6").unwrap().order_u64(), Some(360));
        assert_eq!(builtin("PSL2(7)").unwrap().degree(), 8);
        assert!(builtin("S65").is_err());
        assert!(builtin("Q8").is_err());
    }
}
