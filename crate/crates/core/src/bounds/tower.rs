use std::sync::{Mutex, OnceLock};

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};
use rustc_hash::FxHashMap;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::group::factorial;

/// Loop iterations one top-level call of `f` may spend before giving up as intractable.
pub const F_WORK_LIMIT: u64 = 2_000_000;

type Memo = FxHashMap<(u64, BigRational), Option<BigUint>>;

fn memo() -> &'static Mutex<Memo> {
    static MEMO: OnceLock<Mutex<Memo>> = OnceLock::new();
    MEMO.get_or_init(|| Mutex::new(FxHashMap::default()))
}

pub fn rational(num: i64, den: i64) -> BigRational {
    BigRational::new(num.into(), den.into())
}

struct FEval<'a> {
    memo: &'a mut Memo,
    work: u64,
}

impl FEval<'_> {
    /// `None` when the maximisation range is empty at every level.
    fn eval(&mut self, k: u64, q: &BigRational) -> Result<Option<BigUint>> {
        if k == 1 {
            return Ok(Some(q.recip().floor().to_integer().to_biguint().unwrap_or_default()));
        }
        let key = (k, q.clone());
        if let Some(v) = self.memo.get(&key) {
            return Ok(v.clone());
        }
        let inv = q.recip();
        let lo: BigInt = inv.floor().to_integer() + 1;
        let hi: BigInt = (inv * BigInt::from(k)).floor().to_integer();
        let span = if hi >= lo { (&hi - &lo + 1u32).to_u64().unwrap_or(u64::MAX) } else { 0 };
        self.work = self.work.saturating_add(span);
        if self.work > F_WORK_LIMIT {
            return Err(Error::Intractable(format!("f({k}, {q}) exceeds the work limit of {F_WORK_LIMIT}")));
        }
        let mut best: Option<BigUint> = None;
        let mut t = lo;
        while t <= hi {
            let rest = q - BigRational::new(BigInt::one(), t.clone());
            if let Some(v) = self.eval(k - 1, &rest)? {
                let cand = v * t.to_biguint().unwrap();
                if best.as_ref().is_none_or(|b| &cand > b) {
                    best = Some(cand);
                }
            }
            t += 1;
        }
        self.memo.insert(key, best.clone());
        Ok(best)
    }
}

/// `f(1, q) = ⌊1/q⌋`, `f(k, q) = max_{1/q < t ≤ k/q} t·f(k−1, q − 1/t)`: an upper bound on
/// `Π d_i` over integers with `Σ 1/d_i = q`.
pub fn f(k: u64, q: &BigRational) -> Result<BigUint> {
    if k == 0 {
        return Err(Error::InvalidInput("k must be positive".into()));
    }
    if *q <= BigRational::zero() {
        return Err(Error::InvalidInput("q must be positive".into()));
    }
    let mut guard = memo().lock().unwrap_or_else(|e| e.into_inner());
    let mut ev = FEval { memo: &mut guard, work: 0 };
    ev.eval(k, q)?.ok_or_else(|| Error::Infeasible(format!("no integer t in (1/q, k/q] for f({k}, {q})")))
}

fn f_one(k: u64) -> Result<BigUint> {
    f(k, &BigRational::one())
}

/// `f₁(u, k) = k!·Σ_{t=0}^{k} f(u+t, 1)`.
pub fn f1(u: u64, k: u64) -> Result<BigUint> {
    let mut sum = BigUint::zero();
    for t in 0..=k {
        sum += f_one(u + t)?;
    }
    Ok(factorial(k as usize) * sum)
}

/// Restricted growth strings of length `len`, i.e. set partitions of `0..len`.
fn for_each_set_partition(len: usize, mut visit: impl FnMut(&[usize])) {
    fn rec(a: &mut Vec<usize>, len: usize, max: usize, visit: &mut dyn FnMut(&[usize])) {
        if a.len() == len {
            visit(a);
            return;
        }
        let top = if a.is_empty() { 0 } else { max + 1 };
        for v in 0..=top {
            a.push(v);
            rec(a, len, max.max(v), visit);
            a.pop();
        }
    }
    rec(&mut Vec::with_capacity(len), len, 0, &mut visit);
}

/// `g(k, μ) = k!·Σ_Q Π f₁(|Y_i|, k)` over all set partitions `Q` of `μ`; `g(k, ∅) = k!`.
pub fn g(k: u64, mu: &[u64]) -> Result<BigUint> {
    let f1s: Vec<BigUint> = (1..=mu.len() as u64).map(|u| f1(u, k)).collect::<Result<_>>()?;
    let mut sum = BigUint::zero();
    for_each_set_partition(mu.len(), |rgs| {
        let blocks = rgs.iter().max().map_or(0, |&b| b + 1);
        let mut sizes = vec![0usize; blocks];
        for &b in rgs {
            sizes[b] += 1;
        }
        sum += sizes.iter().fold(BigUint::one(), |acc, &s| acc * &f1s[s - 1]);
    });
    Ok(factorial(k as usize) * sum)
}

/// `g₁(k, l) = max_{μ ⊆ {1..l}} g(k, μ)`. `g` only sees `|μ|`, so one subset per size suffices.
pub fn g1(k: u64, l: u64) -> Result<BigUint> {
    let mut best = BigUint::zero();
    for size in 0..=l {
        let mu: Vec<u64> = (1..=size).collect();
        best = best.max(g(k, &mu)?);
    }
    Ok(best)
}

/// `φ(k, l) = (2l + 1)·g₁(k, l)`.
pub fn phi(k: u64, l: u64) -> Result<BigUint> {
    Ok(g1(k, l)? * (2 * l + 1))
}

/// `ψ(k, l) = φ(k, l) + k + l`.
pub fn psi(k: u64, l: u64) -> Result<BigUint> {
    Ok(phi(k, l)? + k + l)
}

/// `ω(k, l) = ψ(k, l) + 2l(k + l)`.
pub fn omega(k: u64, l: u64) -> Result<BigUint> {
    Ok(psi(k, l)? + 2 * l * (k + l))
}

/// Default `n_0` for `Ψ`.
pub const DEFAULT_N0: u64 = 25;

fn psi_step(k: u64, prev: &BigUint, omega_max: &BigUint, n0: u64) -> BigUint {
    let a = prev * 2u32 * (k - 1);
    let b = (omega_max + k) * (k - 1);
    a.max(b).max(BigUint::from(n0)).max(BigUint::from(k * k))
}

/// `Ψ(1) = 1`, `Ψ(k) = max{2Ψ(k−1)(k−1), (k + max_{x ≤ Ψ(k−1), y ≤ 3} ω(x, y))(k−1), n_0, k²}`.
pub fn capital_psi(k: u64, n0: u64) -> Result<BigUint> {
    if !(1..=7).contains(&k) {
        return Err(Error::InvalidInput(format!("Ψ is defined for 1 ≤ k ≤ 7, got {k}")));
    }
    let mut value = BigUint::one();
    for j in 2..=k {
        let x_max = value.to_u64().ok_or_else(|| Error::Intractable(format!("Ψ({}) = {value} is too large", j - 1)))?;
        let mut om = BigUint::zero();
        for x in 0..=x_max {
            for y in 0..=3 {
                om = om.max(omega(x, y).map_err(|e| match e {
                    Error::Intractable(m) => Error::Intractable(format!("Ψ({j}) needs ω({x}, {y}): {m}")),
                    e => e,
                })?);
            }
        }
        value = psi_step(j, &value, &om, n0);
    }
    Ok(value)
}

/// A lower bound on `Ψ(k)` that is always computable: each step keeps every term of the
/// maximum except the `ω` one, which is replaced by `ω(1, 3) ≤ max_{x ≤ Ψ(k−1), y ≤ 3} ω(x, y)`.
pub fn capital_psi_lower_bound(k: u64, n0: u64) -> Result<BigUint> {
    if !(1..=7).contains(&k) {
        return Err(Error::InvalidInput(format!("Ψ is defined for 1 ≤ k ≤ 7, got {k}")));
    }
    let om = omega(1, 3)?;
    let mut value = BigUint::one();
    for j in 2..=k {
        value = psi_step(j, &value, &om, n0);
    }
    Ok(value)
}

#[derive(Clone, Debug, Serialize)]
pub struct GridPoint {
    pub function: &'static str,
    pub k: u64,
    pub l: u64,
    /// Decimal value, or `None` when intractable.
    pub value: Option<String>,
}

/// `(k, l)` on the grid.
pub type GridIndex = (u64, u64);

#[derive(Clone, Debug, Serialize)]
pub struct MonotonicityReport {
    pub points: Vec<GridPoint>,
    /// `(function, (k, l), (k', l'))` where the value decreases from the first to the second point.
    pub violations: Vec<(String, GridIndex, GridIndex)>,
    pub intractable: usize,
}

/// Evaluates `f(·, 1)`, `f₁`, `g₁`, `φ`, `ψ`, `ω` on `0 ≤ k, l ≤ max` (`f₁`'s first argument and
/// `f`'s `k` start at 1) and lists every step where a value decreases.
pub fn monotonicity_grid(max: u64) -> MonotonicityReport {
    type Fun = fn(u64, u64) -> Result<BigUint>;
    let funs: [(&'static str, Fun, u64); 6] = [
        ("f", |k, _| f(k, &BigRational::one()), 1),
        ("f1", f1, 1),
        ("g1", g1, 0),
        ("phi", phi, 0),
        ("psi", psi, 0),
        ("omega", omega, 0),
    ];
    let mut points = Vec::new();
    let mut violations = Vec::new();
    let mut intractable = 0;
    for (name, fun, lo) in funs {
        let l_max = if name == "f" { 0 } else { max };
        let mut table: FxHashMap<(u64, u64), Option<BigUint>> = FxHashMap::default();
        for k in lo..=max {
            for l in 0..=l_max {
                let v = fun(k, l).ok();
                intractable += usize::from(v.is_none());
                points.push(GridPoint { function: name, k, l, value: v.as_ref().map(|v| v.to_string()) });
                table.insert((k, l), v);
            }
        }
        for (&(k, l), v) in &table {
            let Some(v) = v else { continue };
            for next in [(k + 1, l), (k, l + 1)] {
                if let Some(Some(w)) = table.get(&next) {
                    if w < v {
                        violations.push((name.to_string(), (k, l), next));
                    }
                }
            }
        }
    }
    violations.sort();
    MonotonicityReport { points, violations, intractable }
}

/// `max Π d_i` over `d_1 ≤ .. ≤ d_k` with `Σ 1/d_i = q`, the first `k − 1` bounded by `cap`
/// and the last solved for exactly; 0 when no tuple exists. Independent of the recursion.
pub fn f_brute_force(k: usize, q: &BigRational, cap: u64) -> BigUint {
    fn rec(k: usize, q: &BigRational, min: u64, cap: u64) -> Option<BigUint> {
        if *q <= BigRational::zero() {
            return None;
        }
        if k == 1 {
            let inv = q.recip();
            return (inv.is_integer() && inv.to_integer() >= BigInt::from(min))
                .then(|| inv.to_integer().to_biguint().unwrap());
        }
        let mut best: Option<BigUint> = None;
        for d in min.max(1)..=cap {
            // The smallest of the remaining k terms is d, so k/d ≥ q.
            if BigRational::new(BigInt::from(k as u64), BigInt::from(d)) < *q {
                break;
            }
            let rest = q - BigRational::new(BigInt::one(), BigInt::from(d));
            if let Some(v) = rec(k - 1, &rest, d, cap) {
                let cand = v * d;
                if best.as_ref().is_none_or(|b| &cand > b) {
                    best = Some(cand);
                }
            }
        }
        best
    }
    rec(k, q, 1, cap).unwrap_or_default()
}

/// `Σ_Q Π w(|Y|)` over set partitions of an `s`-set, by the first-block recurrence.
pub fn set_partition_weight_sum(s: usize, w: &[BigUint]) -> BigUint {
    let mut p = vec![BigUint::one()];
    for n in 1..=s {
        let mut total = BigUint::zero();
        for j in 1..=n {
            total += binomial(n - 1, j - 1) * &w[j - 1] * &p[n - j];
        }
        p.push(total);
    }
    p[s].clone()
}

fn binomial(n: usize, k: usize) -> BigUint {
    (0..k).fold(BigUint::one(), |acc, i| acc * (n - i) / (i + 1))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn b(v: u64) -> BigUint {
        BigUint::from(v)
    }

    #[test]
    fn f_small_values() {
        let one = BigRational::one();
        assert_eq!(f(1, &one).unwrap(), b(1));
        assert_eq!(f(2, &one).unwrap(), b(4));
        assert_eq!(f(3, &one).unwrap(), b(36));
        assert_eq!(f(4, &one).unwrap(), b(1764));
        assert!(matches!(f(2, &rational(3, 1)), Err(Error::Infeasible(_))));
    }

    #[test]
    fn tower_values() {
        assert_eq!(f1(1, 0).unwrap(), b(1));
        assert_eq!(g(0, &[1]).unwrap(), b(1));
        assert_eq!(g(3, &[]).unwrap(), b(6));
        assert_eq!(phi(0, 1).unwrap(), b(3));
        assert_eq!(psi(0, 2).unwrap(), b(27));
        assert_eq!(omega(0, 2).unwrap(), b(35));
        assert_eq!(omega(1, 3).unwrap(), b(17703));
        assert_eq!(capital_psi(1, 25).unwrap(), b(1));
        assert_eq!(capital_psi(2, 25).unwrap(), b(17705));
        assert!(capital_psi_lower_bound(3, 25).unwrap() > b(17705));
    }

    #[test]
    fn g_matches_recurrence() {
        for k in 0..3 {
            for s in 0..5usize {
                let w: Vec<BigUint> = (1..=s as u64).map(|u| f1(u, k).unwrap()).collect();
                let mu: Vec<u64> = (10..10 + s as u64).collect();
                assert_eq!(g(k, &mu).unwrap(), factorial(k as usize) * set_partition_weight_sum(s, &w));
            }
        }
    }
}
