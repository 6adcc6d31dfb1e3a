//! Prime factorisation of group orders.

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};

const SMALL_PRIMES: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];

/// Prime factors with multiplicity, ascending.
pub fn prime_factors(n: &BigUint) -> Vec<BigUint> {
    let mut out = Vec::new();
    if n.is_zero() || n.is_one() {
        return out;
    }
    let mut m = n.clone();
    let mut d = 2u64;
    while d < 1_000_000 {
        let bd = BigUint::from(d);
        if &bd * &bd > m {
            break;
        }
        while (&m % &bd).is_zero() {
            out.push(bd.clone());
            m /= &bd;
        }
        d += if d == 2 { 1 } else { 2 };
    }
    if !m.is_one() {
        split(&m, &mut out);
    }
    out.sort();
    out
}

/// Ω(n): the number of prime factors counted with multiplicity.
pub fn big_omega(n: &BigUint) -> usize {
    prime_factors(n).len()
}

pub fn big_omega_u64(n: u64) -> usize {
    big_omega(&BigUint::from(n))
}

fn split(n: &BigUint, out: &mut Vec<BigUint>) {
    if n.is_one() {
        return;
    }
    if is_probable_prime(n) {
        out.push(n.clone());
        return;
    }
    let d = pollard_rho(n);
    split(&d, out);
    split(&(n / &d), out);
}

fn is_probable_prime(n: &BigUint) -> bool {
    if let Some(small) = n.to_u64() {
        if small < 2 {
            return false;
        }
        for p in SMALL_PRIMES {
            if small == p {
                return true;
            }
            if small % p == 0 {
                return false;
            }
        }
    }
    let one = BigUint::one();
    let n_minus_1 = n - &one;
    let mut d = n_minus_1.clone();
    let mut s = 0u32;
    while d.is_even() {
        d >>= 1;
        s += 1;
    }
    'witness: for a in SMALL_PRIMES {
        let a = BigUint::from(a) % n;
        if a.is_zero() {
            continue;
        }
        let mut x = a.modpow(&d, n);
        if x == one || x == n_minus_1 {
            continue;
        }
        for _ in 1..s {
            x = (&x * &x) % n;
            if x == n_minus_1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

fn pollard_rho(n: &BigUint) -> BigUint {
    if n.is_even() {
        return BigUint::from(2u32);
    }
    let mut c = BigUint::one();
    loop {
        let f = |x: &BigUint| (x * x + &c) % n;
        let mut x = BigUint::from(2u32);
        let mut y = x.clone();
        let mut d = BigUint::one();
        while d.is_one() {
            x = f(&x);
            y = f(&f(&y));
            let diff = if x > y { &x - &y } else { &y - &x };
            d = diff.gcd(n);
        }
        if &d != n {
            return d;
        }
        c += 1u32;
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn omega_of_small_orders() {
        assert_eq!(big_omega_u64(1), 0);
        assert_eq!(big_omega_u64(60), 4);
        assert_eq!(big_omega_u64(120), 5);
        assert_eq!(big_omega_u64(2448), 7);
    }

    #[test]
    fn large_semiprime_splits() {
        let p = BigUint::from(1_000_000_007u64);
        let q = BigUint::from(998_244_353u64);
        let f = prime_factors(&(&p * &q * 4u32));
        assert_eq!(f, vec![BigUint::from(2u32), BigUint::from(2u32), q, p]);
    }
}
