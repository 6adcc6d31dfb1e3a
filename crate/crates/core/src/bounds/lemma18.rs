use serde::Serialize;

use crate::error::{Error, Result};
use crate::group::PermGroup;
use crate::irredundance::is_irredundant_generating;
use crate::perm::Permutation;

/// `x ∈ ι_{n−k}(S_n)` by the closed form: `d(x) ≤ k`, or `x` even with `d(x) = k + 1` and `k` odd.
pub fn iota_member(x: &Permutation, k: usize) -> bool {
    let d = x.displacement();
    d <= k || (x.is_even() && d == k + 1 && k % 2 == 1)
}

#[derive(Clone, Debug, Serialize)]
pub struct Lemma18Witness {
    pub x: Permutation,
    pub k: usize,
    /// Irredundant generating set of `S_n` of size `n − k` containing `x`.
    pub set: Vec<Permutation>,
    /// Sends each point to its label in the consecutive-cycle form of `x`.
    pub relabel: Permutation,
    pub even_case: bool,
    /// `n ≥ 3k + 3`.
    pub hypothesis_met: bool,
    pub verified: bool,
}

/// Relabels the points so the cycles of `x`, taken by least point, occupy `1..d_{m+1}` in order.
fn consecutive_relabel(x: &Permutation) -> (Permutation, Vec<usize>) {
    let n = x.degree();
    let mut images = vec![usize::MAX; n];
    let mut next = 0;
    let mut ends = vec![0];
    for c in x.cycles() {
        for &p in &c {
            images[p] = next;
            next += 1;
        }
        ends.push(next);
    }
    for img in images.iter_mut() {
        if *img == usize::MAX {
            *img = next;
            next += 1;
        }
    }
    (Permutation::from_images(&images).unwrap(), ends)
}

/// Builds the explicit irredundant generating set of `S_n` of length `n − k` through `x`.
/// The lemma assumes `n ≥ 3k + 3`; below that the same construction is attempted whenever its
/// indices make sense, and `hypothesis_met` records which case applied.
pub fn lemma18_construct(x: &Permutation, k: usize, n: usize) -> Result<Lemma18Witness> {
    if x.degree() != n {
        return Err(Error::DegreeMismatch(x.degree(), n));
    }
    if k == 0 {
        return Err(Error::Precondition("k must be positive".into()));
    }
    if x.is_identity() {
        return Err(Error::Precondition("the identity lies in no irredundant set".into()));
    }
    let d = x.displacement();
    let even_case = d > k;
    if !iota_member(x, k) {
        return Err(Error::Precondition(format!("d(x) = {d} is outside the range for k = {k}")));
    }
    let (sigma, ends) = consecutive_relabel(x);
    let xr = x.conjugate_by(&sigma);
    let m = ends.len() - 1;
    let dm1 = ends[m];
    // 1-based transposition (a, a+1).
    let adj = |a: usize| Permutation::transposition(n, a - 1, a);
    let mut set = vec![xr.clone()];
    if !even_case {
        let l = n - k + d - 1;
        if dm1 >= l || l > n - 1 {
            return Err(Error::Precondition(format!("no room for the tail: d_(m+1) = {dm1}, l = {l}, n = {n}")));
        }
        set.extend((1..m).map(|i| adj(ends[i])));
        set.extend((dm1..l).map(adj));
        let tail: Vec<usize> = (l - 1..n).collect();
        set.push(Permutation::cycle(n, &tail)?);
    } else {
        let t12 = adj(1);
        set.push(t12.clone());
        set.extend((1..m).map(|i| &t12 * &adj(ends[i])));
        set.extend((dm1..n).map(|t| &t12 * &adj(t)));
    }
    if set.len() != n - k {
        return Err(Error::VerificationFailed(format!("built {} elements, expected {}", set.len(), n - k)));
    }
    let back = sigma.inverse();
    let set: Vec<Permutation> = set.iter().map(|p| p.conjugate_by(&back)).collect();
    let verified = set.contains(x) && is_irredundant_generating(&PermGroup::symmetric(n), &set);
    Ok(Lemma18Witness { x: x.clone(), k, set, relabel: sigma, even_case, hypothesis_met: n >= 3 * k + 3, verified })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(n: usize, s: &str) -> Permutation {
        Permutation::parse(n, s).unwrap()
    }

    #[test]
    fn iota_examples() {
        assert!(iota_member(&p(4, "(1 2)"), 1));
        assert!(iota_member(&p(4, "(1 2 3)"), 1));
        assert!(!iota_member(&p(4, "(1 2 3 4)"), 1));
        assert!(!iota_member(&p(4, "(1 2 3 4)"), 2));
    }

    #[test]
    fn coxeter_case() {
        let w = lemma18_construct(&p(6, "(1 2)"), 1, 6).unwrap();
        let expect = ["(1 2)", "(2 3)", "(3 4)", "(4 5)", "(5 6)"].map(|s| p(6, s));
        assert_eq!(w.set, expect.to_vec());
        assert!(w.verified && w.hypothesis_met && !w.even_case);
    }

    #[test]
    fn even_case_and_relabel() {
        let w = lemma18_construct(&p(6, "(1 2 3)"), 1, 6).unwrap();
        assert!(w.even_case && w.verified && w.set.len() == 5);
        let w = lemma18_construct(&p(9, "(2 7)(4 9 5)"), 3, 9).unwrap();
        assert!(w.verified && w.set.len() == 6 && w.set.contains(&p(9, "(2 7)(4 9 5)")));
    }
}
