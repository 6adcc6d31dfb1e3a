use serde::Serialize;

use crate::decomposition::OrderedPartition;
use crate::error::{Error, Result};
use crate::perm::Permutation;

/// `h = α · β_0 · β_1 ⋯ β_p` with `α ∈ Π S_{X_i}`, `β_0 ∈ S_{X_0}`, and each `β_i` a single
/// cycle meeting at least two parts. `q[i]` lists the blocks (1-based) that `β_{i+1}` meets.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MDecomposition {
    pub alpha: Permutation,
    pub beta0: Permutation,
    pub betas: Vec<Permutation>,
    pub q: Vec<Vec<usize>>,
}

impl MDecomposition {
    pub fn beta(&self) -> Permutation {
        self.betas.iter().fold(self.beta0.clone(), |acc, b| &acc * b)
    }

    pub fn product(&self) -> Permutation {
        &self.alpha * &self.beta()
    }

    /// Checks every structural condition against `h` and `p`.
    pub fn verify(&self, h: &Permutation, p: &OrderedPartition) -> Result<()> {
        let fail = |m: String| Err(Error::VerificationFailed(m));
        if &self.product() != h {
            return fail("α·β differs from h".into());
        }
        if (0..p.degree()).any(|x| {
            p.block_of(self.alpha.image(x)) != p.block_of(x) || (p.block_of(x) == 0 && self.alpha.image(x) != x)
        }) {
            return fail("α is not in Π S_{X_i}".into());
        }
        if self.beta0.support().iter().any(|&x| p.block_of(x) != 0) {
            return fail("β_0 is not in S_{X_0}".into());
        }
        let mut owner = vec![usize::MAX; p.m() + 1];
        let mut used = vec![false; p.degree()];
        for &x in &self.beta0.support() {
            used[x] = true;
        }
        for (i, b) in self.betas.iter().enumerate() {
            let cycles = b.cycles();
            if cycles.len() != 1 {
                return fail(format!("β_{} is not a single cycle", i + 1));
            }
            let mut parts: Vec<usize> = cycles[0].iter().map(|&x| p.block_of(x)).collect();
            parts.sort_unstable();
            parts.dedup();
            if parts.len() < 2 {
                return fail(format!("β_{} lies inside one part", i + 1));
            }
            let mut touched: Vec<usize> = parts.into_iter().filter(|&j| j > 0).collect();
            touched.sort_unstable();
            if touched != self.q[i] {
                return fail(format!("Y_{} does not match the blocks of β_{}", i + 1, i + 1));
            }
            for &j in &touched {
                if owner[j] != usize::MAX {
                    return fail(format!("block {j} meets two β cycles"));
                }
                owner[j] = i;
            }
            for &x in &cycles[0] {
                if used[x] {
                    return fail("β cycles overlap".into());
                }
                used[x] = true;
            }
        }
        Ok(())
    }
}

fn rotate_to(cycle: &[usize], start: usize) -> Vec<usize> {
    let k = cycle.iter().position(|&x| x == start).unwrap();
    cycle[k..].iter().chain(&cycle[..k]).copied().collect()
}

/// M-decomposition of `h` with respect to `p`: cycles sharing a block are merged with
/// `(a,x..)(b,y..) = (a b)(a,x..,b,y..)`, the transpositions collecting into α.
pub fn m_decompose(h: &Permutation, p: &OrderedPartition) -> Result<MDecomposition> {
    let n = p.degree();
    if h.degree() != n {
        return Err(Error::DegreeMismatch(h.degree(), n));
    }
    let mut alpha = Permutation::identity(n);
    let mut beta0 = Permutation::identity(n);
    let mut mixed: Vec<Vec<usize>> = Vec::new();
    for c in h.cycles() {
        let mut parts: Vec<usize> = c.iter().map(|&x| p.block_of(x)).collect();
        parts.sort_unstable();
        parts.dedup();
        let cyc = Permutation::cycle(n, &c)?;
        match parts.as_slice() {
            [0] => beta0 = &beta0 * &cyc,
            [_] => alpha = &alpha * &cyc,
            _ => mixed.push(c),
        }
    }
    let blocks_of = |c: &[usize]| -> Vec<usize> {
        let mut b: Vec<usize> = c.iter().map(|&x| p.block_of(x)).filter(|&j| j > 0).collect();
        b.sort_unstable();
        b.dedup();
        b
    };
    // Classes of mixed cycles connected through shared blocks.
    let mut class = vec![usize::MAX; mixed.len()];
    let mut nclass = 0;
    for s in 0..mixed.len() {
        if class[s] != usize::MAX {
            continue;
        }
        class[s] = nclass;
        let mut stack = vec![s];
        while let Some(a) = stack.pop() {
            let ba = blocks_of(&mixed[a]);
            for b in 0..mixed.len() {
                if class[b] == usize::MAX && blocks_of(&mixed[b]).iter().any(|j| ba.contains(j)) {
                    class[b] = nclass;
                    stack.push(b);
                }
            }
        }
        nclass += 1;
    }
    let mut betas = Vec::new();
    let mut q = Vec::new();
    for ci in 0..nclass {
        let mut rest: Vec<Vec<usize>> =
            (0..mixed.len()).filter(|&i| class[i] == ci).map(|i| mixed[i].clone()).collect();
        let mut cur = rest.remove(0);
        while !rest.is_empty() {
            let cur_blocks = blocks_of(&cur);
            let k = rest
                .iter()
                .position(|c| blocks_of(c).iter().any(|j| cur_blocks.contains(j)))
                .expect("class is connected");
            let other = rest.remove(k);
            let j = *blocks_of(&other).iter().find(|j| cur_blocks.contains(j)).unwrap();
            let a = *cur.iter().filter(|&&x| p.block_of(x) == j).min().unwrap();
            let b = *other.iter().filter(|&&x| p.block_of(x) == j).min().unwrap();
            alpha = &alpha * &Permutation::transposition(n, a, b);
            let mut merged = rotate_to(&cur, a);
            merged.extend(rotate_to(&other, b));
            cur = merged;
        }
        q.push(blocks_of(&cur).into_iter().collect());
        betas.push(Permutation::cycle(n, &cur)?);
    }
    let d = MDecomposition { alpha, beta0, betas, q };
    d.verify(h, p)?;
    Ok(d)
}

/// Strong M-decomposition for a two-part split `X ∪ Y`: `h = α β` with `α ∈ S_X × S_Y`
/// and `β` a cycle alternating between `X` and `Y` (or the identity).
pub fn strong_m_decompose(h: &Permutation, x: &[usize], y: &[usize]) -> Result<(Permutation, Permutation)> {
    let n = h.degree();
    let x0: Vec<usize> = (0..n).filter(|p| !x.contains(p) && !y.contains(p)).collect();
    if x0.iter().any(|&p| h.image(p) != p) {
        return Err(Error::Precondition("h moves points outside X ∪ Y".into()));
    }
    let part = OrderedPartition::new(n, x0, vec![x.to_vec(), y.to_vec()])?;
    let d = m_decompose(h, &part)?;
    let mut alpha = d.alpha.clone();
    let Some(beta) = d.betas.first() else {
        return Ok((alpha, Permutation::identity(n)));
    };
    let side = |p: usize| part.block_of(p);
    let mut cyc = beta.cycles().remove(0);
    loop {
        let len = cyc.len();
        let Some(i) = (0..len).find(|&i| len > 2 && side(cyc[i]) == side(cyc[(i + 1) % len])) else { break };
        let (u, v) = (cyc[i], cyc[(i + 1) % len]);
        alpha = &alpha * &Permutation::transposition(n, u, v);
        cyc.remove(i);
    }
    let beta = Permutation::cycle(n, &cyc)?;
    if &(&alpha * &beta) != h {
        return Err(Error::VerificationFailed("strong decomposition does not multiply back".into()));
    }
    Ok((alpha, beta))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(n: usize, s: &str) -> Permutation {
        Permutation::parse(n, s).unwrap()
    }

    #[test]
    fn single_mixed_cycle() {
        let part = OrderedPartition::parse("0:|1:1,2|2:3,4").unwrap();
        let d = m_decompose(&p(4, "(1 3 2 4)"), &part).unwrap();
        assert!(d.alpha.is_identity());
        assert_eq!(d.betas, vec![p(4, "(1 3 2 4)")]);
        assert_eq!(d.q, vec![vec![1, 2]]);
    }

    #[test]
    fn inside_block_goes_to_alpha() {
        let part = OrderedPartition::parse("0:|1:1,2,3|2:4,5").unwrap();
        let d = m_decompose(&p(5, "(1 2)(4 5)"), &part).unwrap();
        assert_eq!(d.alpha, p(5, "(1 2)(4 5)"));
        assert!(d.betas.is_empty() && d.beta0.is_identity());
    }

    #[test]
    fn merges_cycles_sharing_a_block() {
        let part = OrderedPartition::parse("0:7|1:1,2|2:3,4|3:5,6").unwrap();
        let h = p(7, "(1 3)(2 5)(6 7)");
        let d = m_decompose(&h, &part).unwrap();
        assert_eq!(d.betas.len(), 1);
        assert_eq!(d.q, vec![vec![1, 2, 3]]);
    }

    #[test]
    fn strong_example() {
        let (a, b) = strong_m_decompose(&p(4, "(1 2 3)"), &[0, 1], &[2, 3]).unwrap();
        assert_eq!(a, p(4, "(1 2)"));
        assert_eq!(b, p(4, "(2 3)"));
    }
}
