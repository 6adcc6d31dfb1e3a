//! Stabilizer chains built by deterministic Schreier–Sims.

use num_bigint::BigUint;

use crate::perm::Permutation;

const NONE: u32 = u32::MAX;

#[derive(Clone, Debug)]
struct Level {
    base: usize,
    gens: Vec<usize>,
    orbit: Vec<u8>,
    pos: Vec<u32>,
    transversal: Vec<Permutation>,
    inv_transversal: Vec<Permutation>,
    done: Vec<usize>,
}

impl Level {
    fn new(n: usize, base: usize) -> Self {
        let mut pos = vec![NONE; n];
        pos[base] = 0;
        Level {
            base,
            gens: Vec::new(),
            orbit: vec![base as u8],
            pos,
            transversal: vec![Permutation::identity(n)],
            inv_transversal: vec![Permutation::identity(n)],
            done: vec![0],
        }
    }
}

/// Base and strong generating set with explicit transversals.
#[derive(Clone, Debug)]
pub struct StabChain {
    n: usize,
    strong: Vec<Permutation>,
    levels: Vec<Level>,
}

impl StabChain {
    pub fn new(n: usize, gens: &[Permutation]) -> Self {
        let mut chain = StabChain { n, strong: Vec::new(), levels: Vec::new() };
        for g in gens {
            chain.insert(g);
        }
        chain
    }

    pub fn degree(&self) -> usize {
        self.n
    }

    pub fn base(&self) -> Vec<usize> {
        self.levels.iter().map(|l| l.base).collect()
    }

    pub fn strong_generators(&self) -> &[Permutation] {
        &self.strong
    }

    pub fn orbit_sizes(&self) -> Vec<usize> {
        self.levels.iter().map(|l| l.orbit.len()).collect()
    }

    pub fn order(&self) -> BigUint {
        self.levels.iter().fold(BigUint::from(1u32), |acc, l| acc * BigUint::from(l.orbit.len()))
    }

    /// Sifts `g` from level `start`; returns the residue and the level where sifting stopped.
    pub fn sift_from(&self, g: &Permutation, start: usize) -> (Permutation, usize) {
        let mut h = g.clone();
        for j in start..self.levels.len() {
            let lvl = &self.levels[j];
            let p = lvl.pos[h.image(lvl.base)];
            if p == NONE {
                return (h, j);
            }
            h = lvl.inv_transversal[p as usize].compose(&h);
        }
        (h, self.levels.len())
    }

    pub fn contains(&self, g: &Permutation) -> bool {
        if g.degree() != self.n {
            return false;
        }
        let (h, j) = self.sift_from(g, 0);
        j == self.levels.len() && h.is_identity()
    }

    /// Adds a generator. Returns `false` when it was already a member.
    pub fn insert(&mut self, g: &Permutation) -> bool {
        assert_eq!(g.degree(), self.n, "generator degree mismatch");
        let (h, j) = self.sift_from(g, 0);
        if j == self.levels.len() && h.is_identity() {
            return false;
        }
        self.add_strong(h, j);
        self.complete(j);
        true
    }

    fn add_strong(&mut self, h: Permutation, j: usize) {
        let idx = self.strong.len();
        if j == self.levels.len() {
            let b = (0..self.n).find(|&x| h.image(x) != x).expect("residue is not the identity");
            self.levels.push(Level::new(self.n, b));
            self.strong.push(h);
            let base = self.base();
            let last = self.levels.len() - 1;
            let members: Vec<usize> = (0..self.strong.len())
                .filter(|&s| base[..last].iter().all(|&b| self.strong[s].image(b) == b))
                .collect();
            self.levels[last].gens = members;
            for l in 0..last {
                self.levels[l].gens.push(idx);
            }
        } else {
            self.strong.push(h);
            for l in 0..=j {
                self.levels[l].gens.push(idx);
            }
        }
        for l in 0..=j.min(self.levels.len() - 1) {
            self.extend_orbit(l);
        }
    }

    fn extend_orbit(&mut self, l: usize) {
        let lvl = &mut self.levels[l];
        let mut i = 0;
        while i < lvl.orbit.len() {
            let x = lvl.orbit[i] as usize;
            for &s in &lvl.gens {
                let g = &self.strong[s];
                let y = g.image(x);
                if lvl.pos[y] == NONE {
                    lvl.pos[y] = lvl.orbit.len() as u32;
                    lvl.orbit.push(y as u8);
                    let u = g.compose(&lvl.transversal[i]);
                    lvl.inv_transversal.push(u.inverse());
                    lvl.transversal.push(u);
                    lvl.done.push(0);
                }
            }
            i += 1;
        }
    }

    fn complete(&mut self, start: usize) {
        let mut i = start.min(self.levels.len() - 1);
        loop {
            match self.unsifted_schreier_generator(i) {
                Some((h, j)) => {
                    self.add_strong(h, j);
                    i = j.min(self.levels.len() - 1);
                }
                None => {
                    if i == 0 {
                        break;
                    }
                    i -= 1;
                }
            }
        }
    }

    fn unsifted_schreier_generator(&mut self, i: usize) -> Option<(Permutation, usize)> {
        let mut idx = 0;
        while idx < self.levels[i].orbit.len() {
            while self.levels[i].done[idx] < self.levels[i].gens.len() {
                let lvl = &self.levels[i];
                let s = &self.strong[lvl.gens[lvl.done[idx]]];
                let x = lvl.orbit[idx] as usize;
                let y = s.image(x);
                let p = lvl.pos[y] as usize;
                let schreier = lvl.inv_transversal[p].compose(&s.compose(&lvl.transversal[idx]));
                self.levels[i].done[idx] += 1;
                if schreier.is_identity() {
                    continue;
                }
                let (h, j) = self.sift_from(&schreier, i + 1);
                if j < self.levels.len() || !h.is_identity() {
                    return Some((h, j));
                }
            }
            idx += 1;
        }
        None
    }

    /// Calls `f` on every element, in chain order.
    pub fn for_each_element(&self, mut f: impl FnMut(&Permutation)) {
        fn rec(chain: &StabChain, l: usize, acc: &Permutation, f: &mut dyn FnMut(&Permutation)) {
            if l == chain.levels.len() {
                f(acc);
                return;
            }
            for u in &chain.levels[l].transversal {
                rec(chain, l + 1, &acc.compose(u), f);
            }
        }
        rec(self, 0, &Permutation::identity(self.n), &mut f);
    }

    /// Element indexed by one transversal choice per level.
    pub fn element_from_choice(&self, choice: &[usize]) -> Permutation {
        let mut acc = Permutation::identity(self.n);
        for (l, &c) in choice.iter().enumerate() {
            acc = acc.compose(&self.levels[l].transversal[c]);
        }
        acc
    }

    pub fn transversal(&self, level: usize) -> &[Permutation] {
        &self.levels[level].transversal
    }

    pub fn depth(&self) -> usize {
        self.levels.len()
    }

    /// Orbit of the `level`-th base point under the `level`-th stabilizer.
    pub fn basic_orbit(&self, level: usize) -> Vec<usize> {
        self.levels[level].orbit.iter().map(|&x| x as usize).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(n: usize, s: &str) -> Permutation {
        Permutation::parse(n, s).unwrap()
    }

    #[test]
    fn symmetric_orders() {
        let c = StabChain::new(4, &[p(4, "(1 2)"), p(4, "(1 2 3 4)")]);
        assert_eq!(c.order(), BigUint::from(24u32));
        let c = StabChain::new(5, &[p(5, "(1 2 3)"), p(5, "(3 4 5)")]);
        assert_eq!(c.order(), BigUint::from(60u32));
    }

    #[test]
    fn membership() {
        let c = StabChain::new(5, &[p(5, "(1 2 3)"), p(5, "(3 4 5)")]);
        assert!(c.contains(&p(5, "(1 2)(3 4)")));
        assert!(!c.contains(&p(5, "(1 2)")));
        let mut count = 0;
        c.for_each_element(|g| {
            assert!(g.is_even());
            count += 1;
        });
        assert_eq!(count, 60);
    }
}
