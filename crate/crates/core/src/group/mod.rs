//! Permutation groups: stabilizer chains, element tables, subgroup lattices.

pub mod blocks;
pub mod builtins;
pub mod chain;
pub mod factor;
pub mod lattice;
pub mod maximality;
pub mod table;

use num_bigint::BigUint;
use num_traits::ToPrimitive;
use rand::Rng;

use crate::error::{Error, Result};
use crate::perm::{Permutation, MAX_DEGREE};
pub use blocks::BlockSystem;
pub use chain::StabChain;
pub use table::FiniteGroup;

/// A permutation group given by generators, with its stabilizer chain.
#[derive(Clone, Debug)]
pub struct PermGroup {
    n: usize,
    gens: Vec<Permutation>,
    chain: StabChain,
    name: Option<String>,
}

impl PermGroup {
    pub fn new(n: usize, gens: Vec<Permutation>) -> Result<Self> {
        if n > MAX_DEGREE {
            return Err(Error::DegreeCap(n, MAX_DEGREE));
        }
        if let Some(g) = gens.iter().find(|g| g.degree() != n) {
            return Err(Error::DegreeMismatch(g.degree(), n));
        }
        let chain = StabChain::new(n, &gens);
        Ok(PermGroup { n, gens, chain, name: None })
    }

    pub fn from_generators(n: usize, gens: &[Permutation]) -> Self {
        PermGroup::new(n, gens.to_vec()).expect("generators of matching degree")
    }

    pub fn trivial(n: usize) -> Self {
        PermGroup::from_generators(n, &[])
    }

    pub fn symmetric(n: usize) -> Self {
        let mut gens = Vec::new();
        if n >= 2 {
            gens.push(Permutation::transposition(n, 0, 1));
        }
        if n >= 3 {
            gens.push(Permutation::cycle(n, &(0..n).collect::<Vec<_>>()).unwrap());
        }
        PermGroup::from_generators(n, &gens).named(format!("S{n}"))
    }

    pub fn alternating(n: usize) -> Self {
        let gens: Vec<Permutation> = (2..n).map(|k| Permutation::cycle(n, &[0, 1, k]).unwrap()).collect();
        PermGroup::from_generators(n, &gens).named(format!("A{n}"))
    }

    pub fn cyclic(n: usize) -> Self {
        let gens = if n >= 2 { vec![Permutation::cycle(n, &(0..n).collect::<Vec<_>>()).unwrap()] } else { vec![] };
        PermGroup::from_generators(n, &gens).named(format!("C{n}"))
    }

    /// Dihedral group of order `2n` acting on `n` points.
    pub fn dihedral(n: usize) -> Self {
        let mut gens = PermGroup::cyclic(n).gens;
        if n >= 3 {
            let refl: Vec<usize> = (0..n).map(|i| (n - i) % n).collect();
            gens.push(Permutation::from_images(&refl).unwrap());
        }
        PermGroup::from_generators(n, &gens).named(format!("D{n}"))
    }

    pub fn named(mut self, name: impl Into<String>) -> Self {
        self.name = Some(name.into());
        self
    }

    pub fn name(&self) -> Option<&str> {
        self.name.as_deref()
    }

    pub fn degree(&self) -> usize {
        self.n
    }

    pub fn generators(&self) -> &[Permutation] {
        &self.gens
    }

    pub fn chain(&self) -> &StabChain {
        &self.chain
    }

    pub fn order(&self) -> BigUint {
        self.chain.order()
    }

    pub fn order_u64(&self) -> Option<u64> {
        self.order().to_u64()
    }

    /// λ(G): prime factors of the order with multiplicity.
    pub fn lambda(&self) -> usize {
        factor::big_omega(&self.order())
    }

    pub fn contains(&self, g: &Permutation) -> bool {
        self.chain.contains(g)
    }

    pub fn contains_all(&self, gs: &[Permutation]) -> bool {
        gs.iter().all(|g| self.contains(g))
    }

    pub fn is_subgroup_of(&self, other: &PermGroup) -> bool {
        self.n == other.n && other.contains_all(&self.gens)
    }

    pub fn same_group(&self, other: &PermGroup) -> bool {
        self.is_subgroup_of(other) && other.is_subgroup_of(self)
    }

    /// Adds a generator; returns `false` if it was already a member.
    pub fn add_generator(&mut self, g: Permutation) -> bool {
        assert_eq!(g.degree(), self.n);
        let new = self.chain.insert(&g);
        if new {
            self.gens.push(g);
        }
        new
    }

    /// Orbits on points, each sorted, ordered by least point.
    pub fn orbits(&self) -> Vec<Vec<usize>> {
        orbits_of(self.n, &self.gens)
    }

    pub fn is_transitive(&self) -> bool {
        self.orbits().len() <= 1
    }

    pub fn elements(&self, cap: usize) -> Result<Vec<Permutation>> {
        let order = self.order();
        if order > BigUint::from(cap) {
            return Err(Error::OrderCap(order.to_string(), cap));
        }
        let mut out = Vec::with_capacity(order.to_usize().unwrap_or(0));
        self.chain.for_each_element(|g| out.push(g.clone()));
        Ok(out)
    }

    /// Uniformly random element.
    pub fn random_element<R: Rng + ?Sized>(&self, rng: &mut R) -> Permutation {
        let choice: Vec<usize> =
            (0..self.chain.depth()).map(|l| rng.gen_range(0..self.chain.transversal(l).len())).collect();
        self.chain.element_from_choice(&choice)
    }

    /// Subgroup of even permutations, via Reidemeister–Schreier on the index-2 case.
    pub fn even_part(&self) -> PermGroup {
        let odd = self.gens.iter().find(|g| !g.is_even()).cloned();
        let Some(t) = odd else { return self.clone() };
        let t_inv = t.inverse();
        let mut gens = Vec::new();
        for g in &self.gens {
            if g.is_even() {
                gens.push(g.clone());
                gens.push(&(&t * g) * &t_inv);
            } else {
                gens.push(g * &t_inv);
                gens.push(&t * g);
            }
        }
        gens.retain(|g| !g.is_identity());
        PermGroup::from_generators(self.n, &gens)
    }

    /// Smallest group containing `self` and closed under conjugation by each of `conj`.
    pub fn closure_under_conjugation(&self, conj: &[Permutation]) -> PermGroup {
        let mut g = PermGroup::from_generators(self.n, &self.gens);
        let mut i = 0;
        while i < g.gens.len() {
            let h = g.gens[i].clone();
            for c in conj {
                let x = h.conjugate_by(c);
                if !g.contains(&x) {
                    g.add_generator(x);
                }
            }
            i += 1;
        }
        g
    }

    /// Restriction to an invariant point set, relabelled onto `0..points.len()`.
    pub fn restrict(&self, points: &[usize]) -> Option<PermGroup> {
        let gens: Option<Vec<Permutation>> = self.gens.iter().map(|g| g.restrict(points)).collect();
        Some(PermGroup::from_generators(points.len(), &gens?))
    }

    pub fn is_symmetric_on_degree(&self) -> bool {
        self.order() == factorial(self.n)
    }

    pub fn is_alternating_on_degree(&self) -> bool {
        self.n >= 2 && self.order() * 2u32 == factorial(self.n) && self.gens.iter().all(Permutation::is_even)
    }
}

pub fn orbits_of(n: usize, gens: &[Permutation]) -> Vec<Vec<usize>> {
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(p: &mut [usize], x: usize) -> usize {
        let mut r = x;
        while p[r] != r {
            r = p[r];
        }
        let mut y = x;
        while p[y] != r {
            let next = p[y];
            p[y] = r;
            y = next;
        }
        r
    }
    for g in gens {
        for x in 0..n {
            let (a, b) = (find(&mut parent, x), find(&mut parent, g.image(x)));
            if a != b {
                parent[a.max(b)] = a.min(b);
            }
        }
    }
    let mut groups: std::collections::BTreeMap<usize, Vec<usize>> = Default::default();
    for x in 0..n {
        let r = find(&mut parent, x);
        groups.entry(r).or_default().push(x);
    }
    groups.into_values().collect()
}

pub fn factorial(n: usize) -> BigUint {
    (1..=n).fold(BigUint::from(1u32), |acc, k| acc * BigUint::from(k))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn builtin_family_orders() {
        assert_eq!(PermGroup::symmetric(4).order_u64(), Some(24));
        assert_eq!(PermGroup::alternating(5).order_u64(), Some(60));
        assert_eq!(PermGroup::cyclic(7).order_u64(), Some(7));
        assert_eq!(PermGroup::dihedral(5).order_u64(), Some(10));
        assert_eq!(PermGroup::symmetric(64).order(), factorial(64));
    }

    #[test]
    fn even_part_of_symmetric_is_alternating() {
        for n in 2..8 {
            let a = PermGroup::symmetric(n).even_part();
            assert!(a.same_group(&PermGroup::alternating(n)), "n={n}");
        }
    }

    #[test]
    fn lambda_counts_prime_factors() {
        assert_eq!(PermGroup::symmetric(5).lambda(), 5);
        assert_eq!(PermGroup::alternating(6).lambda(), 6);
    }

    #[test]
    fn orbits_and_transitivity() {
        let g = PermGroup::from_generators(5, &[Permutation::parse(5, "(1 2)(4 5)").unwrap()]);
        assert_eq!(g.orbits(), vec![vec![0, 1], vec![2], vec![3, 4]]);
        assert!(!g.is_transitive());
    }
}
