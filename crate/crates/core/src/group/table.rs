//! Small groups as explicit element lists with a multiplication table.
//!
//! Elements are sorted by image vector, so index 0 is the identity and the
//! order is independent of the generators supplied.

use rustc_hash::FxHashMap;

use crate::error::{Error, Result};
use crate::group::PermGroup;
use crate::perm::Permutation;

/// Largest order for which a full multiplication table is stored.
pub const TABLE_CAP: usize = 6000;
/// Largest order accepted at all.
pub const ORDER_CAP: usize = 65_535;

#[derive(Clone, Debug)]
pub struct FiniteGroup {
    degree: usize,
    elements: Vec<Permutation>,
    index: FxHashMap<Permutation, u32>,
    table: Option<Vec<u16>>,
    inv: Vec<u32>,
    gens: Vec<u32>,
}

impl FiniteGroup {
    pub fn new(g: &PermGroup) -> Result<Self> {
        Self::with_cap(g, ORDER_CAP)
    }

    pub fn with_cap(g: &PermGroup, cap: usize) -> Result<Self> {
        let mut elements = g.elements(cap.min(ORDER_CAP))?;
        elements.sort();
        let index: FxHashMap<Permutation, u32> =
            elements.iter().enumerate().map(|(i, p)| (p.clone(), i as u32)).collect();
        let nel = elements.len();
        let table = (nel <= TABLE_CAP).then(|| {
            let mut t = vec![0u16; nel * nel];
            for (i, a) in elements.iter().enumerate() {
                for (j, b) in elements.iter().enumerate() {
                    t[i * nel + j] = index[&a.compose(b)] as u16;
                }
            }
            t
        });
        let inv = elements.iter().map(|p| index[&p.inverse()]).collect();
        let mut gens: Vec<u32> = g.generators().iter().map(|p| index[p]).filter(|&i| i != 0).collect();
        gens.sort_unstable();
        gens.dedup();
        Ok(FiniteGroup { degree: g.degree(), elements, index, table, inv, gens })
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn element(&self, i: u32) -> &Permutation {
        &self.elements[i as usize]
    }

    pub fn elements(&self) -> &[Permutation] {
        &self.elements
    }

    pub fn index_of(&self, p: &Permutation) -> Option<u32> {
        self.index.get(p).copied()
    }

    pub fn indices_of(&self, ps: &[Permutation]) -> Result<Vec<u32>> {
        ps.iter()
            .map(|p| self.index_of(p).ok_or_else(|| Error::InvalidInput(format!("{p} is not in the group"))))
            .collect()
    }

    pub fn generator_indices(&self) -> &[u32] {
        &self.gens
    }

    #[inline]
    pub fn mul(&self, a: u32, b: u32) -> u32 {
        match &self.table {
            Some(t) => t[a as usize * self.elements.len() + b as usize] as u32,
            None => self.index[&self.elements[a as usize].compose(&self.elements[b as usize])],
        }
    }

    #[inline]
    pub fn inv(&self, a: u32) -> u32 {
        self.inv[a as usize]
    }

    /// `b a b⁻¹`.
    pub fn conj(&self, a: u32, b: u32) -> u32 {
        self.mul(self.mul(b, a), self.inv(b))
    }

    pub fn element_order(&self, a: u32) -> usize {
        let mut x = a;
        let mut k = 1;
        while x != 0 {
            x = self.mul(x, a);
            k += 1;
        }
        k
    }

    /// Class id of every element under conjugation by the group and by `extra`,
    /// which must normalise the group. Class ids are the least index in the class.
    pub fn conjugacy_classes(&self, extra: &[Permutation]) -> Result<Vec<u32>> {
        let mut actions: Vec<Vec<u32>> =
            self.gens.iter().map(|&g| (0..self.len() as u32).map(|x| self.conj(x, g)).collect()).collect();
        for s in extra {
            let act = self
                .elements
                .iter()
                .map(|p| {
                    self.index_of(&p.conjugate_by(s))
                        .ok_or_else(|| Error::Precondition(format!("{s} does not normalise the group")))
                })
                .collect::<Result<Vec<u32>>>()?;
            actions.push(act);
        }
        let mut class = vec![u32::MAX; self.len()];
        for start in 0..self.len() {
            if class[start] != u32::MAX {
                continue;
            }
            class[start] = start as u32;
            let mut stack = vec![start as u32];
            while let Some(x) = stack.pop() {
                for act in &actions {
                    let y = act[x as usize];
                    if class[y as usize] == u32::MAX {
                        class[y as usize] = start as u32;
                        stack.push(y);
                    }
                }
            }
        }
        Ok(class)
    }

    /// Closure of a list of elements, as a sorted index list.
    pub fn closure(&self, gens: &[u32]) -> Vec<u32> {
        let mut seen = vec![false; self.len()];
        seen[0] = true;
        let mut list = vec![0u32];
        let mut i = 0;
        while i < list.len() {
            let x = list[i];
            for &g in gens {
                let y = self.mul(x, g);
                if !seen[y as usize] {
                    seen[y as usize] = true;
                    list.push(y);
                }
            }
            i += 1;
        }
        list.sort_unstable();
        list
    }

    pub fn to_perm_group(&self, idx: &[u32]) -> PermGroup {
        let gens: Vec<Permutation> = idx.iter().map(|&i| self.element(i).clone()).collect();
        PermGroup::from_generators(self.degree, &gens)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn table_is_consistent() {
        let g = FiniteGroup::new(&PermGroup::symmetric(4)).unwrap();
        assert_eq!(g.len(), 24);
        assert!(g.element(0).is_identity());
        for a in 0..24 {
            assert_eq!(g.mul(a, g.inv(a)), 0);
            for b in 0..24 {
                assert_eq!(g.element(g.mul(a, b)), &g.element(a).compose(g.element(b)));
            }
        }
    }

    #[test]
    fn class_counts() {
        let s5 = FiniteGroup::new(&PermGroup::symmetric(5)).unwrap();
        let classes = s5.conjugacy_classes(&[]).unwrap();
        let mut ids = classes.clone();
        ids.sort_unstable();
        ids.dedup();
        assert_eq!(ids.len(), 7);
        let a5 = FiniteGroup::new(&PermGroup::alternating(5)).unwrap();
        let inner = a5.conjugacy_classes(&[]).unwrap();
        let mut ids: Vec<u32> = inner.clone();
        ids.sort_unstable();
        ids.dedup();
        assert_eq!(ids.len(), 5);
        let outer = a5.conjugacy_classes(&[Permutation::parse(5, "(1 2)").unwrap()]).unwrap();
        let mut ids = outer;
        ids.sort_unstable();
        ids.dedup();
        assert_eq!(ids.len(), 4);
    }
}
