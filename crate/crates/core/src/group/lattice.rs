//! Interned subgroups of a `FiniteGroup`, with a memoised join table.

use fixedbitset::FixedBitSet;
use rustc_hash::FxHashMap;

use crate::group::FiniteGroup;

pub type SubId = u32;

const UNSET: u32 = u32::MAX;

#[derive(Clone, Debug)]
pub struct Subgroup {
    pub bits: FixedBitSet,
    pub order: usize,
    pub gens: Vec<u32>,
}

pub struct Lattice<'g> {
    g: &'g FiniteGroup,
    subs: Vec<Subgroup>,
    ids: FxHashMap<FixedBitSet, SubId>,
    joins: Vec<Option<Box<[SubId]>>>,
    scratch: Vec<u32>,
}

impl<'g> Lattice<'g> {
    pub fn new(g: &'g FiniteGroup) -> Self {
        let mut lat =
            Lattice { g, subs: Vec::new(), ids: FxHashMap::default(), joins: Vec::new(), scratch: Vec::new() };
        let mut bits = FixedBitSet::with_capacity(g.len());
        bits.insert(0);
        lat.intern(bits, Vec::new());
        lat
    }

    pub fn group(&self) -> &'g FiniteGroup {
        self.g
    }

    pub fn trivial(&self) -> SubId {
        0
    }

    pub fn len(&self) -> usize {
        self.subs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.subs.is_empty()
    }

    pub fn subgroup(&self, h: SubId) -> &Subgroup {
        &self.subs[h as usize]
    }

    #[inline]
    pub fn contains(&self, h: SubId, x: u32) -> bool {
        self.subs[h as usize].bits.contains(x as usize)
    }

    #[inline]
    pub fn order(&self, h: SubId) -> usize {
        self.subs[h as usize].order
    }

    #[inline]
    pub fn is_whole(&self, h: SubId) -> bool {
        self.subs[h as usize].order == self.g.len()
    }

    pub fn is_subgroup(&self, h: SubId, k: SubId) -> bool {
        self.subs[h as usize].bits.is_subset(&self.subs[k as usize].bits)
    }

    pub fn elements(&self, h: SubId) -> Vec<u32> {
        self.subs[h as usize].bits.ones().map(|i| i as u32).collect()
    }

    fn intern(&mut self, bits: FixedBitSet, gens: Vec<u32>) -> SubId {
        if let Some(&id) = self.ids.get(&bits) {
            return id;
        }
        let id = self.subs.len() as SubId;
        let order = bits.count_ones(..);
        self.ids.insert(bits.clone(), id);
        self.subs.push(Subgroup { bits, order, gens });
        self.joins.push(None);
        id
    }

    /// `⟨h, x⟩`.
    pub fn join(&mut self, h: SubId, x: u32) -> SubId {
        if self.contains(h, x) {
            return h;
        }
        if let Some(row) = &self.joins[h as usize] {
            let v = row[x as usize];
            if v != UNSET {
                return v;
            }
        }
        let k = self.compute_join(h, x);
        let n = self.g.len();
        let row = self.joins[h as usize].get_or_insert_with(|| vec![UNSET; n].into_boxed_slice());
        row[x as usize] = k;
        k
    }

    fn compute_join(&mut self, h: SubId, x: u32) -> SubId {
        let sub = &self.subs[h as usize];
        let mut bits = sub.bits.clone();
        let mut gens = sub.gens.clone();
        gens.push(x);
        let list = &mut self.scratch;
        list.clear();
        list.extend(sub.bits.ones().map(|i| i as u32));
        let h_size = list.len();
        let mut i = 0;
        while i < list.len() {
            let y = list[i];
            let from = if i < h_size { gens.len() - 1 } else { 0 };
            for &g in &gens[from..] {
                let z = self.g.mul(y, g);
                if !bits.contains(z as usize) {
                    bits.insert(z as usize);
                    list.push(z);
                }
            }
            i += 1;
        }
        self.intern(bits, gens)
    }

    pub fn generate(&mut self, xs: &[u32]) -> SubId {
        xs.iter().fold(self.trivial(), |h, &x| self.join(h, x))
    }

    /// All subgroups, by cyclic extension. Returned ids are sorted by (order, id).
    pub fn all_subgroups(&mut self) -> Vec<SubId> {
        let mut cyclic: Vec<(SubId, u32)> = Vec::new();
        let mut seen_cyclic = FxHashMap::default();
        for x in 1..self.g.len() as u32 {
            let c = self.join(0, x);
            seen_cyclic.entry(c).or_insert_with(|| {
                cyclic.push((c, x));
            });
        }
        let mut found: FxHashMap<SubId, ()> = FxHashMap::default();
        found.insert(0, ());
        let mut layer: Vec<SubId> = Vec::new();
        for &(c, _) in &cyclic {
            if found.insert(c, ()).is_none() {
                layer.push(c);
            }
        }
        while !layer.is_empty() {
            let mut next = Vec::new();
            for &h in &layer {
                for &(_, x) in &cyclic {
                    if self.contains(h, x) {
                        continue;
                    }
                    let k = self.join(h, x);
                    if found.insert(k, ()).is_none() {
                        next.push(k);
                    }
                }
            }
            layer = next;
        }
        let mut ids: Vec<SubId> = found.into_keys().collect();
        ids.sort_by_key(|&h| (self.order(h), h));
        ids
    }

    /// Image of `h` under conjugation by element `c`.
    pub fn conjugate(&mut self, h: SubId, c: u32) -> SubId {
        let gens: Vec<u32> = self.subs[h as usize].gens.iter().map(|&x| self.g.conj(x, c)).collect();
        self.generate(&gens)
    }

    /// Groups subgroup ids into conjugacy classes; each class is sorted and led by its least id.
    pub fn conjugacy_classes_of(&mut self, ids: &[SubId]) -> Vec<Vec<SubId>> {
        let gens: Vec<u32> = self.g.generator_indices().to_vec();
        let mut class_of: FxHashMap<SubId, usize> = FxHashMap::default();
        let mut classes: Vec<Vec<SubId>> = Vec::new();
        for &h in ids {
            if class_of.contains_key(&h) {
                continue;
            }
            let ci = classes.len();
            let mut members = vec![h];
            class_of.insert(h, ci);
            let mut i = 0;
            while i < members.len() {
                let k = members[i];
                for &g in &gens {
                    let c = self.conjugate(k, g);
                    if let std::collections::hash_map::Entry::Vacant(e) = class_of.entry(c) {
                        e.insert(ci);
                        members.push(c);
                    }
                }
                i += 1;
            }
            members.sort_unstable();
            classes.push(members);
        }
        classes
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::PermGroup;

    #[test]
    fn subgroup_counts() {
        let s3 = FiniteGroup::new(&PermGroup::symmetric(3)).unwrap();
        assert_eq!(Lattice::new(&s3).all_subgroups().len(), 6);
        let s4 = FiniteGroup::new(&PermGroup::symmetric(4)).unwrap();
        assert_eq!(Lattice::new(&s4).all_subgroups().len(), 30);
        let a5 = FiniteGroup::new(&PermGroup::alternating(5)).unwrap();
        let mut lat = Lattice::new(&a5);
        let subs = lat.all_subgroups();
        assert_eq!(subs.len(), 59);
        assert_eq!(lat.conjugacy_classes_of(&subs).len(), 9);
    }

    #[test]
    fn join_matches_closure() {
        let a5 = FiniteGroup::new(&PermGroup::alternating(5)).unwrap();
        let mut lat = Lattice::new(&a5);
        for (a, b) in [(3u32, 17u32), (5, 40), (11, 59)] {
            let h = lat.generate(&[a, b]);
            assert_eq!(lat.elements(h), a5.closure(&[a, b]));
        }
    }
}
