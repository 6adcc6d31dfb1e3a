//! Block systems of transitive groups.

use crate::error::{Error, Result};
use crate::group::PermGroup;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BlockSystem {
    blocks: Vec<Vec<usize>>,
    block_of: Vec<usize>,
}

impl BlockSystem {
    /// Blocks must partition `0..n`; each is sorted and the list is ordered by least point.
    pub fn new(n: usize, blocks: Vec<Vec<usize>>) -> Result<Self> {
        let mut block_of = vec![usize::MAX; n];
        let mut blocks = blocks;
        for b in blocks.iter_mut() {
            b.sort_unstable();
        }
        blocks.sort();
        for (i, b) in blocks.iter().enumerate() {
            if b.is_empty() {
                return Err(Error::InvalidInput("empty block".into()));
            }
            for &x in b {
                if x >= n || block_of[x] != usize::MAX {
                    return Err(Error::InvalidInput(format!("blocks do not partition 0..{n}")));
                }
                block_of[x] = i;
            }
        }
        if block_of.contains(&usize::MAX) {
            return Err(Error::InvalidInput(format!("blocks do not cover 0..{n}")));
        }
        Ok(BlockSystem { blocks, block_of })
    }

    /// `count` consecutive blocks of size `size`.
    pub fn consecutive(size: usize, count: usize) -> Self {
        let blocks = (0..count).map(|i| (i * size..(i + 1) * size).collect()).collect();
        BlockSystem::new(size * count, blocks).unwrap()
    }

    pub fn blocks(&self) -> &[Vec<usize>] {
        &self.blocks
    }

    pub fn block_of(&self, x: usize) -> usize {
        self.block_of[x]
    }

    /// Every generator maps blocks onto blocks.
    pub fn is_preserved_by(&self, g: &PermGroup) -> bool {
        g.generators().iter().all(|p| {
            self.blocks.iter().all(|b| {
                let target = self.block_of[p.image(b[0])];
                b.iter().all(|&x| self.block_of[p.image(x)] == target)
            })
        })
    }

    /// Action on blocks as permutations of block indices.
    pub fn block_action(&self, g: &PermGroup) -> Option<PermGroup> {
        if !self.is_preserved_by(g) {
            return None;
        }
        let k = self.blocks.len();
        let gens = g
            .generators()
            .iter()
            .map(|p| {
                let im: Vec<usize> = self.blocks.iter().map(|b| self.block_of[p.image(b[0])]).collect();
                crate::perm::Permutation::from_images(&im).unwrap()
            })
            .collect::<Vec<_>>();
        Some(PermGroup::from_generators(k, &gens))
    }
}

/// Finest block system in which `a` and `b` share a block (Atkinson's union–find method).
pub fn minimal_block_system(g: &PermGroup, a: usize, b: usize) -> BlockSystem {
    let n = g.degree();
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(p: &mut [usize], x: usize) -> usize {
        let mut r = x;
        while p[r] != r {
            r = p[r];
        }
        let mut y = x;
        while p[y] != r {
            let nx = p[y];
            p[y] = r;
            y = nx;
        }
        r
    }
    let mut queue = vec![(a, b)];
    while let Some((x, y)) = queue.pop() {
        let (rx, ry) = (find(&mut parent, x), find(&mut parent, y));
        if rx == ry {
            continue;
        }
        parent[rx.max(ry)] = rx.min(ry);
        for s in g.generators() {
            queue.push((s.image(x), s.image(y)));
        }
    }
    let mut map: std::collections::BTreeMap<usize, Vec<usize>> = Default::default();
    for x in 0..n {
        let r = find(&mut parent, x);
        map.entry(r).or_default().push(x);
    }
    BlockSystem::new(n, map.into_values().collect()).unwrap()
}

/// A transitive group is primitive when every pair generates the trivial-or-whole block system.
pub fn is_primitive(g: &PermGroup) -> bool {
    if !g.is_transitive() {
        return false;
    }
    (1..g.degree()).all(|b| minimal_block_system(g, 0, b).blocks().len() == 1)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::perm::Permutation;

    #[test]
    fn dihedral_square_has_diagonal_blocks() {
        let d4 = PermGroup::dihedral(4);
        let bs = minimal_block_system(&d4, 0, 2);
        assert_eq!(bs.blocks(), &[vec![0, 2], vec![1, 3]]);
        assert!(!is_primitive(&d4));
        assert!(is_primitive(&PermGroup::symmetric(5)));
    }

    #[test]
    fn block_action_of_wreath_like_group() {
        let g = PermGroup::from_generators(
            4,
            &[Permutation::parse(4, "(1 2)").unwrap(), Permutation::parse(4, "(1 3)(2 4)").unwrap()],
        );
        let bs = BlockSystem::consecutive(2, 2);
        assert!(bs.is_preserved_by(&g));
        assert_eq!(bs.block_action(&g).unwrap().order_u64(), Some(2));
    }
}
