use std::fmt;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};

/// Ordered partition `{X_0, X_1, .., X_m}` of `0..n`; `X_0` may be empty, the others may not.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct OrderedPartition {
    n: usize,
    x0: Vec<usize>,
    blocks: Vec<Vec<usize>>,
    block_of: Vec<usize>,
}

impl OrderedPartition {
    pub fn new(n: usize, x0: Vec<usize>, blocks: Vec<Vec<usize>>) -> Result<Self> {
        let mut block_of = vec![usize::MAX; n];
        let mut x0 = x0;
        x0.sort_unstable();
        let mut blocks = blocks;
        for (i, b) in std::iter::once(&mut x0).chain(blocks.iter_mut()).enumerate() {
            b.sort_unstable();
            if i > 0 && b.is_empty() {
                return Err(Error::InvalidInput(format!("block X_{i} is empty")));
            }
            for &x in b.iter() {
                if x >= n || block_of[x] != usize::MAX {
                    return Err(Error::InvalidInput(format!("point {} repeated or out of range", x + 1)));
                }
                block_of[x] = i;
            }
        }
        if let Some(x) = block_of.iter().position(|&b| b == usize::MAX) {
            return Err(Error::InvalidInput(format!("point {} not covered", x + 1)));
        }
        if blocks.is_empty() {
            return Err(Error::InvalidInput("need at least one block besides X_0".into()));
        }
        Ok(OrderedPartition { n, x0, blocks, block_of })
    }

    /// Parses `"0:|1:1,2,3|2:4,5"` (1-based points); the degree is the number of points listed.
    pub fn parse(text: &str) -> Result<Self> {
        let mut x0 = Vec::new();
        let mut blocks: Vec<(usize, Vec<usize>)> = Vec::new();
        for part in text.split('|') {
            let (label, body) = part
                .split_once(':')
                .ok_or_else(|| Error::InvalidInput(format!("missing ':' in partition part {part:?}")))?;
            let idx: usize =
                label.trim().parse().map_err(|_| Error::InvalidInput(format!("bad block label {label:?}")))?;
            let pts = body
                .split(',')
                .map(str::trim)
                .filter(|s| !s.is_empty())
                .map(|s| match s.parse::<usize>() {
                    Ok(v) if v >= 1 => Ok(v - 1),
                    _ => Err(Error::InvalidInput(format!("bad point {s:?}"))),
                })
                .collect::<Result<Vec<_>>>()?;
            if idx == 0 {
                x0 = pts;
            } else {
                blocks.push((idx, pts));
            }
        }
        blocks.sort_by_key(|b| b.0);
        if blocks.iter().enumerate().any(|(i, b)| b.0 != i + 1) {
            return Err(Error::InvalidInput("block labels must be 1..m".into()));
        }
        let n = x0.len() + blocks.iter().map(|b| b.1.len()).sum::<usize>();
        OrderedPartition::new(n, x0, blocks.into_iter().map(|b| b.1).collect())
    }

    pub fn degree(&self) -> usize {
        self.n
    }

    pub fn x0(&self) -> &[usize] {
        &self.x0
    }

    /// `X_1, .., X_m`.
    pub fn blocks(&self) -> &[Vec<usize>] {
        &self.blocks
    }

    pub fn m(&self) -> usize {
        self.blocks.len()
    }

    /// Block index of a point: 0 for `X_0`, `i` for `X_i`.
    pub fn block_of(&self, x: usize) -> usize {
        self.block_of[x]
    }

    /// Block `i` with `X_0` at index 0.
    pub fn block(&self, i: usize) -> &[usize] {
        if i == 0 {
            &self.x0
        } else {
            &self.blocks[i - 1]
        }
    }

    /// `d(P) = |X_0| + m`.
    pub fn d(&self) -> usize {
        self.x0.len() + self.blocks.len()
    }

    /// `self < other`: `other` moves one point of `X_0` into some block, or merges two
    /// adjacent blocks, and agrees with `self` elsewhere.
    pub fn less_than(&self, other: &OrderedPartition) -> bool {
        if self.n != other.n {
            return false;
        }
        if self.m() == other.m() {
            if other.x0.len() + 1 != self.x0.len() {
                return false;
            }
            let diff: Vec<usize> = (0..self.m()).filter(|&i| self.blocks[i] != other.blocks[i]).collect();
            if diff.len() != 1 {
                return false;
            }
            let i0 = diff[0];
            let moved: Vec<usize> = self.x0.iter().copied().filter(|x| !other.x0.contains(x)).collect();
            if moved.len() != 1 || other.x0.iter().any(|x| !self.x0.contains(x)) {
                return false;
            }
            let mut grown = self.blocks[i0].clone();
            grown.push(moved[0]);
            grown.sort_unstable();
            grown == other.blocks[i0]
        } else if self.m() == other.m() + 1 {
            if self.x0 != other.x0 {
                return false;
            }
            (0..other.m()).any(|i0| {
                let mut merged = self.blocks[i0].clone();
                merged.extend_from_slice(&self.blocks[i0 + 1]);
                merged.sort_unstable();
                (0..i0).all(|i| self.blocks[i] == other.blocks[i])
                    && merged == other.blocks[i0]
                    && (i0 + 1..other.m()).all(|i| other.blocks[i] == self.blocks[i + 1])
            })
        } else {
            false
        }
    }

    /// Every `P'` with `self < P'`.
    pub fn successors(&self) -> Vec<OrderedPartition> {
        let mut out = Vec::new();
        for &x in &self.x0 {
            for i in 0..self.m() {
                let x0: Vec<usize> = self.x0.iter().copied().filter(|&y| y != x).collect();
                let mut blocks = self.blocks.clone();
                blocks[i].push(x);
                out.push(OrderedPartition::new(self.n, x0, blocks).unwrap());
            }
        }
        for i in 0..self.m().saturating_sub(1) {
            let mut blocks = self.blocks.clone();
            let next = blocks.remove(i + 1);
            blocks[i].extend(next);
            out.push(OrderedPartition::new(self.n, self.x0.clone(), blocks).unwrap());
        }
        out
    }
}

impl fmt::Display for OrderedPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let show = |b: &[usize]| b.iter().map(|x| (x + 1).to_string()).collect::<Vec<_>>().join(",");
        write!(f, "0:{}", show(&self.x0))?;
        for (i, b) in self.blocks.iter().enumerate() {
            write!(f, "|{}:{}", i + 1, show(b))?;
        }
        Ok(())
    }
}

impl Serialize for OrderedPartition {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_display() {
        let p = OrderedPartition::parse("0:|1:1,2,3|2:4,5").unwrap();
        assert_eq!(p.degree(), 5);
        assert_eq!(p.m(), 2);
        assert_eq!(p.d(), 2);
        assert_eq!(p.to_string(), "0:|1:1,2,3|2:4,5");
        assert!(OrderedPartition::parse("0:1|1:1,2").is_err());
        assert!(OrderedPartition::parse("0:|2:1,2").is_err());
    }

    #[test]
    fn order_clauses() {
        let p = OrderedPartition::parse("0:5|1:1,2|2:3,4").unwrap();
        let moved = OrderedPartition::parse("0:|1:1,2|2:3,4,5").unwrap();
        let merged = OrderedPartition::parse("0:5|1:1,2,3,4").unwrap();
        assert!(p.less_than(&moved));
        assert!(p.less_than(&merged));
        assert!(!moved.less_than(&p));
        assert_eq!(p.successors().len(), 3);
        assert!(p.successors().iter().all(|q| p.less_than(q) && q.d() + 1 == p.d()));
    }
}
