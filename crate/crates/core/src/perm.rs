//! Permutations of `{0, .., n-1}` stored as image arrays.
//!
//! Points are 0-based internally and 1-based in every textual or JSON form.
//! Products compose right to left: `(p * q)(x) = p(q(x))`.

use std::fmt;
use std::ops::Mul;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// Hard ceiling imposed by the `u8` image representation.
pub const MAX_DEGREE: usize = 256;

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<u8>,
}

impl Permutation {
    pub fn identity(n: usize) -> Self {
        assert!(n <= MAX_DEGREE, "degree {n} above {MAX_DEGREE}");
        Permutation { images: (0..n).map(|i| i as u8).collect() }
    }

    /// 0-based image list; must be a bijection of `0..len`.
    pub fn from_images(images: &[usize]) -> Result<Self> {
        let n = images.len();
        if n > MAX_DEGREE {
            return Err(Error::DegreeCap(n, MAX_DEGREE));
        }
        let mut seen = vec![false; n];
        for &x in images {
            if x >= n || seen[x] {
                return Err(Error::InvalidPermutation(format!("images {images:?} are not a bijection")));
            }
            seen[x] = true;
        }
        Ok(Permutation { images: images.iter().map(|&x| x as u8).collect() })
    }

    pub fn from_images_one_based(images: &[usize]) -> Result<Self> {
        if images.contains(&0) {
            return Err(Error::InvalidPermutation("point 0 in a 1-based image list".into()));
        }
        let shifted: Vec<usize> = images.iter().map(|&x| x - 1).collect();
        Self::from_images(&shifted)
    }

    /// Product of the given cycles (1-based), composed right to left.
    /// Disjoint cycles may come in any order.
    pub fn from_cycles(n: usize, cycles: &[Vec<usize>]) -> Result<Self> {
        if n > MAX_DEGREE {
            return Err(Error::DegreeCap(n, MAX_DEGREE));
        }
        let mut acc = Permutation::identity(n);
        for c in cycles.iter().rev() {
            let zero: Vec<usize> = c
                .iter()
                .map(|&x| {
                    if x == 0 || x > n {
                        Err(Error::InvalidPermutation(format!("point {x} outside 1..={n}")))
                    } else {
                        Ok(x - 1)
                    }
                })
                .collect::<Result<_>>()?;
            let cyc = Permutation::cycle(n, &zero)?;
            acc = &cyc * &acc;
        }
        Ok(acc)
    }

    /// A single cycle on 0-based points.
    pub fn cycle(n: usize, points: &[usize]) -> Result<Self> {
        let mut images: Vec<usize> = (0..n).collect();
        let mut seen = vec![false; n];
        for (i, &p) in points.iter().enumerate() {
            if p >= n || seen[p] {
                return Err(Error::InvalidPermutation(format!("bad cycle {points:?} in degree {n}")));
            }
            seen[p] = true;
            images[p] = points[(i + 1) % points.len()];
        }
        Self::from_images(&images)
    }

    /// The transposition of two distinct 0-based points.
    pub fn transposition(n: usize, a: usize, b: usize) -> Self {
        assert!(a != b && a < n && b < n);
        let mut p = Permutation::identity(n);
        p.images.swap(a, b);
        p
    }

    /// Parses 1-based cycle notation such as `(1 2)(3 4 5)`, with commas optional.
    /// `()` and the empty string give the identity.
    pub fn parse(n: usize, text: &str) -> Result<Self> {
        let mut cycles = Vec::new();
        let mut rest = text.trim();
        while !rest.is_empty() {
            if !rest.starts_with('(') {
                return Err(Error::InvalidPermutation(format!("expected '(' in {text:?}")));
            }
            let close =
                rest.find(')').ok_or_else(|| Error::InvalidPermutation(format!("unclosed cycle in {text:?}")))?;
            let body = &rest[1..close];
            let pts: Vec<usize> = body
                .split(|c: char| c == ',' || c.is_whitespace())
                .filter(|s| !s.is_empty())
                .map(|s| {
                    s.parse::<usize>().map_err(|_| Error::InvalidPermutation(format!("bad point {s:?} in {text:?}")))
                })
                .collect::<Result<_>>()?;
            if pts.len() > 1 {
                cycles.push(pts);
            }
            rest = rest[close + 1..].trim_start();
        }
        Self::from_cycles(n, &cycles)
    }

    /// Parses cycle notation, taking the degree from the largest point mentioned.
    pub fn parse_auto(text: &str) -> Result<Self> {
        let max = text.split(|c: char| !c.is_ascii_digit()).filter_map(|s| s.parse::<usize>().ok()).max().unwrap_or(1);
        Self::parse(max, text)
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    #[inline]
    pub fn image(&self, x: usize) -> usize {
        self.images[x] as usize
    }

    pub fn images(&self) -> &[u8] {
        &self.images
    }

    pub fn images_usize(&self) -> Vec<usize> {
        self.images.iter().map(|&x| x as usize).collect()
    }

    /// `self ∘ other`, i.e. apply `other` first.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        assert_eq!(self.degree(), other.degree(), "degree mismatch in compose");
        Permutation { images: other.images.iter().map(|&x| self.images[x as usize]).collect() }
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0u8; self.images.len()];
        for (i, &x) in self.images.iter().enumerate() {
            inv[x as usize] = i as u8;
        }
        Permutation { images: inv }
    }

    pub fn pow(&self, e: i64) -> Permutation {
        let base = if e < 0 { self.inverse() } else { self.clone() };
        let mut e = e.unsigned_abs();
        let mut acc = Permutation::identity(self.degree());
        let mut sq = base;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &sq;
            }
            sq = &sq * &sq;
            e >>= 1;
        }
        acc
    }

    /// `g ∘ self ∘ g⁻¹`.
    pub fn conjugate_by(&self, g: &Permutation) -> Permutation {
        let mut out = vec![0u8; self.images.len()];
        for x in 0..self.images.len() {
            out[g.images[x] as usize] = g.images[self.images[x] as usize];
        }
        Permutation { images: out }
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &x)| i == x as usize)
    }

    pub fn commutes_with(&self, other: &Permutation) -> bool {
        self * other == other * self
    }

    /// Nontrivial cycles, each starting at its least point, ordered by that point.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let n = self.degree();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for start in 0..n {
            if seen[start] || self.image(start) == start {
                seen[start] = true;
                continue;
            }
            let mut c = vec![start];
            seen[start] = true;
            let mut x = self.image(start);
            while x != start {
                seen[x] = true;
                c.push(x);
                x = self.image(x);
            }
            out.push(c);
        }
        out
    }

    /// Sorted lengths of the nontrivial cycles.
    pub fn cycle_type(&self) -> Vec<usize> {
        let mut t: Vec<usize> = self.cycles().iter().map(Vec::len).collect();
        t.sort_unstable();
        t
    }

    /// Displacement `n - (number of cycles, fixed points included)`.
    pub fn displacement(&self) -> usize {
        self.cycles().iter().map(|c| c.len() - 1).sum()
    }

    pub fn is_even(&self) -> bool {
        self.displacement().is_multiple_of(2)
    }

    pub fn sign(&self) -> i8 {
        if self.is_even() {
            1
        } else {
            -1
        }
    }

    pub fn support(&self) -> Vec<usize> {
        (0..self.degree()).filter(|&x| self.image(x) != x).collect()
    }

    pub fn order(&self) -> u128 {
        self.cycles().iter().fold(1u128, |acc, c| num_integer::lcm(acc, c.len() as u128))
    }

    pub fn is_transposition(&self) -> bool {
        self.cycle_type() == [2]
    }

    /// The two points of a transposition, smaller first.
    pub fn as_transposition(&self) -> Option<(usize, usize)> {
        let c = self.cycles();
        (c.len() == 1 && c[0].len() == 2).then(|| (c[0][0], c[0][1]))
    }

    /// Same action on a larger point set, fixing the new points.
    pub fn extend(&self, n: usize) -> Permutation {
        assert!(n >= self.degree() && n <= MAX_DEGREE);
        let mut images = self.images.clone();
        images.extend((self.degree()..n).map(|i| i as u8));
        Permutation { images }
    }

    /// Moves the action onto points `offset..offset+degree` of a degree-`n` set.
    pub fn shift(&self, offset: usize, n: usize) -> Permutation {
        assert!(offset + self.degree() <= n && n <= MAX_DEGREE);
        let mut images: Vec<u8> = (0..n).map(|i| i as u8).collect();
        for (i, &x) in self.images.iter().enumerate() {
            images[offset + i] = (offset + x as usize) as u8;
        }
        Permutation { images }
    }

    /// Restriction to a union of orbits, relabelled onto `0..points.len()`.
    /// Returns `None` when `points` is not invariant.
    pub fn restrict(&self, points: &[usize]) -> Option<Permutation> {
        let mut pos = vec![usize::MAX; self.degree()];
        for (i, &p) in points.iter().enumerate() {
            pos[p] = i;
        }
        let mut images = Vec::with_capacity(points.len());
        for &p in points {
            let q = pos[self.image(p)];
            if q == usize::MAX {
                return None;
            }
            images.push(q as u8);
        }
        Some(Permutation { images })
    }

    /// 1-based cycle lists, the JSON `cycles` form.
    pub fn cycles_one_based(&self) -> Vec<Vec<usize>> {
        self.cycles().into_iter().map(|c| c.into_iter().map(|x| x + 1).collect()).collect()
    }
}

impl Mul for &Permutation {
    type Output = Permutation;
    fn mul(self, rhs: &Permutation) -> Permutation {
        self.compose(rhs)
    }
}

impl Mul for Permutation {
    type Output = Permutation;
    fn mul(self, rhs: Permutation) -> Permutation {
        self.compose(&rhs)
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return write!(f, "()");
        }
        for c in cycles {
            write!(f, "(")?;
            for (i, x) in c.iter().enumerate() {
                if i > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{}", x + 1)?;
            }
            write!(f, ")")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}[{}]", self, self.degree())
    }
}

#[derive(Serialize, Deserialize)]
struct PermRepr {
    n: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    cycles: Option<Vec<Vec<usize>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    images: Option<Vec<usize>>,
}

impl Serialize for Permutation {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        PermRepr { n: self.degree(), cycles: Some(self.cycles_one_based()), images: None }.serialize(s)
    }
}

impl<'de> Deserialize<'de> for Permutation {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let r = PermRepr::deserialize(d)?;
        let p = match (r.cycles, r.images) {
            (Some(c), None) => Permutation::from_cycles(r.n, &c),
            (None, Some(im)) => {
                if im.len() != r.n {
                    Err(Error::InvalidPermutation(format!("{} images for degree {}", im.len(), r.n)))
                } else {
                    Permutation::from_images_one_based(&im)
                }
            }
            _ => Err(Error::InvalidPermutation("need exactly one of `cycles` or `images`".into())),
        };
        p.map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(n: usize, s: &str) -> Permutation {
        Permutation::parse(n, s).unwrap()
    }

    #[test]
    fn composition_is_right_to_left() {
        // (1 2)(2 3): 3 -> 2 -> 1, so the product is (1 2 3).
        assert_eq!(p(3, "(1 2)") * p(3, "(2 3)"), p(3, "(1 2 3)"));
        assert_eq!(p(3, "(1 2)(1 3)").to_string(), "(1 3 2)");
    }

    #[test]
    fn merging_identity_holds() {
        // (a,x1..xk)(b,y1..yl) = (a,b)(a,x1..xk,b,y1..yl)
        let lhs = p(7, "(1 2 3)(4 5 6 7)");
        let rhs = p(7, "(1 4)(1 2 3 4 5 6 7)");
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn displacement_and_parity() {
        let x = p(5, "(1 2)(3 4 5)");
        assert_eq!(x.displacement(), 3);
        assert!(!x.is_even());
        assert_eq!(x.order(), 6);
        assert_eq!(x.cycle_type(), vec![2, 3]);
    }

    #[test]
    fn json_round_trip() {
        let x = p(5, "(1 2)(3 4 5)");
        let s = serde_json::to_string(&x).unwrap();
        assert_eq!(s, r#"{"n":5,"cycles":[[1,2],[3,4,5]]}"#);
        let y: Permutation = serde_json::from_str(&s).unwrap();
        assert_eq!(x, y);
        let z: Permutation = serde_json::from_str(r#"{"n":5,"images":[2,1,4,5,3]}"#).unwrap();
        assert_eq!(x, z);
    }

    #[test]
    fn rejects_bad_input() {
        assert!(Permutation::from_images(&[0, 0, 1]).is_err());
        assert!(Permutation::parse(3, "(1 4)").is_err());
        assert!(serde_json::from_str::<Permutation>(r#"{"n":3,"images":[1,2]}"#).is_err());
    }

    #[test]
    fn conjugation_relabels_cycles() {
        let x = p(4, "(1 2 3)");
        let g = p(4, "(1 4)");
        assert_eq!(x.conjugate_by(&g), p(4, "(2 3 4)"));
        assert_eq!(x.conjugate_by(&g), &(&g * &x) * &g.inverse());
    }
}
