use petgraph::unionfind::UnionFind;
use rand::seq::SliceRandom;
use rand::Rng;
use serde::{Serialize, Serializer};

use crate::perm::Permutation;

/// Unordered vertex pair with `0 ≤ u < v`; distinct from the transposition `(u v)` it names.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Edge(pub usize, pub usize);

impl Edge {
    pub fn new(a: usize, b: usize) -> Self {
        assert_ne!(a, b, "edge endpoints must differ");
        Edge(a.min(b), a.max(b))
    }

    pub fn of(t: &Permutation) -> Option<Edge> {
        t.as_transposition().map(|(a, b)| Edge::new(a, b))
    }

    pub fn transposition(&self, n: usize) -> Permutation {
        Permutation::transposition(n, self.0, self.1)
    }

    pub fn touches(&self, other: &Edge) -> bool {
        self.0 == other.0 || self.0 == other.1 || self.1 == other.0 || self.1 == other.1
    }
}

impl Serialize for Edge {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        [self.0 + 1, self.1 + 1].serialize(s)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Slot {
    E1,
    E2,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct LabeledEdge {
    pub edge: Edge,
    /// Index of the generating-set element the edge came from.
    pub index: usize,
    pub slot: Slot,
}

#[derive(Clone, Debug, Serialize)]
pub struct LabeledGraph {
    pub n: usize,
    pub edges: Vec<LabeledEdge>,
}

impl LabeledGraph {
    pub fn plain_edges(&self) -> Vec<Edge> {
        self.edges.iter().map(|e| e.edge).collect()
    }

    pub fn is_forest(&self) -> bool {
        is_forest(self.n, &self.plain_edges())
    }
}

pub fn is_forest(n: usize, edges: &[Edge]) -> bool {
    let mut uf = UnionFind::<usize>::new(n);
    edges.iter().all(|e| uf.union(e.0, e.1))
}

pub fn is_connected(n: usize, edges: &[Edge]) -> bool {
    let mut uf = UnionFind::<usize>::new(n);
    for e in edges {
        uf.union(e.0, e.1);
    }
    (1..n).all(|v| uf.equiv(0, v))
}

pub fn is_spanning_tree(n: usize, edges: &[Edge]) -> bool {
    edges.len() + 1 == n && is_forest(n, edges)
}

/// Edges of the unique cycle of a connected graph with `n` edges on `n` vertices, found by
/// stripping leaves; `None` for any other shape.
pub fn unique_cycle(n: usize, edges: &[Edge]) -> Option<Vec<Edge>> {
    if edges.len() != n || !is_connected(n, edges) {
        return None;
    }
    let mut alive = vec![true; edges.len()];
    let mut degree = vec![0usize; n];
    for e in edges {
        degree[e.0] += 1;
        degree[e.1] += 1;
    }
    let mut leaves: Vec<usize> = (0..n).filter(|&v| degree[v] == 1).collect();
    while let Some(v) = leaves.pop() {
        let Some(i) = (0..edges.len()).find(|&i| alive[i] && (edges[i].0 == v || edges[i].1 == v)) else { continue };
        alive[i] = false;
        for w in [edges[i].0, edges[i].1] {
            degree[w] -= 1;
            if degree[w] == 1 {
                leaves.push(w);
            }
        }
    }
    Some((0..edges.len()).filter(|&i| alive[i]).map(|i| edges[i]).collect())
}

/// The cycle is exactly `seq`, traversed in that cyclic order.
pub fn has_unique_cycle(n: usize, edges: &[Edge], seq: &[Edge]) -> bool {
    let Some(mut cycle) = unique_cycle(n, edges) else { return false };
    let mut want = seq.to_vec();
    cycle.sort();
    want.sort();
    if cycle != want {
        return false;
    }
    let k = seq.len();
    (0..k).all(|i| seq[i].touches(&seq[(i + 1) % k]))
}

/// Uniform random labelled tree on `vertices` via a Prüfer sequence.
pub fn random_tree<R: Rng + ?Sized>(vertices: &[usize], rng: &mut R) -> Vec<Edge> {
    let m = vertices.len();
    if m < 2 {
        return Vec::new();
    }
    if m == 2 {
        return vec![Edge::new(vertices[0], vertices[1])];
    }
    let code: Vec<usize> = (0..m - 2).map(|_| rng.gen_range(0..m)).collect();
    let mut degree = vec![1usize; m];
    for &c in &code {
        degree[c] += 1;
    }
    let mut edges = Vec::with_capacity(m - 1);
    for &c in &code {
        let leaf = (0..m).find(|&v| degree[v] == 1).unwrap();
        edges.push(Edge::new(vertices[leaf], vertices[c]));
        degree[leaf] -= 1;
        degree[c] -= 1;
    }
    let rest: Vec<usize> = (0..m).filter(|&v| degree[v] == 1).collect();
    edges.push(Edge::new(vertices[rest[0]], vertices[rest[1]]));
    edges
}

/// A cycle through `len` random vertices, listed in cyclic order, plus a random forest
/// hanging the remaining vertices off it. Returns `(cycle, other edges)`.
pub fn random_unicyclic<R: Rng + ?Sized>(n: usize, len: usize, rng: &mut R) -> (Vec<Edge>, Vec<Edge>) {
    let mut verts: Vec<usize> = (0..n).collect();
    verts.shuffle(rng);
    let cyc: Vec<usize> = verts[..len].to_vec();
    let cycle = (0..len).map(|i| Edge::new(cyc[i], cyc[(i + 1) % len])).collect();
    let mut placed = cyc;
    let mut rest = Vec::new();
    for &v in &verts[len..] {
        let w = placed[rng.gen_range(0..placed.len())];
        rest.push(Edge::new(v, w));
        placed.push(v);
    }
    (cycle, rest)
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;

    #[test]
    fn forest_checks() {
        assert!(is_forest(4, &[Edge::new(0, 1), Edge::new(1, 2), Edge::new(2, 3)]));
        assert!(!is_forest(3, &[Edge::new(0, 1), Edge::new(1, 2), Edge::new(0, 2)]));
        assert!(is_forest(3, &[]));
    }

    #[test]
    fn cycle_detection() {
        let e = [Edge::new(0, 1), Edge::new(1, 2), Edge::new(2, 0), Edge::new(2, 3)];
        let c = unique_cycle(4, &e).unwrap();
        assert_eq!(c.len(), 3);
        assert!(has_unique_cycle(4, &e, &[Edge::new(0, 1), Edge::new(1, 2), Edge::new(0, 2)]));
    }

    #[test]
    fn random_shapes() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(3);
        for n in 2..12 {
            let verts: Vec<usize> = (0..n).collect();
            assert!(is_spanning_tree(n, &random_tree(&verts, &mut rng)));
            if n >= 4 {
                let (c, r) = random_unicyclic(n, 4, &mut rng);
                let all: Vec<Edge> = c.iter().chain(&r).copied().collect();
                assert!(has_unique_cycle(n, &all, &c));
            }
        }
    }
}
