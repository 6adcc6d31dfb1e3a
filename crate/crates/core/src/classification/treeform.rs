use std::collections::HashMap;

use rand::seq::SliceRandom;
use rand::Rng;
use serde::Serialize;

use super::graph::{is_spanning_tree, random_tree, Edge, LabeledEdge, LabeledGraph, Slot};
use super::{edge_options, equal_up_to_inversion, partner, siblings};
use crate::error::{Error, Result};
use crate::group::maximality::{intransitive_even, verify_almost_maximal, AlmostMaximal};
use crate::group::PermGroup;
use crate::irredundance::is_irredundant_generating;
use crate::perm::Permutation;

/// Smallest `x`, then smallest `y = h(x)`, with `x` and `y` in different orbits of `g`.
fn crossing_edge(h: &Permutation, g: &PermGroup) -> Option<Edge> {
    let orbits = g.orbits();
    let mut orbit_of = vec![0; h.degree()];
    for (i, o) in orbits.iter().enumerate() {
        for &p in o {
            orbit_of[p] = i;
        }
    }
    (0..h.degree()).find(|&x| orbit_of[x] != orbit_of[h.image(x)]).map(|x| Edge::new(x, h.image(x)))
}

/// The original graph: one `E1` edge per index whose sibling subgroup `G_i` is intransitive.
pub fn build_original_graph(h: &[Permutation], g: &PermGroup) -> Result<LabeledGraph> {
    let n = g.degree();
    if let Some(x) = h.iter().find(|x| x.degree() != n) {
        return Err(Error::DegreeMismatch(x.degree(), n));
    }
    if !is_irredundant_generating(g, h) {
        return Err(Error::Precondition("not an irredundant generating set".into()));
    }
    let edges = siblings(n, h)
        .iter()
        .enumerate()
        .filter(|(_, gi)| !gi.is_transitive())
        .filter_map(|(i, gi)| crossing_edge(&h[i], gi).map(|edge| LabeledEdge { edge, index: i, slot: Slot::E1 }))
        .collect();
    Ok(LabeledGraph { n, edges })
}

impl LabeledGraph {
    /// Adds `E2(h_i)`, the edge of `h_i·E1(h_i)`, wherever that product is a transposition.
    pub fn with_second_edges(&self, h: &[Permutation]) -> LabeledGraph {
        let mut edges = self.edges.clone();
        for e in self.edges.iter().filter(|e| e.slot == Slot::E1) {
            let p = &h[e.index] * &e.edge.transposition(self.n);
            if let Some(edge) = Edge::of(&p) {
                edges.push(LabeledEdge { edge, index: e.index, slot: Slot::E2 });
            }
        }
        LabeledGraph { n: self.n, edges }
    }
}

/// `{(s·g_i)^{e_i}}` where `s, g_1, .., g_{n−2}` are the edges of a spanning tree.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TreeForm {
    pub n: usize,
    pub s: Permutation,
    pub g: Vec<Permutation>,
    pub e: Vec<i8>,
}

impl TreeForm {
    pub fn edges(&self) -> Option<Vec<Edge>> {
        std::iter::once(&self.s).chain(&self.g).map(Edge::of).collect()
    }

    pub fn validate(&self) -> Result<()> {
        if self.n < 3 || self.g.len() + 2 != self.n || self.e.len() != self.g.len() {
            return Err(Error::InvalidInput(format!(
                "a tree form on {} points needs {} edges g_i",
                self.n,
                self.n.saturating_sub(2)
            )));
        }
        if self.e.iter().any(|&e| e != 1 && e != -1) {
            return Err(Error::InvalidInput("signs must be +1 or -1".into()));
        }
        let edges = self.edges().ok_or_else(|| Error::InvalidInput("s and every g_i must be transpositions".into()))?;
        if !is_spanning_tree(self.n, &edges) {
            return Err(Error::InvalidInput("s and the g_i do not form a spanning tree".into()));
        }
        Ok(())
    }
}

pub fn construct_from_tree_form(t: &TreeForm) -> Result<Vec<Permutation>> {
    t.validate()?;
    Ok(t.g.iter().zip(&t.e).map(|(g, &e)| (&t.s * g).pow(e as i64)).collect())
}

pub fn random_tree_form<R: Rng + ?Sized>(n: usize, rng: &mut R) -> TreeForm {
    let verts: Vec<usize> = (0..n).collect();
    let mut edges = random_tree(&verts, rng);
    edges.shuffle(rng);
    let s = edges[0].transposition(n);
    let g: Vec<Permutation> = edges[1..].iter().map(|e| e.transposition(n)).collect();
    let e = g.iter().map(|_| if rng.gen_bool(0.5) { 1 } else { -1 }).collect();
    TreeForm { n, s, g, e }
}

fn an_preconditions(h: &[Permutation]) -> Result<usize> {
    let n = h.first().map(Permutation::degree).ok_or_else(|| Error::InvalidInput("empty set".into()))?;
    if let Some(x) = h.iter().find(|x| x.degree() != n) {
        return Err(Error::DegreeMismatch(x.degree(), n));
    }
    if n < 3 || n == 5 || n == 6 {
        return Err(Error::Precondition(format!("degree {n} is outside n ≥ 3, n ∉ {{5, 6}}")));
    }
    if h.len() + 2 != n {
        return Err(Error::Precondition(format!("expected {} elements, got {}", n - 2, h.len())));
    }
    if !is_irredundant_generating(&PermGroup::alternating(n), h) {
        return Err(Error::Precondition(format!("not an irredundant generating set of A_{n}")));
    }
    Ok(n)
}

/// Reads `s` off the original graph: every `h_i` is `s·E1(h_i)` or its inverse.
fn from_original_graph(h: &[Permutation], n: usize) -> Option<TreeForm> {
    let gr = build_original_graph(h, &PermGroup::alternating(n)).ok()?;
    if gr.edges.len() != h.len() {
        return None;
    }
    let g: Vec<Permutation> = gr.edges.iter().map(|e| e.edge.transposition(n)).collect();
    let candidates = |i: usize| -> Vec<(Edge, i8)> {
        let gi = &g[i];
        [(&h[i] * gi, 1i8), (gi * &h[i], -1i8)].into_iter().filter_map(|(p, e)| Edge::of(&p).map(|c| (c, e))).collect()
    };
    let first: Vec<Edge> = candidates(0).into_iter().map(|(c, _)| c).collect();
    'cand: for s in first {
        let mut e = Vec::with_capacity(h.len());
        for i in 0..h.len() {
            match candidates(i).into_iter().find(|(c, _)| *c == s) {
                Some((_, sign)) => e.push(sign),
                None => continue 'cand,
            }
        }
        let t = TreeForm { n, s: s.transposition(n), g: g.clone(), e };
        if t.validate().is_ok() {
            return Some(t);
        }
    }
    None
}

/// A common side `s` of every element, each element then being `s·(s·h_i)`.
fn from_edge_options(h: &[Permutation], n: usize) -> Option<TreeForm> {
    let options: Vec<Vec<Edge>> = h.iter().map(edge_options).collect::<Option<_>>()?;
    let common = options[0].iter().filter(|c| options.iter().all(|o| o.contains(c)));
    for &s in common {
        let g: Vec<Permutation> = h.iter().map(|x| partner(s, x).transposition(n)).collect();
        let t = TreeForm { n, s: s.transposition(n), e: vec![1; g.len()], g };
        if t.validate().is_ok() {
            return Some(t);
        }
    }
    None
}

/// Normalizes a length-`(n−2)` irredundant generating set of `A_n` to tree form. Failure on a
/// valid input is a counterexample to the tree-form theorem and is reported as `unclassifiable`.
pub fn normalize_an(h: &[Permutation]) -> Result<TreeForm> {
    let n = an_preconditions(h)?;
    if let Some(x) = h.iter().find(|x| edge_options(x).is_none() || x.is_transposition()) {
        return Err(Error::Unclassifiable(format!("{x} is not a product of two transpositions")));
    }
    let form = from_original_graph(h, n)
        .or_else(|| from_edge_options(h, n))
        .ok_or_else(|| Error::Unclassifiable("no edge s completes the original graph to a spanning tree".into()))?;
    if !equal_up_to_inversion(&construct_from_tree_form(&form)?, h) {
        return Err(Error::VerificationFailed("tree form does not reconstruct the input".into()));
    }
    Ok(form)
}

#[derive(Clone, Debug, Serialize)]
pub struct CutReport {
    pub index: usize,
    /// 1-based.
    pub x: Vec<usize>,
    pub y: Vec<usize>,
    /// `G_i = (S_X × S_Y) ∩ A_n`.
    pub is_cut_group: bool,
    pub outcome: Option<AlmostMaximal>,
}

#[derive(Clone, Debug, Serialize)]
pub struct UniquenessReport {
    pub n: usize,
    pub cuts: Vec<CutReport>,
    /// Every `G_i` is a cut group that is maximal or has a unique maximal overgroup.
    pub unique: bool,
}

/// Moves `{0..|X|}` onto `X` and the rest onto `Y`, in order.
fn relabeling(x: &[usize], y: &[usize]) -> Permutation {
    let mut images = vec![0; x.len() + y.len()];
    for (i, &p) in x.iter().chain(y).enumerate() {
        images[i] = p;
    }
    Permutation::from_images(&images).expect("x and y partition the points")
}

/// For each `G_i`, checks `G_i = (S_X × S_Y) ∩ A_n` on its two orbits and decides by exhaustion
/// whether it is maximal or lies in the single overgroup `(S_{n/2} ≀ S_2) ∩ A_n`.
pub fn uniqueness_check(h: &[Permutation]) -> Result<UniquenessReport> {
    let n = an_preconditions(h)?;
    if n > 8 {
        return Err(Error::DegreeCap(n, 8));
    }
    let mut by_size: HashMap<usize, AlmostMaximal> = HashMap::new();
    let mut cuts = Vec::with_capacity(h.len());
    for (index, gi) in siblings(n, h).iter().enumerate() {
        let orbits = gi.orbits();
        let (x, y) = match orbits.as_slice() {
            [a, b] => (a.clone(), b.clone()),
            _ => (orbits.first().cloned().unwrap_or_default(), (0..n).filter(|p| !orbits[0].contains(p)).collect()),
        };
        let is_cut_group = orbits.len() == 2 && gi.same_group(&intransitive_even(n, &x));
        let outcome = if is_cut_group {
            let canonical = match by_size.get(&x.len()) {
                Some(o) => o.clone(),
                None => {
                    let o = verify_almost_maximal(n, &(0..x.len()).collect::<Vec<_>>())?;
                    by_size.insert(x.len(), o.clone());
                    o
                }
            };
            let sigma = relabeling(&x, &y);
            Some(match canonical {
                AlmostMaximal::Maximal => AlmostMaximal::Maximal,
                AlmostMaximal::UniqueOvergroup { generators, order } => AlmostMaximal::UniqueOvergroup {
                    generators: generators.iter().map(|g| g.conjugate_by(&sigma)).collect(),
                    order,
                },
                AlmostMaximal::Counterexample { h, generated_order } => {
                    AlmostMaximal::Counterexample { h: h.conjugate_by(&sigma), generated_order }
                }
            })
        } else {
            None
        };
        let one = |v: &[usize]| v.iter().map(|p| p + 1).collect();
        cuts.push(CutReport { index, x: one(&x), y: one(&y), is_cut_group, outcome });
    }
    let unique = cuts
        .iter()
        .all(|c| matches!(c.outcome, Some(AlmostMaximal::Maximal) | Some(AlmostMaximal::UniqueOvergroup { .. })));
    Ok(UniquenessReport { n, cuts, unique })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::classification::graph::is_forest;
    use rand::SeedableRng;

    fn p(n: usize, s: &str) -> Permutation {
        Permutation::parse(n, s).unwrap()
    }

    #[test]
    fn a4_star() {
        let h = [p(4, "(1 3 2)"), p(4, "(1 4 2)")];
        let t = normalize_an(&h).unwrap();
        assert!(equal_up_to_inversion(&construct_from_tree_form(&t).unwrap(), &h));
        let star = TreeForm { n: 4, s: p(4, "(1 2)"), g: vec![p(4, "(1 3)"), p(4, "(1 4)")], e: vec![1, 1] };
        assert_eq!(construct_from_tree_form(&star).unwrap(), h.to_vec());
        let gr = build_original_graph(&h, &PermGroup::alternating(4)).unwrap();
        assert_eq!(gr.edges.len(), 2);
        assert!(gr.is_forest());
    }

    #[test]
    fn coxeter_path() {
        let h: Vec<Permutation> = (0..3).map(|i| Permutation::transposition(4, i, i + 1)).collect();
        let gr = build_original_graph(&h, &PermGroup::symmetric(4)).unwrap();
        assert_eq!(gr.plain_edges(), vec![Edge::new(0, 1), Edge::new(1, 2), Edge::new(2, 3)]);
    }

    #[test]
    fn round_trip_random_forms() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(11);
        for n in [3, 4, 7, 8] {
            for _ in 0..20 {
                let t = random_tree_form(n, &mut rng);
                let h = construct_from_tree_form(&t).unwrap();
                let back = normalize_an(&h).unwrap();
                assert!(equal_up_to_inversion(&construct_from_tree_form(&back).unwrap(), &h));
                let gr = build_original_graph(&h, &PermGroup::alternating(n)).unwrap();
                assert!(is_forest(n, &gr.plain_edges()));
            }
        }
    }

    #[test]
    fn wrong_size_rejected() {
        assert!(matches!(normalize_an(&[p(4, "(1 2 3)")]), Err(Error::Precondition(_))));
    }

    #[test]
    fn uniqueness_small() {
        let r = uniqueness_check(&[p(4, "(1 3 2)"), p(4, "(1 4 2)")]).unwrap();
        assert!(r.unique);
        assert!(r.cuts.iter().all(|c| matches!(c.outcome, Some(AlmostMaximal::Maximal))));
    }
}
