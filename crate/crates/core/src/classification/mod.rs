//! Graphs of transpositions, the tree form of length-`(n−2)` irredundant generating sets of
//! `A_n`, the seven types for `S_n`, and random sampling of such sets.

mod graph;
mod sample;
mod treeform;
mod types;

pub use graph::{
    has_unique_cycle, is_connected, is_forest, is_spanning_tree, random_tree, random_unicyclic, unique_cycle, Edge,
    LabeledEdge, LabeledGraph, Slot,
};
pub use sample::{sample_maximal_irredundant, SampleOptions, SampleReport};
pub use treeform::{
    build_original_graph, construct_from_tree_form, normalize_an, random_tree_form, uniqueness_check, CutReport,
    TreeForm, UniquenessReport,
};
pub use types::{classify_sn, construct_type, random_descriptor, TypeDescriptor};

use crate::group::PermGroup;
use crate::perm::Permutation;

/// `G_i = ⟨H \ {h_i}⟩` for every `i`.
pub(crate) fn siblings(n: usize, h: &[Permutation]) -> Vec<PermGroup> {
    (0..h.len())
        .map(|i| {
            let others: Vec<Permutation> =
                h.iter().enumerate().filter(|&(j, _)| j != i).map(|(_, x)| x.clone()).collect();
            PermGroup::from_generators(n, &others)
        })
        .collect()
}

/// Edges `c` with `c·h` a transposition or the identity: the edge itself for a transposition,
/// both edges of a double transposition, all three sides of a 3-cycle.
pub(crate) fn edge_options(h: &Permutation) -> Option<Vec<Edge>> {
    let cycles = h.cycles();
    match cycles.iter().map(Vec::len).collect::<Vec<_>>().as_slice() {
        [2] => Some(vec![Edge::new(cycles[0][0], cycles[0][1])]),
        [2, 2] => Some(vec![Edge::new(cycles[0][0], cycles[0][1]), Edge::new(cycles[1][0], cycles[1][1])]),
        [3] => {
            let c = &cycles[0];
            Some(vec![Edge::new(c[0], c[1]), Edge::new(c[1], c[2]), Edge::new(c[0], c[2])])
        }
        _ => None,
    }
}

/// The edge `p` with `h = c·p`, for `c` among the options of a non-transposition `h`.
pub(crate) fn partner(c: Edge, h: &Permutation) -> Edge {
    let p = &c.transposition(h.degree()) * h;
    Edge::of(&p).expect("partner of an edge option is a transposition")
}

/// Equal as sets once every element is identified with its inverse.
pub fn equal_up_to_inversion(a: &[Permutation], b: &[Permutation]) -> bool {
    let key = |set: &[Permutation]| {
        let mut v: Vec<Permutation> = set
            .iter()
            .map(|x| {
                let y = x.inverse();
                if y < *x {
                    y
                } else {
                    x.clone()
                }
            })
            .collect();
        v.sort_unstable();
        v
    };
    a.len() == b.len() && key(a) == key(b)
}
