//! Irredundant sets: exact searches for m(G) and i(G), the replacement
//! property, flatness, and the quotient and direct-product refinements.

mod refine;
mod search;

pub use refine::{direct_product_refine, whiston_refine, DirectProductCertificate, FactorPart, WhistonRefinement};
pub use search::{
    enumerate_irredundant_generating, i_search, is_flat, m_search, replacement_property, Budget, FlatnessReport,
    ReplacementReport, SearchOptions, SearchReport,
};

use crate::group::PermGroup;
use crate::perm::Permutation;

/// No element lies in the group generated by the others.
pub fn is_irredundant(n: usize, set: &[Permutation]) -> bool {
    (0..set.len()).all(|j| {
        let others: Vec<Permutation> =
            set.iter().enumerate().filter(|&(i, _)| i != j).map(|(_, p)| p.clone()).collect();
        !PermGroup::from_generators(n, &others).contains(&set[j])
    })
}

/// Irredundant and generating `g`.
pub fn is_irredundant_generating(g: &PermGroup, set: &[Permutation]) -> bool {
    let span = PermGroup::from_generators(g.degree(), set);
    span.same_group(g) && is_irredundant(g.degree(), set)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn irredundance_examples() {
        let p = |s: &str| Permutation::parse(4, s).unwrap();
        let s4 = PermGroup::symmetric(4);
        assert!(is_irredundant_generating(&s4, &[p("(1 2)"), p("(2 3)"), p("(3 4)")]));
        assert!(!is_irredundant(4, &[p("(1 2)"), p("(2 3)"), p("(1 3)")]));
        assert!(!is_irredundant(4, &[p("()"), p("(1 2)")]));
    }
}
