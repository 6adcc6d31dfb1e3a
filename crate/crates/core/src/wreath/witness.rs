use serde::Serialize;

use crate::classification::{construct_from_tree_form, TreeForm};
use crate::error::{Error, Result};
use crate::group::PermGroup;
use crate::irredundance::{is_irredundant, is_irredundant_generating, m_search, SearchOptions};
use crate::perm::Permutation;
use crate::wreath::product::{
    build_wreath, embed_in_block, embed_top, embed_vector, is_nonabelian_simple, is_two_transitive,
};

#[derive(Clone, Debug, Serialize)]
pub struct WreathWitness {
    pub degree: usize,
    pub size: usize,
    pub elements: Vec<Permutation>,
    pub irredundant: bool,
    /// Whether the set generates the whole wreath product; `None` when generation is not claimed.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub generating: Option<bool>,
}

/// A known irredundant generating set: `(1 2)(2 3), (1 2)(3 4), .., (1 2)(n−1 n)` for `A_n`,
/// the Coxeter transpositions for `S_n`, otherwise an `m_search` witness.
pub fn default_irredundant_set(s: &PermGroup) -> Result<Vec<Permutation>> {
    let n = s.degree();
    if n >= 4 && s.is_alternating_on_degree() {
        let form = TreeForm {
            n,
            s: Permutation::transposition(n, 0, 1),
            g: (1..n - 1).map(|i| Permutation::transposition(n, i, i + 1)).collect(),
            e: vec![1; n - 2],
        };
        return construct_from_tree_form(&form);
    }
    if n >= 2 && s.is_symmetric_on_degree() {
        return Ok((0..n - 1).map(|i| Permutation::transposition(n, i, i + 1)).collect());
    }
    Ok(m_search(s, &SearchOptions::default())?.witness)
}

fn check_irredundant_generating(g: &PermGroup, set: &[Permutation], what: &str) -> Result<()> {
    if is_irredundant_generating(g, set) {
        Ok(())
    } else {
        Err(Error::Precondition(format!("{what} is not an irredundant generating set")))
    }
}

fn check_hypotheses(s: &PermGroup, s_set: &[Permutation], p: &PermGroup, p_set: &[Permutation]) -> Result<()> {
    if !is_nonabelian_simple(s)? {
        return Err(Error::Precondition("S must be nonabelian simple".into()));
    }
    if !is_two_transitive(p) {
        return Err(Error::Precondition("P must be 2-transitive".into()));
    }
    if p.degree() == 2 {
        return Err(Error::Precondition("P must not be Z_2".into()));
    }
    check_irredundant_generating(s, s_set, "the set for S")?;
    check_irredundant_generating(p, p_set, "the set for P")
}

/// `{(s_i, 1, .., 1)} ∪ {p_j}` in `S ≀ P`, of size `|S_set| + |P_set|`.
pub fn thm10_witness(
    s: &PermGroup,
    s_set: &[Permutation],
    p: &PermGroup,
    p_set: &[Permutation],
) -> Result<WreathWitness> {
    check_hypotheses(s, s_set, p, p_set)?;
    let w = build_wreath(s, p)?;
    let (g, d) = (s.degree(), p.degree());
    let mut elements: Vec<Permutation> = s_set.iter().map(|x| embed_in_block(x, 0, d)).collect();
    elements.extend(p_set.iter().map(|x| embed_top(x, g)));
    Ok(finish(&w.group, elements))
}

/// `{(t_i, .., t_i)} ∪ {(t, 1, .., 1)} ∪ {p_j}`, of size `|T| + |P_set| + 1`, for `t` able to
/// replace no member of `T`.
pub fn thm10_nonreplacement_witness(
    s: &PermGroup,
    t_set: &[Permutation],
    t: &Permutation,
    p: &PermGroup,
    p_set: &[Permutation],
) -> Result<WreathWitness> {
    check_hypotheses(s, t_set, p, p_set)?;
    if t.is_identity() || !s.contains(t) {
        return Err(Error::Precondition("t must be a nonidentity element of S".into()));
    }
    let g = s.degree();
    for i in 0..t_set.len() {
        let mut swapped = t_set.to_vec();
        swapped[i] = t.clone();
        if PermGroup::from_generators(g, &swapped).same_group(s) {
            return Err(Error::Precondition(format!("t replaces member {} of T", i + 1)));
        }
    }
    let w = build_wreath(s, p)?;
    let d = p.degree();
    let mut elements: Vec<Permutation> = t_set.iter().map(|x| embed_vector(&vec![x.clone(); d])).collect();
    elements.push(embed_in_block(t, 0, d));
    elements.extend(p_set.iter().map(|x| embed_top(x, g)));
    Ok(finish(&w.group, elements))
}

/// The `|S_set|·n` elements `(1, .., s_i, .., 1)`, checked irredundant inside `S^n`.
pub fn thm11_witness(s_set: &[Permutation], n: usize) -> Result<WreathWitness> {
    let Some(g) = s_set.first().map(Permutation::degree) else {
        return Err(Error::InvalidInput("empty set".into()));
    };
    let degree = g * n;
    if degree > crate::perm::MAX_DEGREE {
        return Err(Error::DegreeCap(degree, crate::perm::MAX_DEGREE));
    }
    if n == 0 || s_set.iter().any(|x| x.degree() != g) {
        return Err(Error::InvalidInput("n must be positive and the set of one degree".into()));
    }
    let elements: Vec<Permutation> = (0..n).flat_map(|b| s_set.iter().map(move |x| embed_in_block(x, b, n))).collect();
    let irredundant = is_irredundant(degree, &elements);
    Ok(WreathWitness { degree, size: elements.len(), elements, irredundant, generating: None })
}

fn finish(group: &PermGroup, elements: Vec<Permutation>) -> WreathWitness {
    let degree = group.degree();
    let irredundant = is_irredundant(degree, &elements);
    let generating = PermGroup::from_generators(degree, &elements).same_group(group);
    WreathWitness { degree, size: elements.len(), elements, irredundant, generating: Some(generating) }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn default_sets() {
        for n in 4..9 {
            let a = PermGroup::alternating(n);
            let set = default_irredundant_set(&a).unwrap();
            assert_eq!(set.len(), n - 2);
            assert!(is_irredundant_generating(&a, &set));
            let s = PermGroup::symmetric(n);
            assert!(is_irredundant_generating(&s, &default_irredundant_set(&s).unwrap()));
        }
    }

    #[test]
    fn a5_wreath_s3() {
        let (a5, s3) = (PermGroup::alternating(5), PermGroup::symmetric(3));
        let w = thm10_witness(&a5, &default_irredundant_set(&a5).unwrap(), &s3, &default_irredundant_set(&s3).unwrap())
            .unwrap();
        assert_eq!(w.size, 5);
        assert!(w.irredundant && w.generating == Some(true));
    }

    #[test]
    fn hypotheses_enforced() {
        let a5 = PermGroup::alternating(5);
        let c4 = PermGroup::cyclic(4);
        let set = default_irredundant_set(&a5).unwrap();
        assert!(matches!(thm10_witness(&a5, &set, &c4, c4.generators()), Err(Error::Precondition(_))));
        let s4 = PermGroup::symmetric(4);
        let s4_set = default_irredundant_set(&s4).unwrap();
        let s3 = PermGroup::symmetric(3);
        let s3_set = default_irredundant_set(&s3).unwrap();
        assert!(matches!(thm10_witness(&s4, &s4_set, &s3, &s3_set), Err(Error::Precondition(_))));
        let t = Permutation::parse(5, "(1 2 3 4 5)").unwrap();
        assert!(matches!(thm10_nonreplacement_witness(&a5, &set, &t, &s3, &s3_set), Err(Error::Precondition(_))));
    }

    #[test]
    fn thm11_small() {
        let set = default_irredundant_set(&PermGroup::alternating(5)).unwrap();
        let w = thm11_witness(&set, 3).unwrap();
        assert_eq!(w.size, 9);
        assert!(w.irredundant);
        assert_eq!(thm11_witness(&set, 1).unwrap().elements, set);
    }
}
