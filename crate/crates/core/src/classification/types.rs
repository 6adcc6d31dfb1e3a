use rand::seq::SliceRandom;
use rand::Rng;
use serde::{Deserialize, Serialize};

use super::graph::{has_unique_cycle, is_spanning_tree, random_tree, random_unicyclic, Edge};
use super::{edge_options, equal_up_to_inversion, partner, siblings};
use crate::error::{Error, Result};
use crate::group::PermGroup;
use crate::irredundance::is_irredundant_generating;
use crate::perm::Permutation;

/// One of the seven shapes of a length-`(n−2)` irredundant generating set of `S_n`. Elements are
/// listed in the order the shape prescribes; `s_list` holds `s_1, s_2, ..` from index 0.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TypeDescriptor {
    pub type_id: u8,
    pub n: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub s: Option<Permutation>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub t: Option<Permutation>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub r: Option<Permutation>,
    pub s_list: Vec<Permutation>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub k: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub l: Option<usize>,
}

fn invalid(msg: impl Into<String>) -> Error {
    Error::InvalidInput(msg.into())
}

fn list_len(type_id: u8, n: usize) -> usize {
    match type_id {
        1 | 5 => n - 2,
        2 => n,
        3 | 7 => n - 3,
        _ => n - 1,
    }
}

struct Edges {
    s: Option<Edge>,
    t: Option<Edge>,
    r: Option<Edge>,
    list: Vec<Edge>,
}

impl TypeDescriptor {
    fn edge(&self, p: &Option<Permutation>, name: &str, needed: bool) -> Result<Option<Edge>> {
        match (p, needed) {
            (Some(p), true) => {
                if p.degree() != self.n {
                    return Err(Error::DegreeMismatch(p.degree(), self.n));
                }
                Edge::of(p).map(Some).ok_or_else(|| invalid(format!("{name} must be a transposition")))
            }
            (None, true) => Err(invalid(format!("type {} needs {name}", self.type_id))),
            (Some(_), false) => Err(invalid(format!("type {} takes no {name}", self.type_id))),
            (None, false) => Ok(None),
        }
    }

    fn edges(&self) -> Result<Edges> {
        let ty = self.type_id;
        if !(1..=7).contains(&ty) {
            return Err(invalid(format!("type {ty} is not in 1..7")));
        }
        if self.n < if ty <= 3 { 4 } else { 5 } {
            return Err(invalid(format!("type {ty} needs a larger degree than {}", self.n)));
        }
        let s = self.edge(&self.s, "s", ty != 2)?;
        let t = self.edge(&self.t, "t", matches!(ty, 3 | 5 | 7))?;
        let r = self.edge(&self.r, "r", ty == 7)?;
        let want = list_len(ty, self.n);
        if self.s_list.len() != want {
            return Err(invalid(format!("type {ty} on {} points needs {want} transpositions s_i", self.n)));
        }
        if let Some(p) = self.s_list.iter().find(|p| p.degree() != self.n) {
            return Err(Error::DegreeMismatch(p.degree(), self.n));
        }
        let list: Vec<Edge> = self
            .s_list
            .iter()
            .map(Edge::of)
            .collect::<Option<_>>()
            .ok_or_else(|| invalid("every s_i must be a transposition"))?;
        let mut all: Vec<Edge> = s.iter().chain(&t).chain(&r).chain(&list).copied().collect();
        all.sort_unstable();
        all.dedup();
        if all.len() != list.len() + [s, t, r].iter().flatten().count() {
            return Err(invalid("the transpositions must be distinct"));
        }
        Ok(Edges { s, t, r, list })
    }

    fn check_cuts(&self) -> Result<()> {
        let n = self.n;
        let (k, l) = (self.k, self.l);
        let ok = match self.type_id {
            1 => l.is_none() && k.is_some_and(|k| 1 <= k && k < n - 2),
            3 => l.is_none() && k.is_some_and(|k| 1 <= k && k <= n - 3),
            5 => l.is_none() && k.is_some_and(|k| 3 <= k && k <= n - 2),
            7 => matches!((k, l), (Some(k), Some(l)) if 1 <= k && k < l && l <= n - 3),
            _ => k.is_none() && l.is_none(),
        };
        if ok {
            Ok(())
        } else {
            Err(invalid(format!("cut indices k = {k:?}, l = {l:?} are out of range for type {}", self.type_id)))
        }
    }

    /// The graph condition of the named type.
    pub fn validate(&self) -> Result<()> {
        let e = self.edges()?;
        self.check_cuts()?;
        let n = self.n;
        let all: Vec<Edge> = e.s.iter().chain(&e.t).chain(&e.r).chain(&e.list).copied().collect();
        let li = &e.list;
        let ok = match self.type_id {
            1 | 3 => is_spanning_tree(n, &all),
            2 | 4 => has_unique_cycle(n, &all, &[li[0], li[2], li[1], li[3]]),
            5 => has_unique_cycle(n, &all, &[li[0], e.s.unwrap(), li[1], e.t.unwrap()]),
            6 => has_unique_cycle(n, &all, &[li[0], li[2], li[1], li[3], e.s.unwrap()]),
            _ => has_unique_cycle(n, &all, &[e.s.unwrap(), e.t.unwrap(), e.r.unwrap()]),
        };
        if ok {
            Ok(())
        } else {
            Err(invalid(format!("the graph condition of type {} fails", self.type_id)))
        }
    }
}

/// The literal element list of a descriptor.
pub fn construct_type(d: &TypeDescriptor) -> Result<Vec<Permutation>> {
    d.validate()?;
    let sl = &d.s_list;
    let prod = |a: &Option<Permutation>, b: &Permutation| a.as_ref().unwrap() * b;
    let n = d.n;
    let k = d.k.unwrap_or(0);
    let mut out = Vec::with_capacity(n - 2);
    match d.type_id {
        1 => {
            out.extend(sl[..k].iter().map(|x| prod(&d.s, x)));
            out.extend(sl[k..].iter().cloned());
        }
        2 => {
            out.push(&sl[0] * &sl[1]);
            out.push(&sl[2] * &sl[3]);
            out.extend(sl[4..].iter().cloned());
        }
        3 => {
            out.extend(sl[..k].iter().map(|x| prod(&d.t, x)));
            out.push(d.s.clone().unwrap());
            out.extend(sl[k..].iter().map(|x| prod(&d.s, x)));
        }
        4 | 6 => {
            out.push(&sl[0] * &sl[1]);
            out.push(&sl[2] * &sl[3]);
            out.push(d.s.clone().unwrap());
            out.extend(sl[4..].iter().map(|x| prod(&d.s, x)));
        }
        5 => {
            out.push(&sl[0] * &sl[1]);
            out.extend(sl[2..k].iter().map(|x| prod(&d.t, x)));
            out.push(d.s.clone().unwrap());
            out.extend(sl[k..].iter().map(|x| prod(&d.s, x)));
        }
        _ => {
            let l = d.l.unwrap();
            out.extend(sl[..k].iter().map(|x| prod(&d.t, x)));
            out.extend(sl[k..l].iter().map(|x| prod(&d.r, x)));
            out.push(d.s.clone().unwrap());
            out.extend(sl[l..].iter().map(|x| prod(&d.s, x)));
        }
    }
    Ok(out)
}

fn descriptor(
    type_id: u8,
    n: usize,
    s: Option<Edge>,
    t: Option<Edge>,
    r: Option<Edge>,
    list: &[Edge],
) -> TypeDescriptor {
    let tr = |e: Edge| e.transposition(n);
    TypeDescriptor {
        type_id,
        n,
        s: s.map(tr),
        t: t.map(tr),
        r: r.map(tr),
        s_list: list.iter().map(|&e| tr(e)).collect(),
        k: None,
        l: None,
    }
}

/// A uniformly shuffled descriptor of the given type. Type 3 keeps `k ≤ n − 4`, since at
/// `k = n − 3` its element list coincides with a type-1 list.
pub fn random_descriptor<R: Rng + ?Sized>(type_id: u8, n: usize, rng: &mut R) -> Result<TypeDescriptor> {
    let min_n = match type_id {
        1 | 2 => 4,
        3..=7 => 5,
        _ => return Err(invalid(format!("type {type_id} is not in 1..7"))),
    };
    if n < min_n {
        return Err(invalid(format!("type {type_id} needs n ≥ {min_n}")));
    }
    let verts: Vec<usize> = (0..n).collect();
    let tree = |rng: &mut R| {
        let mut e = random_tree(&verts, rng);
        e.shuffle(rng);
        e
    };
    let cyclic = |len: usize, rng: &mut R| {
        let (c, mut rest) = random_unicyclic(n, len, rng);
        rest.shuffle(rng);
        (c, rest)
    };
    let d = match type_id {
        1 => {
            let e = tree(rng);
            let mut d = descriptor(1, n, Some(e[0]), None, None, &e[1..]);
            d.k = Some(rng.gen_range(1..n - 2));
            d
        }
        2 => {
            let (c, rest) = cyclic(4, rng);
            let list: Vec<Edge> = [c[0], c[2], c[1], c[3]].into_iter().chain(rest).collect();
            descriptor(2, n, None, None, None, &list)
        }
        3 => {
            let e = tree(rng);
            let mut d = descriptor(3, n, Some(e[1]), Some(e[0]), None, &e[2..]);
            d.k = Some(rng.gen_range(1..=n - 4));
            d
        }
        4 => {
            let (c, rest) = cyclic(4, rng);
            let list: Vec<Edge> = [c[0], c[2], c[1], c[3]].into_iter().chain(rest[1..].iter().copied()).collect();
            descriptor(4, n, Some(rest[0]), None, None, &list)
        }
        5 => {
            let (c, rest) = cyclic(4, rng);
            let list: Vec<Edge> = [c[0], c[2]].into_iter().chain(rest).collect();
            let mut d = descriptor(5, n, Some(c[1]), Some(c[3]), None, &list);
            d.k = Some(rng.gen_range(3..=n - 2));
            d
        }
        6 => {
            let (c, rest) = cyclic(5, rng);
            let list: Vec<Edge> = [c[0], c[2], c[1], c[3]].into_iter().chain(rest).collect();
            descriptor(6, n, Some(c[4]), None, None, &list)
        }
        _ => {
            let (c, rest) = cyclic(3, rng);
            let mut d = descriptor(7, n, Some(c[0]), Some(c[1]), Some(c[2]), &rest);
            let k = rng.gen_range(1..n - 3);
            d.k = Some(k);
            d.l = Some(rng.gen_range(k + 1..=n - 3));
            d
        }
    };
    d.validate()?;
    Ok(d)
}

struct Input<'a> {
    n: usize,
    h: &'a [Permutation],
    options: Vec<Vec<Edge>>,
}

impl Input<'_> {
    fn is_bare(&self, i: usize) -> bool {
        self.h[i].is_transposition()
    }

    fn is_double(&self, i: usize) -> bool {
        self.h[i].cycle_type() == [2, 2]
    }

    fn admits(&self, i: usize, c: Edge) -> bool {
        self.options[i].contains(&c)
    }

    fn common(&self, idx: &[usize]) -> Vec<Edge> {
        match idx.first() {
            Some(&f) => self.options[f].iter().copied().filter(|&c| idx.iter().all(|&i| self.admits(i, c))).collect(),
            None => Vec::new(),
        }
    }

    fn partners(&self, c: Edge, idx: &[usize]) -> Vec<Edge> {
        idx.iter().map(|&i| partner(c, &self.h[i])).collect()
    }

    fn accept(&self, d: TypeDescriptor) -> Option<TypeDescriptor> {
        let built = construct_type(&d).ok()?;
        equal_up_to_inversion(&built, self.h).then_some(d)
    }
}

/// No sibling subgroup is `A_n`: types 1 and 2.
fn case_one(inp: &Input) -> Option<TypeDescriptor> {
    let n = inp.n;
    let (bare, paired): (Vec<usize>, Vec<usize>) = (0..inp.h.len()).partition(|&i| inp.is_bare(i));
    let bare_edges: Vec<Edge> = bare.iter().map(|&i| inp.options[i][0]).collect();
    for c in inp.common(&paired) {
        let list: Vec<Edge> = inp.partners(c, &paired).into_iter().chain(bare_edges.iter().copied()).collect();
        let mut d = descriptor(1, n, Some(c), None, None, &list);
        d.k = Some(paired.len());
        if let Some(d) = inp.accept(d) {
            return Some(d);
        }
    }
    if let [i, j] = paired[..] {
        if inp.is_double(i) && inp.is_double(j) {
            let (a, b) = (&inp.options[i], &inp.options[j]);
            let list: Vec<Edge> = [a[0], a[1], b[0], b[1]].into_iter().chain(bare_edges).collect();
            return inp.accept(descriptor(2, n, None, None, None, &list));
        }
    }
    None
}

/// Some sibling subgroup is `A_n`: types 3 to 7, organised around the unique bare `s`.
fn case_two(inp: &Input) -> Option<TypeDescriptor> {
    let n = inp.n;
    let bare: Vec<usize> = (0..inp.h.len()).filter(|&i| inp.is_bare(i)).collect();
    let [si] = bare[..] else { return None };
    let s = inp.options[si][0];
    let (s_group, m): (Vec<usize>, Vec<usize>) = (0..inp.h.len()).filter(|&i| i != si).partition(|&i| inp.admits(i, s));
    let tail = inp.partners(s, &s_group);

    for t in inp.common(&m) {
        let list: Vec<Edge> = inp.partners(t, &m).into_iter().chain(tail.iter().copied()).collect();
        let mut d = descriptor(3, n, Some(s), Some(t), None, &list);
        d.k = Some(m.len());
        if let Some(d) = inp.accept(d) {
            return Some(d);
        }
    }

    let Edge(a, b) = s;
    for c in (0..n).filter(|&c| c != a && c != b) {
        for (t, r) in [(Edge::new(a, c), Edge::new(b, c)), (Edge::new(b, c), Edge::new(a, c))] {
            let (tg, rg): (Vec<usize>, Vec<usize>) = m.iter().partition(|&&i| inp.admits(i, t));
            if tg.is_empty() || rg.is_empty() || !rg.iter().all(|&i| inp.admits(i, r)) {
                continue;
            }
            let list: Vec<Edge> =
                inp.partners(t, &tg).into_iter().chain(inp.partners(r, &rg)).chain(tail.iter().copied()).collect();
            let mut d = descriptor(7, n, Some(s), Some(t), Some(r), &list);
            d.k = Some(tg.len());
            d.l = Some(tg.len() + rg.len());
            if let Some(d) = inp.accept(d) {
                return Some(d);
            }
        }
    }

    for &di in m.iter().filter(|&&i| inp.is_double(i)) {
        let rest: Vec<usize> = m.iter().copied().filter(|&i| i != di).collect();
        let (e1, e2) = (inp.options[di][0], inp.options[di][1]);

        if let [dj] = rest[..] {
            if inp.is_double(dj) {
                let (f1, f2) = (inp.options[dj][0], inp.options[dj][1]);
                for ty in [4u8, 6] {
                    for (s1, s2) in [(e1, e2), (e2, e1)] {
                        for (s3, s4) in [(f1, f2), (f2, f1)] {
                            let list: Vec<Edge> = [s1, s2, s3, s4].into_iter().chain(tail.iter().copied()).collect();
                            if let Some(d) = inp.accept(descriptor(ty, n, Some(s), None, None, &list)) {
                                return Some(d);
                            }
                        }
                    }
                }
            }
        }

        let other = |e: Edge, p: usize| if e.0 == p { e.1 } else { e.0 };
        for (s1, s2) in [(e1, e2), (e2, e1)] {
            let (Edge(x, y), touches) = (s, |e: Edge, p: usize| e.0 == p || e.1 == p);
            let (p1, p2) = if touches(s1, x) && touches(s2, y) {
                (x, y)
            } else if touches(s1, y) && touches(s2, x) {
                (y, x)
            } else {
                continue;
            };
            let t = Edge::new(other(s1, p1), other(s2, p2));
            if rest.is_empty() || !rest.iter().all(|&i| inp.admits(i, t)) {
                continue;
            }
            let list: Vec<Edge> =
                [s1, s2].into_iter().chain(inp.partners(t, &rest)).chain(tail.iter().copied()).collect();
            let mut d = descriptor(5, n, Some(s), Some(t), None, &list);
            d.k = Some(2 + rest.len());
            if let Some(d) = inp.accept(d) {
                return Some(d);
            }
        }
    }
    None
}

/// Classifies a length-`(n−2)` irredundant generating set of `S_n` into one of the seven types,
/// trying first the types predicted by whether some `⟨H \ {h_i}⟩` is `A_n`, then the rest. An
/// element `h` is read as `c·p` for any side `c` of it, which covers replacing `h` by `h⁻¹`.
/// Failure on a valid input is reported as `unclassifiable`; the shapes are only claimed for
/// `n > 24`.
pub fn classify_sn(h: &[Permutation]) -> Result<TypeDescriptor> {
    let n = h.first().map(Permutation::degree).ok_or_else(|| invalid("empty set"))?;
    if let Some(x) = h.iter().find(|x| x.degree() != n) {
        return Err(Error::DegreeMismatch(x.degree(), n));
    }
    if n < 4 || h.len() + 2 != n {
        return Err(Error::Precondition(format!("expected {} elements, got {}", n.saturating_sub(2), h.len())));
    }
    if !is_irredundant_generating(&PermGroup::symmetric(n), h) {
        return Err(Error::Precondition(format!("not an irredundant generating set of S_{n}")));
    }
    let options: Vec<Vec<Edge>> = h
        .iter()
        .map(|x| {
            edge_options(x)
                .ok_or_else(|| Error::Unclassifiable(format!("{x} is not a product of at most two transpositions")))
        })
        .collect::<Result<_>>()?;
    let inp = Input { n, h, options };
    let an = PermGroup::alternating(n);
    let has_an = siblings(n, h).iter().any(|g| g.same_group(&an));
    let found =
        if has_an { case_two(&inp).or_else(|| case_one(&inp)) } else { case_one(&inp).or_else(|| case_two(&inp)) };
    found.ok_or_else(|| {
        let case = if has_an { "some sibling subgroup is A_n" } else { "no sibling subgroup is A_n" };
        Error::Unclassifiable(format!("{case}, and no type matches"))
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;

    fn p(n: usize, s: &str) -> Permutation {
        Permutation::parse(n, s).unwrap()
    }

    #[test]
    fn type1_example() {
        let d = TypeDescriptor {
            type_id: 1,
            n: 5,
            s: Some(p(5, "(1 2)")),
            t: None,
            r: None,
            s_list: vec![p(5, "(2 3)"), p(5, "(3 4)"), p(5, "(4 5)")],
            k: Some(1),
            l: None,
        };
        let h = construct_type(&d).unwrap();
        assert_eq!(h, vec![p(5, "(1 2)(2 3)"), p(5, "(3 4)"), p(5, "(4 5)")]);
        assert!(is_irredundant_generating(&PermGroup::symmetric(5), &h));
        assert_eq!(classify_sn(&h).unwrap().type_id, 1);
    }

    #[test]
    fn type2_example() {
        let h = [p(6, "(1 2)(3 4)"), p(6, "(1 3)(2 4)"), p(6, "(4 5)"), p(6, "(5 6)")];
        assert!(is_irredundant_generating(&PermGroup::symmetric(6), &h));
        assert_eq!(classify_sn(&h).unwrap().type_id, 2);
    }

    #[test]
    fn invalid_graph_rejected() {
        let d = TypeDescriptor {
            type_id: 1,
            n: 5,
            s: Some(p(5, "(1 2)")),
            t: None,
            r: None,
            s_list: vec![p(5, "(2 3)"), p(5, "(1 3)"), p(5, "(4 5)")],
            k: Some(1),
            l: None,
        };
        assert!(construct_type(&d).is_err());
    }

    #[test]
    fn random_round_trips() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(5);
        let sn = |n| PermGroup::symmetric(n);
        for ty in 1..=7u8 {
            for n in [7, 8] {
                for _ in 0..5 {
                    let d = random_descriptor(ty, n, &mut rng).unwrap();
                    let h = construct_type(&d).unwrap();
                    assert!(is_irredundant_generating(&sn(n), &h), "type {ty}: {d:?}");
                    let back = classify_sn(&h).unwrap_or_else(|e| panic!("type {ty}: {e} on {d:?}"));
                    assert_eq!(back.type_id, ty, "{d:?}");
                }
            }
        }
    }
}
