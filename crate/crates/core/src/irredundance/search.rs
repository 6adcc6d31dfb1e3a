use std::ops::ControlFlow;
use std::time::Instant;

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::group::factor::big_omega_u64;
use crate::group::lattice::{Lattice, SubId};
use crate::group::{FiniteGroup, PermGroup};
use crate::perm::Permutation;

#[derive(Clone, Debug, Default)]
pub struct Budget {
    pub max_nodes: Option<u64>,
    pub max_seconds: Option<f64>,
}

#[derive(Clone, Debug, Default)]
pub struct SearchOptions {
    pub budget: Budget,
    /// Rayon workers for the split over first elements; 0 or 1 searches sequentially.
    pub workers: usize,
    /// Permutations normalising the group; conjugation by them is used as extra symmetry.
    pub normalizer: Vec<Permutation>,
    pub timing: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct SearchReport {
    pub invariant: String,
    pub value: usize,
    pub exact: bool,
    pub witness: Vec<Permutation>,
    pub nodes: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub seconds: Option<f64>,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
enum Mode {
    Generating,
    Any,
}

struct Searcher<'a> {
    lat: Lattice<'a>,
    mode: Mode,
    omega: Vec<u8>,
    nodes: u64,
    budget: Budget,
    start: Instant,
    exhausted: bool,
    best: usize,
    witness: Vec<u32>,
}

impl<'a> Searcher<'a> {
    fn new(g: &'a FiniteGroup, mode: Mode, budget: Budget, start: Instant) -> Self {
        Searcher {
            lat: Lattice::new(g),
            mode,
            omega: vec![u8::MAX; g.len() + 1],
            nodes: 0,
            budget,
            start,
            exhausted: false,
            best: 0,
            witness: Vec::new(),
        }
    }

    /// Ω(|G| / |H|), an upper bound on how many more elements an irredundant set spanning `H` can take.
    fn headroom(&mut self, h: SubId) -> usize {
        let ord = self.lat.order(h);
        if self.omega[ord] == u8::MAX {
            let index = self.lat.group().len() / ord;
            self.omega[ord] = big_omega_u64(index as u64) as u8;
        }
        self.omega[ord] as usize
    }

    fn tick(&mut self) -> bool {
        self.nodes += 1;
        if let Some(max) = self.budget.max_nodes {
            if self.nodes > max {
                self.exhausted = true;
            }
        }
        if self.nodes.is_multiple_of(1024) {
            if let Some(secs) = self.budget.max_seconds {
                if self.start.elapsed().as_secs_f64() > secs {
                    self.exhausted = true;
                }
            }
        }
        !self.exhausted
    }

    fn root(&mut self, r: u32) {
        let span = self.lat.join(0, r);
        let mut set = vec![r];
        self.dfs(&mut set, &[0], span);
    }

    fn dfs(&mut self, set: &mut Vec<u32>, others: &[SubId], span: SubId) {
        if !self.tick() {
            return;
        }
        let k = set.len();
        let whole = self.lat.is_whole(span);
        if (self.mode == Mode::Any || whole) && k > self.best {
            self.best = k;
            self.witness = set.clone();
        }
        if whole || k + self.headroom(span) <= self.best {
            return;
        }
        let n = self.lat.group().len() as u32;
        let next = if k == 1 { 1 } else { set[k - 1] + 1 };
        let mut new_others = Vec::with_capacity(k + 1);
        for t in next..n {
            if t == set[0] || self.lat.contains(span, t) {
                continue;
            }
            let nspan = self.lat.join(span, t);
            if k + 1 + self.headroom(nspan) <= self.best {
                continue;
            }
            if !extend_others(&mut self.lat, set, others, t, &mut new_others) {
                continue;
            }
            new_others.push(span);
            set.push(t);
            let child = std::mem::take(&mut new_others);
            self.dfs(set, &child, nspan);
            new_others = child;
            set.pop();
            if self.exhausted {
                return;
            }
        }
    }
}

/// Fills `out` with `⟨S \ s_j, t⟩` for each j, or returns false if some `s_j` falls inside.
fn extend_others(lat: &mut Lattice, set: &[u32], others: &[SubId], t: u32, out: &mut Vec<SubId>) -> bool {
    out.clear();
    for (j, &o) in others.iter().enumerate() {
        let o2 = lat.join(o, t);
        if lat.contains(o2, set[j]) {
            return false;
        }
        out.push(o2);
    }
    true
}

fn root_representatives(g: &FiniteGroup, normalizer: &[Permutation]) -> Result<Vec<u32>> {
    let classes = g.conjugacy_classes(normalizer)?;
    let mut reps: Vec<u32> = classes.into_iter().filter(|&c| c != 0).collect();
    reps.sort_unstable();
    reps.dedup();
    Ok(reps)
}

fn run_search(g: &PermGroup, mode: Mode, opts: &SearchOptions) -> Result<SearchReport> {
    let start = Instant::now();
    let fg = FiniteGroup::new(g)?;
    let roots = root_representatives(&fg, &opts.normalizer)?;
    let (value, witness, nodes, exhausted) = if opts.workers > 1 {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(opts.workers)
            .build()
            .map_err(|e| Error::InvalidInput(e.to_string()))?;
        let results: Vec<(usize, Vec<u32>, u64, bool)> = pool.install(|| {
            roots
                .par_iter()
                .map(|&r| {
                    let mut s = Searcher::new(&fg, mode, opts.budget.clone(), start);
                    s.root(r);
                    let mut w = s.witness.clone();
                    w.sort_unstable();
                    (s.best, w, s.nodes, s.exhausted)
                })
                .collect()
        });
        let nodes = results.iter().map(|r| r.2).sum();
        let exhausted = results.iter().any(|r| r.3);
        let best = results
            .into_iter()
            .min_by(|a, b| b.0.cmp(&a.0).then_with(|| a.1.cmp(&b.1)))
            .map(|r| (r.0, r.1))
            .unwrap_or((0, Vec::new()));
        (best.0, best.1, nodes, exhausted)
    } else {
        let mut s = Searcher::new(&fg, mode, opts.budget.clone(), start);
        for &r in &roots {
            s.root(r);
            if s.exhausted {
                break;
            }
        }
        let mut w = s.witness.clone();
        w.sort_unstable();
        (s.best, w, s.nodes, s.exhausted)
    };
    Ok(SearchReport {
        invariant: if mode == Mode::Generating { "m" } else { "i" }.to_string(),
        value,
        exact: !exhausted,
        witness: witness.iter().map(|&i| fg.element(i).clone()).collect(),
        nodes,
        seconds: opts.timing.then(|| start.elapsed().as_secs_f64()),
    })
}

/// m(G): the largest irredundant generating set.
pub fn m_search(g: &PermGroup, opts: &SearchOptions) -> Result<SearchReport> {
    run_search(g, Mode::Generating, opts)
}

/// i(G): the largest irredundant set.
pub fn i_search(g: &PermGroup, opts: &SearchOptions) -> Result<SearchReport> {
    run_search(g, Mode::Any, opts)
}

/// Visits every irredundant generating set of exactly `size` elements containing a class
/// representative, passing the set and the subgroups `⟨S \ s_j⟩`.
fn visit_generating<F>(
    lat: &mut Lattice,
    roots: &[u32],
    size: usize,
    budget: &Budget,
    nodes: &mut u64,
    f: &mut F,
) -> Result<ControlFlow<()>>
where
    F: FnMut(&mut Lattice, &[u32], &[SubId]) -> ControlFlow<()>,
{
    let start = Instant::now();
    let n = lat.group().len() as u32;
    let omega: Vec<usize> = (0..=lat.group().len())
        .map(|o| {
            if o == 0 || !lat.group().len().is_multiple_of(o) {
                0
            } else {
                big_omega_u64((lat.group().len() / o) as u64)
            }
        })
        .collect();
    #[allow(clippy::too_many_arguments)]
    fn rec<F>(
        lat: &mut Lattice,
        set: &mut Vec<u32>,
        others: &[SubId],
        span: SubId,
        size: usize,
        n: u32,
        omega: &[usize],
        ctl: &mut (u64, &Budget, Instant),
        f: &mut F,
    ) -> Result<ControlFlow<()>>
    where
        F: FnMut(&mut Lattice, &[u32], &[SubId]) -> ControlFlow<()>,
    {
        ctl.0 += 1;
        if ctl.1.max_nodes.is_some_and(|m| ctl.0 > m)
            || (ctl.0.is_multiple_of(1024) && ctl.1.max_seconds.is_some_and(|s| ctl.2.elapsed().as_secs_f64() > s))
        {
            return Err(Error::BudgetExhausted(format!("after {} nodes", ctl.0)));
        }
        let k = set.len();
        if k == size {
            if lat.is_whole(span) {
                return Ok(f(lat, set, others));
            }
            return Ok(ControlFlow::Continue(()));
        }
        if lat.is_whole(span) || k + omega[lat.order(span)] < size {
            return Ok(ControlFlow::Continue(()));
        }
        let next = if k == 1 { 1 } else { set[k - 1] + 1 };
        let mut new_others = Vec::with_capacity(k + 1);
        for t in next..n {
            if t == set[0] || lat.contains(span, t) {
                continue;
            }
            let nspan = lat.join(span, t);
            if k + 1 + omega[lat.order(nspan)] < size || (k + 1 < size && lat.is_whole(nspan)) {
                continue;
            }
            if !extend_others(lat, set, others, t, &mut new_others) {
                continue;
            }
            new_others.push(span);
            set.push(t);
            let child = std::mem::take(&mut new_others);
            let flow = rec(lat, set, &child, nspan, size, n, omega, ctl, f)?;
            new_others = child;
            set.pop();
            if flow.is_break() {
                return Ok(flow);
            }
        }
        Ok(ControlFlow::Continue(()))
    }
    let mut ctl = (*nodes, budget, start);
    for &r in roots {
        let span = lat.join(0, r);
        let mut set = vec![r];
        let flow = rec(lat, &mut set, &[0], span, size, n, &omega, &mut ctl, f);
        *nodes = ctl.0;
        if flow?.is_break() {
            return Ok(ControlFlow::Break(()));
        }
    }
    Ok(ControlFlow::Continue(()))
}

/// All irredundant generating sets of the given size, up to conjugacy of one member
/// (every set is conjugate to at least one listed set).
pub fn enumerate_irredundant_generating(
    g: &PermGroup,
    size: usize,
    opts: &SearchOptions,
) -> Result<Vec<Vec<Permutation>>> {
    let fg = FiniteGroup::new(g)?;
    let roots = root_representatives(&fg, &opts.normalizer)?;
    let mut lat = Lattice::new(&fg);
    let mut out = Vec::new();
    let mut nodes = 0;
    if size == 0 {
        return Ok(if fg.len() == 1 { vec![vec![]] } else { vec![] });
    }
    let _ = visit_generating(&mut lat, &roots, size, &opts.budget, &mut nodes, &mut |_, set, _| {
        out.push(set.iter().map(|&i| fg.element(i).clone()).collect());
        ControlFlow::Continue(())
    })?;
    Ok(out)
}

#[derive(Clone, Debug, Serialize)]
pub struct ReplacementReport {
    pub holds: bool,
    pub m: usize,
    pub sets_checked: u64,
    pub nodes: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub counterexample_set: Option<Vec<Permutation>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub counterexample_h: Option<Permutation>,
}

/// For every irredundant generating set of length m(G) and every `h ≠ 1`, some member can
/// be swapped for `h` keeping generation. Sets are taken up to conjugacy, which preserves the property.
pub fn replacement_property(g: &PermGroup, opts: &SearchOptions) -> Result<ReplacementReport> {
    let m = m_search(g, opts)?;
    if !m.exact {
        return Err(Error::BudgetExhausted("m(G) search did not finish".into()));
    }
    let fg = FiniteGroup::new(g)?;
    let roots = root_representatives(&fg, &opts.normalizer)?;
    let mut lat = Lattice::new(&fg);
    let mut checked = 0u64;
    let mut found: Option<(Vec<u32>, u32)> = None;
    let mut nodes = 0;
    if m.value > 0 {
        let _ = visit_generating(&mut lat, &roots, m.value, &opts.budget, &mut nodes, &mut |lat, set, others| {
            checked += 1;
            for h in 1..fg.len() as u32 {
                let ok = others.iter().any(|&o| {
                    let k = lat.join(o, h);
                    lat.is_whole(k)
                });
                if !ok {
                    found = Some((set.to_vec(), h));
                    return ControlFlow::Break(());
                }
            }
            ControlFlow::Continue(())
        })?;
    }
    Ok(ReplacementReport {
        holds: found.is_none(),
        m: m.value,
        sets_checked: checked,
        nodes: nodes + m.nodes,
        counterexample_set: found.as_ref().map(|(s, _)| s.iter().map(|&i| fg.element(i).clone()).collect()),
        counterexample_h: found.map(|(_, h)| fg.element(h).clone()),
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct SubgroupM {
    pub order: usize,
    pub class_size: usize,
    pub generators: Vec<Permutation>,
    pub m: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct FlatnessReport {
    pub m: usize,
    pub flat: bool,
    pub strongly_flat: bool,
    pub subgroup_classes: usize,
    pub subgroups: usize,
    pub classes: Vec<SubgroupM>,
}

/// Flat: `m(H) ≤ m(G)` for all subgroups; strongly flat: `m(H) < m(G)` for proper ones.
pub fn is_flat(g: &PermGroup, opts: &SearchOptions) -> Result<FlatnessReport> {
    let fg = FiniteGroup::new(g)?;
    let mut lat = Lattice::new(&fg);
    let subs = lat.all_subgroups();
    let classes = lat.conjugacy_classes_of(&subs);
    let m_g = m_search(g, opts)?;
    if !m_g.exact {
        return Err(Error::BudgetExhausted("m(G) search did not finish".into()));
    }
    let mut rows = Vec::new();
    for class in &classes {
        let h = class[0];
        let gens: Vec<Permutation> = lat.subgroup(h).gens.iter().map(|&i| fg.element(i).clone()).collect();
        let hg = PermGroup::from_generators(g.degree(), &gens);
        let m = if lat.order(h) == fg.len() {
            m_g.value
        } else {
            m_search(&hg, &SearchOptions { normalizer: vec![], ..opts.clone() })?.value
        };
        rows.push(SubgroupM { order: lat.order(h), class_size: class.len(), generators: gens, m });
    }
    rows.sort_by_key(|r| (r.order, r.m));
    let flat = rows.iter().all(|r| r.m <= m_g.value);
    let strongly_flat = rows.iter().filter(|r| r.order < fg.len()).all(|r| r.m < m_g.value);
    Ok(FlatnessReport {
        m: m_g.value,
        flat,
        strongly_flat,
        subgroup_classes: classes.len(),
        subgroups: subs.len(),
        classes: rows,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(g: &PermGroup) -> usize {
        let r = m_search(g, &SearchOptions::default()).unwrap();
        assert!(r.exact);
        assert!(super::super::is_irredundant_generating(g, &r.witness));
        r.value
    }

    #[test]
    fn m_of_small_groups() {
        assert_eq!(m(&PermGroup::symmetric(3)), 2);
        assert_eq!(m(&PermGroup::symmetric(4)), 3);
        assert_eq!(m(&PermGroup::alternating(4)), 2);
        assert_eq!(m(&PermGroup::alternating(5)), 3);
        assert_eq!(m(&PermGroup::cyclic(6)), 2);
        assert_eq!(m(&PermGroup::trivial(3)), 0);
    }

    #[test]
    fn i_of_klein_group() {
        let v = PermGroup::from_generators(
            4,
            &[Permutation::parse(4, "(1 2)(3 4)").unwrap(), Permutation::parse(4, "(1 3)(2 4)").unwrap()],
        );
        let r = i_search(&v, &SearchOptions::default()).unwrap();
        assert_eq!(r.value, 2);
    }

    #[test]
    fn budget_exhaustion_is_reported() {
        let opts = SearchOptions { budget: Budget { max_nodes: Some(10), max_seconds: None }, ..Default::default() };
        let r = m_search(&PermGroup::symmetric(5), &opts).unwrap();
        assert!(!r.exact);
    }

    #[test]
    fn parallel_and_sequential_agree_on_value() {
        let g = PermGroup::symmetric(4);
        let a = m_search(&g, &SearchOptions::default()).unwrap();
        let b = m_search(&g, &SearchOptions { workers: 2, ..Default::default() }).unwrap();
        assert_eq!(a.value, b.value);
    }

    #[test]
    fn a5_is_strongly_flat() {
        let r = is_flat(&PermGroup::alternating(5), &SearchOptions::default()).unwrap();
        assert_eq!(r.subgroups, 59);
        assert!(r.flat && r.strongly_flat);
    }

    #[test]
    fn alternating_replacement_small() {
        for n in 3..=5 {
            let r = replacement_property(&PermGroup::alternating(n), &SearchOptions::default()).unwrap();
            assert!(r.holds, "A{n}");
        }
    }
}
