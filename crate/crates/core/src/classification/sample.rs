use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::group::table::ORDER_CAP;
use crate::group::PermGroup;
use crate::perm::Permutation;

#[derive(Clone, Debug)]
pub struct SampleOptions {
    pub count: usize,
    pub seed: u64,
    /// Candidates one attempt may examine, backtracking included, before it restarts.
    pub steps_per_attempt: usize,
    pub max_attempts: usize,
}

impl Default for SampleOptions {
    fn default() -> Self {
        SampleOptions { count: 100, seed: 0, steps_per_attempt: 200, max_attempts: 100_000 }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct SampleReport {
    pub size: usize,
    pub samples: Vec<Vec<Permutation>>,
    pub attempts: usize,
}

/// Valid extensions gathered at one node before the most promising is followed.
const POOL: usize = 6;

struct Walk<'a> {
    g: &'a PermGroup,
    order: Vec<Permutation>,
    size: usize,
    steps: usize,
    budget: usize,
}

impl Walk<'_> {
    /// Extends `set` with candidates after position `from`, each keeping the set irredundant and
    /// leaving `g` ungenerated until the last element.
    fn extend(&mut self, set: &mut Vec<Permutation>, span: &PermGroup, drop_one: &[PermGroup], from: usize) -> bool {
        let last = set.len() + 1 == self.size;
        let mut pool: Vec<(usize, PermGroup, Vec<PermGroup>)> = Vec::new();
        for pos in from..self.order.len() {
            if self.steps >= self.budget || pool.len() >= POOL {
                break;
            }
            self.steps += 1;
            let x = &self.order[pos];
            if span.contains(x) {
                continue;
            }
            let mut grown = span.clone();
            grown.add_generator(x.clone());
            if grown.same_group(self.g) != last {
                continue;
            }
            let grown_drop: Option<Vec<PermGroup>> = drop_one
                .iter()
                .zip(set.iter())
                .map(|(d, sj)| {
                    let mut d = d.clone();
                    d.add_generator(x.clone());
                    (!d.contains(sj)).then_some(d)
                })
                .collect();
            let Some(mut grown_drop) = grown_drop else { continue };
            if last {
                set.push(x.clone());
                return true;
            }
            grown_drop.push(span.clone());
            pool.push((pos, grown, grown_drop));
        }
        pool.sort_by_key(|(_, g, _)| (std::cmp::Reverse(g.orbits().len()), g.order()));
        for (pos, grown, grown_drop) in pool {
            set.push(self.order[pos].clone());
            if self.extend(set, &grown, &grown_drop, pos + 1) {
                return true;
            }
            set.pop();
        }
        false
    }
}

/// Random irredundant generating sets of `g` with exactly `size` elements. Each attempt shuffles
/// the nonidentity elements, moves those of displacement at most 2 to the front, and runs a
/// budgeted depth-first extension over that order; an attempt that runs out of budget restarts
/// with a fresh shuffle.
pub fn sample_maximal_irredundant(g: &PermGroup, size: usize, opts: &SampleOptions) -> Result<SampleReport> {
    let n = g.degree();
    if size == 0 {
        return Err(Error::InvalidInput("size must be positive".into()));
    }
    let (mut small, mut large): (Vec<Permutation>, Vec<Permutation>) =
        g.elements(ORDER_CAP)?.into_iter().filter(|x| !x.is_identity()).partition(|x| x.displacement() <= 2);
    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
    let mut samples = Vec::with_capacity(opts.count);
    let mut attempts = 0;
    while samples.len() < opts.count {
        if attempts >= opts.max_attempts {
            return Err(Error::BudgetExhausted(format!(
                "{} of {} samples after {attempts} attempts",
                samples.len(),
                opts.count
            )));
        }
        attempts += 1;
        small.shuffle(&mut rng);
        large.shuffle(&mut rng);
        let order: Vec<Permutation> = small.iter().chain(&large).cloned().collect();
        let mut walk = Walk { g, order, size, steps: 0, budget: opts.steps_per_attempt };
        let mut set = Vec::with_capacity(size);
        if walk.extend(&mut set, &PermGroup::trivial(n), &[], 0) {
            samples.push(set);
        }
    }
    Ok(SampleReport { size, samples, attempts })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::irredundance::is_irredundant_generating;

    #[test]
    fn a4_samples() {
        let a4 = PermGroup::alternating(4);
        let opts = SampleOptions { count: 5, ..Default::default() };
        let r = sample_maximal_irredundant(&a4, 2, &opts).unwrap();
        assert_eq!(r.samples.len(), 5);
        assert!(r.samples.iter().all(|s| is_irredundant_generating(&a4, s)));
    }
}
