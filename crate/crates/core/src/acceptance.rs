//! The release acceptance suite: exact small-instance checks and randomized round trips.

use std::time::Instant;

use num_bigint::BigUint;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::bounds::{f, f_brute_force, iota_member, lemma18_construct, rational};
use crate::classification::{
    classify_sn, construct_from_tree_form, construct_type, normalize_an, random_descriptor, random_tree_form,
    sample_maximal_irredundant, SampleOptions,
};
use crate::decomposition::{m_decompose, OrderedPartition};
use crate::error::Result;
use crate::group::builtins::psl2;
use crate::group::lattice::Lattice;
use crate::group::maximality::{verify_almost_maximal, AlmostMaximal};
use crate::group::{FiniteGroup, PermGroup};
use crate::irredundance::{
    direct_product_refine, is_irredundant_generating, m_search, replacement_property, whiston_refine, SearchOptions,
};
use crate::perm::Permutation;
use crate::wreath::{
    default_irredundant_set, default_outer_automorphisms, hall_generates, thm10_witness, thm11_witness,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Profile {
    Fast,
    Slow,
}

#[derive(Clone, Debug, Serialize)]
pub struct CriterionResult {
    pub id: &'static str,
    pub title: &'static str,
    pub slow: bool,
    pub passed: bool,
    pub detail: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub seconds: Option<f64>,
}

#[derive(Clone, Debug, Serialize)]
pub struct AcceptanceSummary {
    pub profile: Profile,
    pub seed: u64,
    pub passed: usize,
    pub failed: usize,
    pub criteria: Vec<CriterionResult>,
}

type Check = fn(&mut ChaCha8Rng) -> Result<(bool, String)>;

pub struct Criterion {
    pub id: &'static str,
    pub title: &'static str,
    pub slow: bool,
    check: Check,
}

pub const CRITERIA: &[Criterion] = &[
    Criterion { id: "A1", title: "m(S_n) = n-1 for n = 3, 4, 5", slow: false, check: a1 },
    Criterion { id: "A2", title: "m(A_n) = n-2 for n = 3..6", slow: false, check: a2 },
    Criterion { id: "A3", title: "A_n has the replacement property for n = 3, 4, 5", slow: false, check: a3 },
    Criterion {
        id: "A4",
        title: "transitive proper subgroups of S_5 other than A_5 have m <= 2",
        slow: false,
        check: a4,
    },
    Criterion {
        id: "A5",
        title: "tree forms construct, and sampled maximal sets of A_7 normalize",
        slow: false,
        check: a5,
    },
    Criterion { id: "A6", title: "types 1-7 round trip at n = 8, 9, 10", slow: false, check: a6 },
    Criterion { id: "A7", title: "f(k,1) = 1, 4, 36 and f(4,1) matches brute force", slow: false, check: a7 },
    Criterion { id: "A8", title: "M-decomposition invariants on 10^4 random instances", slow: false, check: a8 },
    Criterion { id: "A9", title: "almost-maximality dichotomy at n = 6, 7", slow: false, check: a9 },
    Criterion { id: "A10", title: "PSL2(17) fails the replacement property", slow: true, check: a10 },
    Criterion { id: "A11", title: "wreath witnesses of sizes 5, 6 and 9", slow: false, check: a11 },
    Criterion { id: "A12", title: "63 irredundant elements of A_9 wr A_9 on 81 points", slow: true, check: a12 },
    Criterion { id: "A13", title: "explicit sets through x at n = 12, k = 1, 3, 5", slow: false, check: a13 },
    Criterion { id: "A14", title: "quotient and direct-product refinements", slow: false, check: a14 },
    Criterion { id: "A15", title: "Hall criterion agrees with direct generation over A_5^2", slow: false, check: a15 },
];

pub fn criterion(id: &str) -> Option<&'static Criterion> {
    CRITERIA.iter().find(|c| c.id.eq_ignore_ascii_case(id))
}

/// Runs one criterion on its own random stream, so results do not depend on which others run.
pub fn run_criterion(c: &Criterion, seed: u64) -> CriterionResult {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(c.id[1..].parse().unwrap_or(0));
    let start = Instant::now();
    let (passed, detail) = match (c.check)(&mut rng) {
        Ok(r) => r,
        Err(e) => (false, format!("error {}: {e}", e.code())),
    };
    CriterionResult {
        id: c.id,
        title: c.title,
        slow: c.slow,
        passed,
        detail,
        seconds: Some(start.elapsed().as_secs_f64()),
    }
}

/// The fast criteria, plus the slow ones under [`Profile::Slow`].
pub fn run_acceptance(profile: Profile, seed: u64, mut progress: impl FnMut(&CriterionResult)) -> AcceptanceSummary {
    let criteria: Vec<CriterionResult> = CRITERIA
        .iter()
        .filter(|c| profile == Profile::Slow || !c.slow)
        .map(|c| {
            let r = run_criterion(c, seed);
            progress(&r);
            r
        })
        .collect();
    let passed = criteria.iter().filter(|r| r.passed).count();
    AcceptanceSummary { profile, seed, passed, failed: criteria.len() - passed, criteria }
}

impl CriterionResult {
    pub fn line(&self) -> String {
        let status = if self.passed { "PASS" } else { "FAIL" };
        match self.seconds {
            Some(t) => format!("{status} {:<4} {} ({t:.1}s): {}", self.id, self.title, self.detail),
            None => format!("{status} {:<4} {}: {}", self.id, self.title, self.detail),
        }
    }
}

fn exact_m(g: &PermGroup) -> Result<(usize, bool)> {
    let r = m_search(g, &SearchOptions::default())?;
    Ok((r.value, r.exact))
}

fn a1(_: &mut ChaCha8Rng) -> Result<(bool, String)> {
    let mut ok = true;
    let mut seen = Vec::new();
    for n in 3..=5 {
        let (m, exact) = exact_m(&PermGroup::symmetric(n))?;
        ok &= exact && m == n - 1;
        seen.push(format!("m(S{n})={m}"));
    }
    Ok((ok, seen.join(" ")))
}

fn a2(_: &mut ChaCha8Rng) -> Result<(bool, String)> {
    let mut ok = true;
    let mut seen = Vec::new();
    for n in 3..=6 {
        let (m, exact) = exact_m(&PermGroup::alternating(n))?;
        ok &= exact && m == n - 2;
        seen.push(format!("m(A{n})={m}"));
    }
    Ok((ok, seen.join(" ")))
}

fn a3(_: &mut ChaCha8Rng) -> Result<(bool, String)> {
    let mut ok = true;
    let mut seen = Vec::new();
    for n in 3..=5 {
        let r = replacement_property(&PermGroup::alternating(n), &SearchOptions::default())?;
        ok &= r.holds;
        seen.push(format!("A{n}: {} ({} sets)", if r.holds { "holds" } else { "fails" }, r.sets_checked));
    }
    Ok((ok, seen.join(", ")))
}

fn a4(_: &mut ChaCha8Rng) -> Result<(bool, String)> {
    let s5 = PermGroup::symmetric(5);
    let a5 = PermGroup::alternating(5);
    let fg = FiniteGroup::new(&s5)?;
    let mut lat = Lattice::new(&fg);
    let all = lat.all_subgroups();
    let classes = lat.conjugacy_classes_of(&all);
    let mut checked = 0;
    let mut worst = 0;
    let mut ok = true;
    for class in &classes {
        let h = fg.to_perm_group(&lat.subgroup(class[0]).gens);
        if !h.is_transitive() || h.same_group(&s5) || h.same_group(&a5) {
            continue;
        }
        let (m, exact) = exact_m(&h)?;
        ok &= exact && m <= 2;
        worst = worst.max(m);
        checked += 1;
    }
    ok &= checked > 0;
    Ok((ok, format!("{checked} classes of transitive subgroups (of {} classes), max m = {worst}", classes.len())))
}

fn a5(rng: &mut ChaCha8Rng) -> Result<(bool, String)> {
    let mut failures = 0;
    for n in [4, 7, 8] {
        let an = PermGroup::alternating(n);
        for _ in 0..500 {
            let set = construct_from_tree_form(&random_tree_form(n, rng))?;
            if set.len() != n - 2 || !is_irredundant_generating(&an, &set) {
                failures += 1;
            }
        }
    }
    let a7 = PermGroup::alternating(7);
    let opts = SampleOptions { count: 100, seed: rng.gen(), ..Default::default() };
    let sample = sample_maximal_irredundant(&a7, 5, &opts)?;
    let unnormalized = sample.samples.iter().filter(|h| normalize_an(h).is_err()).count();
    Ok((
        failures == 0 && unnormalized == 0,
        format!("{failures} construction failures in 1500; {unnormalized} of 100 sampled A7 sets not normalized"),
    ))
}

fn a6(rng: &mut ChaCha8Rng) -> Result<(bool, String)> {
    let mut failures = Vec::new();
    for n in [8, 9, 10] {
        let sn = PermGroup::symmetric(n);
        for type_id in 1..=7u8 {
            for _ in 0..100 {
                let d = random_descriptor(type_id, n, rng)?;
                let set = construct_type(&d)?;
                let good = set.len() == n - 2
                    && is_irredundant_generating(&sn, &set)
                    && classify_sn(&set).map(|c| c.type_id == type_id).unwrap_or(false);
                if !good {
                    failures.push(format!("type {type_id} n={n}"));
                }
            }
        }
    }
    let detail = match failures.first() {
        None => "2100 descriptors round trip".to_string(),
        Some(first) => format!("{} failures, first {first}", failures.len()),
    };
    Ok((failures.is_empty(), detail))
}

fn a7(_: &mut ChaCha8Rng) -> Result<(bool, String)> {
    let one = rational(1, 1);
    let small: Vec<BigUint> = (1..=3).map(|k| f(k, &one)).collect::<Result<_>>()?;
    let f4 = f(4, &one)?;
    let brute = f_brute_force(4, &one, 200);
    let expected: Vec<BigUint> = [1u32, 4, 36].into_iter().map(BigUint::from).collect();
    let ok = small == expected && f4 == brute;
    let shown: Vec<String> = small.iter().map(ToString::to_string).collect();
    Ok((ok, format!("f(1..3,1) = {}; f(4,1) = {f4}, brute force {brute}", shown.join(", "))))
}

/// Random ordered partition of `0..n` with `X_0` possibly empty and at least one other block.
pub fn random_partition<R: Rng + ?Sized>(n: usize, rng: &mut R) -> OrderedPartition {
    let m = rng.gen_range(1..=n);
    let mut points: Vec<usize> = (0..n).collect();
    points.shuffle(rng);
    let mut blocks: Vec<Vec<usize>> = points[..m].iter().map(|&x| vec![x]).collect();
    let mut x0 = Vec::new();
    for &x in &points[m..] {
        match rng.gen_range(0..=m) {
            0 => x0.push(x),
            b => blocks[b - 1].push(x),
        }
    }
    OrderedPartition::new(n, x0, blocks).expect("every point placed once")
}

pub fn random_permutation<R: Rng + ?Sized>(n: usize, rng: &mut R) -> Permutation {
    let mut images: Vec<usize> = (0..n).collect();
    images.shuffle(rng);
    Permutation::from_images(&images).expect("shuffled images")
}

fn a8(rng: &mut ChaCha8Rng) -> Result<(bool, String)> {
    let mut failures = 0;
    let mut first = None;
    for _ in 0..10_000 {
        let n = rng.gen_range(1..=12);
        let p = random_partition(n, rng);
        let h = random_permutation(n, rng);
        if let Err(e) = m_decompose(&h, &p).and_then(|d| d.verify(&h, &p)) {
            failures += 1;
            first.get_or_insert_with(|| format!("h = {h}: {e}"));
        }
    }
    Ok((
        failures == 0,
        first.map_or("10000 decompositions verified".into(), |f| format!("{failures} failures, first {f}")),
    ))
}

fn a9(_: &mut ChaCha8Rng) -> Result<(bool, String)> {
    let mut ok = true;
    let mut seen = Vec::new();
    for n in [6, 7] {
        for size in 1..=3 {
            let x: Vec<usize> = (0..size).collect();
            let verdict = match verify_almost_maximal(n, &x)? {
                AlmostMaximal::Maximal => "maximal".to_string(),
                AlmostMaximal::UniqueOvergroup { order, .. } => {
                    ok &= 2 * size == n;
                    format!("unique overgroup of order {order}")
                }
                AlmostMaximal::Counterexample { h, .. } => {
                    ok = false;
                    format!("counterexample {h}")
                }
            };
            seen.push(format!("n={n} |X|={size}: {verdict}"));
        }
    }
    Ok((ok, seen.join("; ")))
}

fn a10(_: &mut ChaCha8Rng) -> Result<(bool, String)> {
    let g = psl2(17)?;
    let r = replacement_property(&g, &SearchOptions::default())?;
    let (Some(set), Some(h)) = (&r.counterexample_set, &r.counterexample_h) else {
        return Ok((false, format!("replacement property holds (m = {}, {} sets)", r.m, r.sets_checked)));
    };
    let irredundant = set.len() == r.m && is_irredundant_generating(&g, set);
    let no_swap = (0..set.len()).all(|i| {
        let mut swapped = set.clone();
        swapped[i] = h.clone();
        !PermGroup::from_generators(g.degree(), &swapped).same_group(&g)
    });
    let set_text: Vec<String> = set.iter().map(ToString::to_string).collect();
    Ok((
        irredundant && no_swap && !h.is_identity(),
        format!("m = {}, set [{}], h = {h}, rechecked: {}", r.m, set_text.join(", "), irredundant && no_swap),
    ))
}

fn a11(_: &mut ChaCha8Rng) -> Result<(bool, String)> {
    let a5 = PermGroup::alternating(5);
    let s3 = PermGroup::symmetric(3);
    let a5_set = default_irredundant_set(&a5)?;
    let s3_set = default_irredundant_set(&s3)?;
    let w1 = thm10_witness(&a5, &a5_set, &s3, &s3_set)?;
    let w2 = thm10_witness(&a5, &a5_set, &a5, &a5_set)?;
    let w3 = thm11_witness(&a5_set, 3)?;
    let good =
        |w: &crate::wreath::WreathWitness, size: usize| w.size == size && w.irredundant && w.generating != Some(false);
    Ok((
        good(&w1, 5) && good(&w2, 6) && good(&w3, 9),
        format!(
            "A5 wr S3: {} (irredundant {}, generating {:?}); A5 wr A5: {} (irredundant {}, generating {:?}); A5^3: {} (irredundant {})",
            w1.size, w1.irredundant, w1.generating, w2.size, w2.irredundant, w2.generating, w3.size, w3.irredundant
        ),
    ))
}

fn a12(_: &mut ChaCha8Rng) -> Result<(bool, String)> {
    let set = default_irredundant_set(&PermGroup::alternating(9))?;
    let w = thm11_witness(&set, 9)?;
    Ok((
        w.size == 63 && w.irredundant,
        format!("{} elements on {} points, irredundant {}", w.size, w.degree, w.irredundant),
    ))
}

/// A random nonidentity `x ∈ S_n` with `iota_member(x, k)`: a uniformly chosen admissible
/// displacement, then random disjoint cycles reaching it.
pub fn random_admissible<R: Rng + ?Sized>(n: usize, k: usize, rng: &mut R) -> Permutation {
    loop {
        let mut ds: Vec<usize> = (1..=k).collect();
        if k % 2 == 1 {
            ds.push(k + 1);
        }
        let d = *ds.choose(rng).unwrap();
        let mut points: Vec<usize> = (0..n).collect();
        points.shuffle(rng);
        let (mut left, mut used, mut cycles) = (d, 0, Vec::new());
        while left > 0 {
            let len = rng.gen_range(2..=left + 1);
            if used + len > n {
                break;
            }
            cycles.push(points[used..used + len].to_vec());
            used += len;
            left -= len - 1;
        }
        if left > 0 {
            continue;
        }
        let x =
            Permutation::from_cycles(n, &cycles.iter().map(|c| c.iter().map(|&p| p + 1).collect()).collect::<Vec<_>>())
                .expect("disjoint cycles");
        if iota_member(&x, k) {
            return x;
        }
    }
}

fn a13(rng: &mut ChaCha8Rng) -> Result<(bool, String)> {
    let n = 12;
    let sn = PermGroup::symmetric(n);
    let mut seen = Vec::new();
    let mut ok = true;
    for k in [1, 3, 5] {
        let mut failures = 0;
        let mut first = None;
        for _ in 0..100 {
            let x = random_admissible(n, k, rng);
            let good = match lemma18_construct(&x, k, n) {
                Ok(w) => {
                    w.set.len() == n - k && w.set.contains(&x) && w.verified && is_irredundant_generating(&sn, &w.set)
                }
                Err(e) => {
                    first.get_or_insert_with(|| format!("x = {x}: {e}"));
                    false
                }
            };
            if !good {
                failures += 1;
                first.get_or_insert_with(|| format!("x = {x}: set fails verification"));
            }
        }
        ok &= failures == 0;
        seen.push(match first {
            None => format!("k={k}: 100 ok"),
            Some(f) => format!("k={k}: {failures} failures, first {f}"),
        });
    }
    Ok((ok, seen.join("; ")))
}

/// Random generators of `g` until they generate, then members dropped in random order while
/// the rest still generate.
pub fn random_irredundant_generating<R: Rng + ?Sized>(g: &PermGroup, rng: &mut R) -> Vec<Permutation> {
    let n = g.degree();
    let mut set: Vec<Permutation> = Vec::new();
    let mut span = PermGroup::trivial(n);
    while !span.same_group(g) {
        let x = g.random_element(rng);
        if !x.is_identity() {
            span.add_generator(x.clone());
            set.push(x);
        }
    }
    let mut order: Vec<usize> = (0..set.len()).collect();
    order.shuffle(rng);
    let mut keep = vec![true; set.len()];
    for i in order {
        keep[i] = false;
        let rest: Vec<Permutation> = set.iter().zip(&keep).filter(|(_, &k)| k).map(|(x, _)| x.clone()).collect();
        if !PermGroup::from_generators(n, &rest).same_group(g) {
            keep[i] = true;
        }
    }
    set.into_iter().zip(keep).filter(|(_, k)| *k).map(|(x, _)| x).collect()
}

fn a14(rng: &mut ChaCha8Rng) -> Result<(bool, String)> {
    let mut whiston_failures = 0;
    for i in 0..100 {
        let n = 3 + i % 4;
        let (sn, an) = (PermGroup::symmetric(n), PermGroup::alternating(n));
        let set = random_irredundant_generating(&sn, rng);
        let r = whiston_refine(&sn, &an, &set)?;
        let quotient_ok = r.k == 1 && r.kept.iter().all(|x| !x.is_even());
        let replaced_ok = r.replaced.iter().all(|(_, h)| an.contains(h));
        if !(r.verified && quotient_ok && replaced_ok && r.refined.len() == set.len()) {
            whiston_failures += 1;
        }
    }
    let s3 = PermGroup::symmetric(3);
    let s4 = PermGroup::symmetric(4);
    let mut gens: Vec<Permutation> = s3.generators().iter().map(|x| x.shift(0, 7)).collect();
    gens.extend(s4.generators().iter().map(|x| x.shift(3, 7)));
    let product = PermGroup::from_generators(7, &gens);
    let factors = vec![vec![0, 1, 2], vec![3, 4, 5, 6]];
    let mut certificate_failures = 0;
    for _ in 0..100 {
        let set = random_irredundant_generating(&product, rng);
        let c = direct_product_refine(7, &factors, &set, &SearchOptions::default())?;
        let total: usize = c.parts.iter().map(|p| p.chosen.len()).sum();
        if !(c.certified && c.size == set.len() && total == c.size) {
            certificate_failures += 1;
        }
    }
    Ok((
        whiston_failures == 0 && certificate_failures == 0,
        format!("{whiston_failures} refinement failures in 100; {certificate_failures} certificate failures in 100"),
    ))
}

fn a15(rng: &mut ChaCha8Rng) -> Result<(bool, String)> {
    let a5 = PermGroup::alternating(5);
    let outer = default_outer_automorphisms(&a5);
    let (mut disagreements, mut positives) = (0, 0);
    for _ in 0..100 {
        let vectors: Vec<Vec<Permutation>> = (0..2).map(|_| (0..2).map(|_| a5.random_element(rng)).collect()).collect();
        let r = hall_generates(&vectors, &a5, &outer)?;
        if r.direct.is_none() || !r.agrees() {
            disagreements += 1;
        }
        positives += usize::from(r.generates);
    }
    Ok((disagreements == 0, format!("{disagreements} disagreements in 100 ({positives} generate A5^2)")))
}
