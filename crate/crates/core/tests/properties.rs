use num_bigint::BigUint;
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use irk::acceptance::{random_irredundant_generating, random_partition, random_permutation};
use irk::classification::{
    classify_sn, construct_from_tree_form, construct_type, equal_up_to_inversion, normalize_an, random_descriptor,
    random_tree_form,
};
use irk::decomposition::{
    fix_pointwise_reduce, has_m_property, m_closure, m_decompose, strong_m_decompose, OrderedPartition,
};
use irk::group::factorial;
use irk::irredundance::{is_irredundant, is_irredundant_generating, m_search, SearchOptions};
use irk::wreath::build_wreath;
use irk::{PermGroup, Permutation};

fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn config(cases: u32) -> ProptestConfig {
    ProptestConfig { cases, ..ProptestConfig::default() }
}

proptest! {
    #![proptest_config(config(256))]

    #[test]
    fn inverse_and_cycles_round_trip(n in 1usize..16, seed in any::<u64>()) {
        let p = random_permutation(n, &mut rng(seed));
        prop_assert!((&p * &p.inverse()).is_identity());
        let cycles = p.cycles();
        for w in cycles.windows(2) {
            prop_assert!(w[0][0] < w[1][0]);
        }
        for c in &cycles {
            prop_assert!(c.len() >= 2);
            prop_assert_eq!(c[0], *c.iter().min().unwrap());
        }
        prop_assert_eq!(Permutation::from_cycles(n, &p.cycles_one_based()).unwrap(), p);
    }

    #[test]
    fn composition_applies_right_factor_first(n in 1usize..12, seed in any::<u64>()) {
        let mut r = rng(seed);
        let (p, q) = (random_permutation(n, &mut r), random_permutation(n, &mut r));
        let pq = &p * &q;
        for x in 0..n {
            prop_assert_eq!(pq.image(x), p.image(q.image(x)));
        }
    }

    #[test]
    fn chain_contains_generators_and_order_divides(n in 2usize..10, k in 1usize..4, seed in any::<u64>()) {
        let mut r = rng(seed);
        let gens: Vec<Permutation> = (0..k).map(|_| random_permutation(n, &mut r)).collect();
        let g = PermGroup::from_generators(n, &gens);
        prop_assert!(gens.iter().all(|x| g.contains(x)));
        prop_assert_eq!(factorial(n) % g.order(), BigUint::from(0u8));
    }

    #[test]
    fn m_decomposition_invariants(n in 1usize..13, seed in any::<u64>()) {
        let mut r = rng(seed);
        let p = random_partition(n, &mut r);
        let h = random_permutation(n, &mut r);
        let d = m_decompose(&h, &p).unwrap();
        prop_assert!(d.verify(&h, &p).is_ok());
        prop_assert_eq!(d.product(), h);
        for b in &d.betas {
            prop_assert!(d.beta0.commutes_with(b));
            prop_assert_eq!(b.cycles().len(), 1);
        }
        prop_assert!(d.beta0.commutes_with(&d.alpha));
    }

    #[test]
    fn strong_m_decomposition_alternates(n in 2usize..12, seed in any::<u64>()) {
        let mut r = rng(seed);
        let cut = r.gen_range(1..n);
        let mut pts: Vec<usize> = (0..n).collect();
        pts.sort_by_key(|_| r.gen::<u32>());
        let (x, y) = pts.split_at(cut);
        let h = random_permutation(n, &mut r);
        if let Ok((alpha, beta)) = strong_m_decompose(&h, x, y) {
            prop_assert_eq!(&alpha * &beta, h);
            for c in alpha.cycles() {
                prop_assert!(c.iter().all(|p| x.contains(p)) || c.iter().all(|p| y.contains(p)));
            }
            let cycles = beta.cycles();
            prop_assert!(cycles.len() <= 1);
            if let Some(c) = cycles.first() {
                for i in 0..c.len() {
                    let (a, b) = (c[i], c[(i + 1) % c.len()]);
                    prop_assert_ne!(x.contains(&a), x.contains(&b));
                }
            }
        }
    }

    #[test]
    fn partition_chains_bounded_by_d(n in 1usize..9, seed in any::<u64>()) {
        let mut r = rng(seed);
        let mut p = random_partition(n, &mut r);
        let d0 = p.d();
        let mut steps = 0;
        loop {
            let next = p.successors();
            if next.is_empty() {
                break;
            }
            let q = next[r.gen_range(0..next.len())].clone();
            prop_assert!(p.less_than(&q));
            prop_assert_eq!(q.d() + 1, p.d());
            p = q;
            steps += 1;
        }
        prop_assert!(steps <= d0);
    }
}

proptest! {
    #![proptest_config(config(64))]

    #[test]
    fn m_closure_monotone_idempotent(n in 2usize..9, k in 1usize..3, seed in any::<u64>()) {
        let mut r = rng(seed);
        let p = random_partition(n, &mut r);
        let t: Vec<Permutation> = (0..k).map(|_| random_permutation(n, &mut r)).collect();
        let g = m_closure(&t, &p);
        prop_assert!(has_m_property(&g, &p));
        prop_assert!(g.contains_all(&t));
        let again = m_closure(g.generators(), &p);
        prop_assert!(again.same_group(&g));
        let mut bigger = t.clone();
        bigger.push(random_permutation(n, &mut r));
        prop_assert!(g.is_subgroup_of(&m_closure(&bigger, &p)));
    }

    /// An element `α·(a b y)` with `α ∈ S_X × S_Y` forces `A_{X ∪ Y}` into any group with the
    /// M-property for `{X_0, X, Y}` once `|X ∪ Y| > 4`.
    #[test]
    fn three_cycle_across_blocks_forces_alternating(n in 5usize..9, seed in any::<u64>()) {
        let mut r = rng(seed);
        let mut pts: Vec<usize> = (0..n).collect();
        pts.sort_by_key(|_| r.gen::<u32>());
        let sigma = r.gen_range(5..=n);
        let nx = r.gen_range(2..sigma);
        let (x, y) = (pts[..nx].to_vec(), pts[nx..sigma].to_vec());
        let p = OrderedPartition::new(n, pts[sigma..].to_vec(), vec![x.clone(), y.clone()]).unwrap();
        let mut alpha = Permutation::identity(n);
        for block in [&x, &y] {
            let local = random_permutation(block.len(), &mut r);
            let images: Vec<usize> = (0..n)
                .map(|pt| block.iter().position(|&b| b == pt).map_or(alpha.image(pt), |i| block[local.image(i)]))
                .collect();
            alpha = Permutation::from_images(&images).unwrap();
        }
        let (a, b) = (x[0], x[1]);
        let c = Permutation::cycle(n, &[a, b, y[0]]).unwrap();
        let g = m_closure(&[&alpha * &c], &p);
        let both: Vec<usize> = x.iter().chain(&y).copied().collect();
        for i in 2..both.len() {
            prop_assert!(g.contains(&Permutation::cycle(n, &[both[0], both[1], both[i]]).unwrap()));
        }
    }

    #[test]
    fn pointwise_reduction_within_bound(seed in any::<u64>(), len in 1usize..6) {
        let mut r = rng(seed);
        let n = 10;
        let p = OrderedPartition::new(n, vec![], vec![(0..5).collect(), (5..10).collect()]).unwrap();
        let x = vec![r.gen_range(0..n)];
        let h: Vec<Permutation> = (0..len).map(|_| random_permutation(n, &mut r)).collect();
        let red = fix_pointwise_reduce(&h, &x, &PermGroup::symmetric(n), &p).unwrap();
        prop_assert!(red.cover.len() <= red.bound);
        prop_assert!(red.verified);
        for (gh, hj) in red.g.iter().zip(&h) {
            prop_assert_eq!((gh * hj).image(x[0]), x[0]);
        }
    }

    #[test]
    fn random_minimal_generating_sets_are_irredundant(n in 3usize..7, seed in any::<u64>()) {
        let g = if seed % 2 == 0 { PermGroup::symmetric(n) } else { PermGroup::alternating(n) };
        let set = random_irredundant_generating(&g, &mut rng(seed));
        prop_assert!(is_irredundant_generating(&g, &set));
        prop_assert!(is_irredundant(n, &set));
        for j in 0..set.len() {
            let rest: Vec<Permutation> = set.iter().enumerate().filter(|&(i, _)| i != j).map(|(_, x)| x.clone()).collect();
            prop_assert!(!PermGroup::from_generators(n, &rest).contains(&set[j]));
        }
    }

    #[test]
    fn tree_forms_round_trip(n in 7usize..11, seed in any::<u64>()) {
        let t = random_tree_form(n, &mut rng(seed));
        let set = construct_from_tree_form(&t).unwrap();
        prop_assert_eq!(set.len(), n - 2);
        prop_assert!(is_irredundant_generating(&PermGroup::alternating(n), &set));
        let back = construct_from_tree_form(&normalize_an(&set).unwrap()).unwrap();
        prop_assert!(equal_up_to_inversion(&back, &set));
    }

    #[test]
    fn types_round_trip(type_id in 1u8..8, n in 7usize..11, seed in any::<u64>()) {
        let d = random_descriptor(type_id, n, &mut rng(seed)).unwrap();
        let set = construct_type(&d).unwrap();
        prop_assert!(is_irredundant_generating(&PermGroup::symmetric(n), &set));
        let back = construct_type(&classify_sn(&set).unwrap()).unwrap();
        prop_assert!(equal_up_to_inversion(&back, &set));
    }

    #[test]
    fn wreath_order(base in 2usize..5, top in 1usize..4) {
        let (s, p) = (PermGroup::symmetric(base), PermGroup::alternating(top.max(1)));
        let w = build_wreath(&s, &p).unwrap();
        prop_assert_eq!(w.group.order(), s.order().pow(top as u32) * p.order());
        let blocks: Vec<Vec<usize>> = (0..top).map(|b| (b * base..(b + 1) * base).collect()).collect();
        for gen in w.group.generators() {
            for blk in &blocks {
                let target = gen.image(blk[0]) / base;
                prop_assert!(blk.iter().all(|&pt| gen.image(pt) / base == target));
            }
        }
    }
}

#[test]
fn searches_are_deterministic() {
    for g in [PermGroup::symmetric(4), PermGroup::alternating(5), PermGroup::dihedral(6)] {
        let a = serde_json::to_string(&m_search(&g, &SearchOptions::default()).unwrap()).unwrap();
        let b = serde_json::to_string(&m_search(&g, &SearchOptions::default()).unwrap()).unwrap();
        assert_eq!(a, b);
    }
}

#[test]
fn classification_round_trips_at_scale() {
    let mut r = rng(7);
    for n in 7..=10 {
        for type_id in 1..=7u8 {
            for _ in 0..500 {
                let d = random_descriptor(type_id, n, &mut r).unwrap();
                let set = construct_type(&d).unwrap();
                let back = construct_type(&classify_sn(&set).unwrap()).unwrap();
                assert!(equal_up_to_inversion(&back, &set), "type {type_id} n {n}: {d:?}");
            }
        }
    }
}
