use finite_realization::automorphisms::{automorphisms_naive, beat_points, core, enumerate_automorphisms};
use finite_realization::group::FiniteGroup;
use finite_realization::oracle::random_poset;
use finite_realization::Poset;
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn poset(max_points: usize) -> impl Strategy<Value = Poset> {
    (1..=max_points, 0.0..0.8f64, any::<u64>())
        .prop_map(|(n, density, seed)| random_poset(&mut ChaCha8Rng::seed_from_u64(seed), n, density))
}

fn group() -> impl Strategy<Value = FiniteGroup> {
    prop_oneof![
        (1..=12usize).prop_map(|n| FiniteGroup::cyclic(n).unwrap()),
        (1..=6usize).prop_map(|n| FiniteGroup::dihedral(n).unwrap()),
        (1..=4usize).prop_map(|k| FiniteGroup::symmetric(k).unwrap()),
    ]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn order_is_antisymmetric_and_transitive(p in poset(9)) {
        for x in 0..p.len() {
            prop_assert!(p.leq(x, x).unwrap());
            for y in 0..p.len() {
                if x != y && p.leq(x, y).unwrap() {
                    prop_assert!(!p.leq(y, x).unwrap());
                    for z in 0..p.len() {
                        if p.leq(y, z).unwrap() {
                            prop_assert!(p.leq(x, z).unwrap());
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn down_and_up_sets_are_dual(p in poset(9)) {
        for x in 0..p.len() {
            for y in p.down_set(x).unwrap() {
                prop_assert!(p.up_set(y).unwrap().contains(&x));
            }
            prop_assert_eq!(p.down_set(x).unwrap().len(), p.down_len(x));
        }
    }

    #[test]
    fn height_zero_iff_antichain(p in poset(9)) {
        prop_assert_eq!(p.height() == 0, p.is_antichain());
        prop_assert_eq!(p.covers().is_empty(), p.is_antichain());
    }

    #[test]
    fn induced_subposet_keeps_the_order(p in poset(9), mask in any::<u16>()) {
        let keep: Vec<usize> = (0..p.len()).filter(|&x| mask >> x & 1 == 1).collect();
        let sub = p.induced_subposet(&keep).unwrap();
        for (i, &x) in keep.iter().enumerate() {
            for (j, &y) in keep.iter().enumerate() {
                prop_assert_eq!(sub.leq(i, j).unwrap(), p.leq(x, y).unwrap());
            }
        }
    }

    #[test]
    fn json_round_trip(p in poset(9)) {
        prop_assert_eq!(Poset::from_json(&p.to_json()).unwrap(), p);
    }

    #[test]
    fn search_matches_brute_force(p in poset(7)) {
        let fast = enumerate_automorphisms(&p);
        prop_assert_eq!(&fast, &automorphisms_naive(&p).unwrap());
        prop_assert!(fast.check_group_axioms().is_ok());
    }

    #[test]
    fn automorphisms_map_fences_to_fences(p in poset(8), start in any::<usize>()) {
        let x0 = start % p.len();
        let mut fence = vec![x0];
        while let Some(&next) = p.lower_covers(*fence.last().unwrap())
            .iter()
            .chain(p.upper_covers(*fence.last().unwrap()))
            .find(|y| !fence.contains(y))
        {
            fence.push(next);
        }
        prop_assume!(p.is_fence(&fence));
        for a in enumerate_automorphisms(&p).iter() {
            let image: Vec<usize> = fence.iter().map(|&x| a.apply(x)).collect();
            prop_assert!(p.is_fence(&image));
        }
    }

    #[test]
    fn cores_have_no_beat_points(p in poset(9)) {
        let (c, trace) = core(&p);
        prop_assert!(beat_points(&c).is_empty());
        prop_assert_eq!(c.len() + trace.len(), p.len());
        prop_assert_eq!(core(&c).0, c);
    }

    #[test]
    fn subgroup_closure_is_a_closure(g in group(), a in any::<usize>(), b in any::<usize>()) {
        let a = a % g.order();
        let b = b % g.order();
        let small = g.subgroup_closure(&[a]);
        let large = g.subgroup_closure(&[a, b]);
        prop_assert_eq!(g.subgroup_closure(&small), small.clone());
        prop_assert!(small.iter().all(|x| large.contains(x)));
        prop_assert_eq!(g.order() % large.len(), 0);
        prop_assert!(g.subgroup(&large).is_ok());
    }
}
