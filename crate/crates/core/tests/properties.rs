//! Randomized invariants over permutations of order 3..=9.

use proptest::prelude::*;

use oriented_star::harness::split_merge_holds;
use oriented_star::oracle::RankCodec;
use oriented_star::routing::{
    check_monotone_uncrossed, classic_distance, classic_distance_sets, classic_route,
    corollary2_bound, oriented_route, theorem2_bound, validate_trace,
};
use oriented_star::topology::translation_preserves_arc;
use oriented_star::{classify, relative_cycles, Perm, Scheme};

fn perm_of(n: usize) -> impl Strategy<Value = Perm> {
    Just((1..=n).collect::<Vec<usize>>())
        .prop_shuffle()
        .prop_map(|v| Perm::from_values(&v).unwrap())
}

fn perm() -> impl Strategy<Value = Perm> {
    (3usize..=9).prop_flat_map(perm_of)
}

fn pair() -> impl Strategy<Value = (Perm, Perm)> {
    (3usize..=9).prop_flat_map(|n| (perm_of(n), perm_of(n)))
}

fn triple() -> impl Strategy<Value = (Perm, Perm, Perm)> {
    (3usize..=9).prop_flat_map(|n| (perm_of(n), perm_of(n), perm_of(n)))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(512))]

    #[test]
    fn composition_is_associative((a, b, c) in triple()) {
        let left = a.compose(&b).unwrap().compose(&c).unwrap();
        let right = a.compose(&b.compose(&c).unwrap()).unwrap();
        prop_assert_eq!(left, right);
    }

    #[test]
    fn inverse_cancels(a in perm()) {
        let id = Perm::identity(a.n()).unwrap();
        prop_assert_eq!(a.compose(&a.inverse()).unwrap(), id);
        prop_assert_eq!(a.inverse().compose(&a).unwrap(), id);
    }

    #[test]
    fn sign_is_a_homomorphism((a, b) in pair()) {
        prop_assert_eq!(a.compose(&b).unwrap().sign(), a.sign() + b.sign());
        prop_assert_eq!(a.sign(), a.sign_by_cycles());
    }

    #[test]
    fn generator_flips_sign(a in perm(), i in 2usize..=9) {
        prop_assume!(i <= a.n());
        prop_assert_ne!(a.apply_generator(i).unwrap().sign(), a.sign());
    }

    #[test]
    fn cycles_partition_values(a in perm()) {
        let d = a.cycles();
        let mut all: Vec<usize> = d.cycles.iter().flatten().copied().collect();
        all.sort_unstable();
        prop_assert_eq!(all, (1..=a.n()).collect::<Vec<_>>());
        for cycle in &d.cycles {
            for j in 0..cycle.len() {
                prop_assert_eq!(a.get(cycle[j]), cycle[(j + 1) % cycle.len()]);
            }
        }
    }

    #[test]
    fn settled_values_are_relative_fixed_points((s, t) in pair()) {
        let cs = classify(&s, &t).unwrap();
        prop_assert_eq!(&cs.settled, &relative_cycles(&s, &t).unwrap().fixed_points);
    }

    #[test]
    fn rank_round_trips(a in perm()) {
        let codec = RankCodec::new(a.n()).unwrap();
        let r = codec.rank(&a);
        prop_assert!(r < codec.capacity());
        prop_assert_eq!(codec.unrank(r).unwrap(), a);
    }

    #[test]
    fn text_round_trips(a in perm()) {
        prop_assert_eq!(a.to_string().parse::<Perm>().unwrap(), a);
    }

    #[test]
    fn split_merge_law((c, t) in pair(), i in 2usize..=9) {
        prop_assume!(i <= c.n());
        prop_assert!(split_merge_holds(&c, &t, i).unwrap());
    }

    #[test]
    fn distance_formulas_agree((s, t) in pair()) {
        let eq1 = classic_distance(&s, &t).unwrap();
        prop_assert_eq!(eq1, classic_distance_sets(&s, &t).unwrap());
        prop_assert_eq!(eq1, classic_route(&s, &t).unwrap().length);
    }

    #[test]
    fn even_translation_preserves_arcs((h, u) in pair(), link in 2usize..=9) {
        prop_assume!(link <= u.n());
        let h = if h.sign().is_even() { h } else { h.swap_front(2) };
        for scheme in Scheme::ALL {
            prop_assert!(translation_preserves_arc(&h, &u, link, scheme).unwrap());
        }
    }
}

fn certified_pair() -> impl Strategy<Value = (Perm, Perm)> {
    (5usize..=9).prop_flat_map(|n| (perm_of(n), perm_of(n)))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn oriented_routes_are_valid_and_bounded((s, t) in certified_pair()) {
        let trace = oriented_route(&s, &t, Scheme::Fujita).unwrap();
        prop_assert!(validate_trace(&trace).is_empty());
        prop_assert!(check_monotone_uncrossed(&trace).is_empty());
        prop_assert!(trace.length <= theorem2_bound(&s, &t).unwrap());
        prop_assert!(trace.length <= 4 * classic_distance(&s, &t).unwrap() + 4);
        prop_assert!(trace.length <= corollary2_bound(s.n()));
    }

    #[test]
    fn routing_commutes_with_even_translation((s, t, h) in (5usize..=8).prop_flat_map(|n| (perm_of(n), perm_of(n), perm_of(n)))) {
        let h = if h.sign().is_even() { h } else { h.swap_front(2) };
        let a = oriented_route(&s, &t, Scheme::Fujita).unwrap();
        let b = oriented_route(&h.compose(&s).unwrap(), &h.compose(&t).unwrap(), Scheme::Fujita).unwrap();
        let la: Vec<usize> = a.hops.iter().map(|x| x.link).collect();
        let lb: Vec<usize> = b.hops.iter().map(|x| x.link).collect();
        prop_assert_eq!(la, lb);
    }
}
