mod common;

use common::*;
use proptest::prelude::*;
use tangle_core::corpus::{random_epsilon_word, rng};
use tangle_core::dehn::{
    dehn_params_from_system, standardize, system_from_dehn_params, twist_disk, weights_from_intersections,
};
use tangle_core::detector::{check_disjoint, detect_infinity_tangle, is_dense, make_dense, Reason, Verdict};
use tangle_core::mapping::{apply_word, parse_word};
use tangle_core::oracle::is_epsilon_bridge_system;
use tangle_core::*;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn dehn_params_round_trip(seed in any::<u64>()) {
        let d = random_params(&mut rng(seed), 6);
        let s = system_from_dehn_params(&d).unwrap();
        prop_assert_eq!(dehn_params_from_system(&s).unwrap(), d);
    }

    #[test]
    fn weights_reproduce_intersections(a in 0u64..40, b in 0u64..40, c in 0u64..40) {
        let counts = [2 * a, 2 * b + (c % 2), 2 * c + (c % 2)];
        let w = weights_from_intersections(counts).unwrap();
        prop_assert_eq!(w.boundary_counts(), counts);
    }

    #[test]
    fn canonical_form_is_idempotent(seed in any::<u64>()) {
        let s = random_arcs(&mut rng(seed), 8);
        let once = s.reduce_to_minimal_position();
        prop_assert_eq!(once.reduce_to_minimal_position(), once.clone());
        prop_assert_eq!(once.canonical_form(), s.canonical_form());
    }

    #[test]
    fn inverse_word_undoes(seed in any::<u64>()) {
        let mut r = rng(seed);
        let w = random_word(&mut r, 10);
        let s = random_multicurve(&mut r, 3);
        prop_assert_eq!(apply_word(&apply_word(&s, &w), &w.inverse()).canonical_form(), s.canonical_form());
    }

    #[test]
    fn disk_twists_add(seed in any::<u64>(), a in -4i64..=4, b in -4i64..=4, d in 0usize..3) {
        let s = random_arcs(&mut rng(seed), 5);
        let disk = Disk::ALL[d];
        let two = twist_disk(&twist_disk(&s, disk, a), disk, b);
        prop_assert_eq!(two.canonical_form(), twist_disk(&s, disk, a + b).canonical_form());
    }

    #[test]
    fn word_display_parses_back(seed in any::<u64>(), len in 0usize..12) {
        let w = random_epsilon_word(&mut rng(seed), len);
        prop_assert_eq!(parse_word(&w.to_string()).unwrap().edge_twists(), w.edge_twists());
    }

    #[test]
    fn epsilon_words_are_trivial(seed in any::<u64>(), len in 0usize..12) {
        let w = random_epsilon_word(&mut rng(seed), len);
        let s = apply_word(&straight_bridge_arcs(), &w);
        prop_assert!(is_epsilon_bridge_system(&s));
        let d = detect_infinity_tangle(&s, 10_000).unwrap();
        prop_assert_eq!(d.verdict, Verdict::Trivial(Reason::StraightArcs));
    }

    #[test]
    fn detector_agrees_with_meridian_check(seed in any::<u64>()) {
        let s = random_arcs(&mut rng(seed), 6);
        let d = detect_infinity_tangle(&s, 10_000).unwrap();
        prop_assert_eq!(d.verdict.is_trivial(), is_epsilon_bridge_system(&s));
    }

    #[test]
    fn make_dense_ends_dense_and_disjoint(seed in any::<u64>()) {
        let s = random_arcs(&mut rng(seed), 8);
        let (dense, steps) = make_dense(&s, 10_000).unwrap();
        prop_assert!(is_dense(&dense).unwrap());
        prop_assert!(check_disjoint(&dense).is_ok());
        prop_assert!(steps.iter().all(|st| st.after < st.before));
    }

    #[test]
    fn standardizing_first_gives_the_same_verdict(seed in any::<u64>()) {
        let s = random_arcs(&mut rng(seed), 6);
        let first = standardize(&s).unwrap().system;
        let a = detect_infinity_tangle(&s, 10_000).unwrap().verdict;
        let b = detect_infinity_tangle(&first, 10_000).unwrap().verdict;
        prop_assert_eq!(a, b);
    }

    #[test]
    fn dense_trivial_systems_never_wave_on_every_strand(seed in any::<u64>(), len in 0usize..14) {
        let w = random_epsilon_word(&mut rng(seed), len);
        let (dense, _) = make_dense(&apply_word(&straight_bridge_arcs(), &w), 10_000).unwrap();
        let st = standardize(&dense).unwrap().system;
        let o = st.overlay().unwrap();
        let mut waving = [false; 3];
        for p in o.pieces(&st) {
            if let (None, Some(a), Some(b)) = (p.inside, p.start, p.end) {
                if o.events[a].disk == o.events[b].disk && p.comp < 3 {
                    waving[p.comp] = true;
                }
            }
        }
        prop_assert!(!waving.iter().all(|w| *w));
    }
}
