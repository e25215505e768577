//! Randomized invariants over arbitrary tournaments.

use diamondlab_core::*;
use proptest::prelude::*;

/// Arbitrary tournament on 1..=max_n vertices (max_n ≤ 11 so a single u64
/// arc code covers every pair).
fn arb_tournament(max_n: usize) -> impl Strategy<Value = Tournament> {
    assert!(max_n <= 11);
    (1..=max_n, any::<u64>()).prop_map(|(n, code)| {
        let nbits = tournament::arc_count(n);
        let mask = if nbits >= 64 { u64::MAX } else { (1u64 << nbits) - 1 };
        Tournament::from_arc_code(n, code & mask).unwrap()
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn counters_agree(t in arb_tournament(10)) {
        prop_assert_eq!(count_diamonds_oracle(&t), count_diamonds_spectral(&t));
        prop_assert_eq!(count_3cycles_degree(&t), count_3cycles_spectral(&t));
    }

    #[test]
    fn text_round_trip(t in arb_tournament(11)) {
        prop_assert_eq!(Tournament::parse(&t.to_text()).unwrap(), t.clone());
        let s = SeidelMatrix::of(&t);
        prop_assert_eq!(SeidelMatrix::parse(&s.to_text()).unwrap().to_tournament(), t);
    }

    #[test]
    fn switch_is_involution_and_invariant(t in arb_tournament(8), mask in any::<u64>()) {
        let x = SwitchSet::from_mask(mask & ((1u64 << t.n()) - 1));
        let sw = switch(&t, x);
        prop_assert_eq!(switch(&sw, x), t.clone());
        prop_assert_eq!(count_diamonds_spectral(&sw), count_diamonds_spectral(&t));
        prop_assert_eq!(fingerprint(&sw), fingerprint(&t));
    }

    #[test]
    fn diagonal_similarity_tracks_switching(t in arb_tournament(7), mask in any::<u64>()) {
        let n = t.n();
        let x = SwitchSet::from_mask(mask & ((1u64 << n) - 1));
        let d = SignDiagonal::from_switch_set(x, n);
        prop_assert_eq!(
            SeidelMatrix::of(&switch(&t, x)),
            diagonal_similar(&SeidelMatrix::of(&t), &d)
        );
    }

    #[test]
    fn fingerprint_is_relabeling_invariant(t in arb_tournament(7), salt in any::<u64>()) {
        // a cheap derangement-ish permutation from the salt
        let n = t.n();
        let mut perm: Vec<usize> = (0..n).collect();
        for i in (1..n).rev() {
            perm.swap(i, (salt as usize).wrapping_mul(31).wrapping_add(i) % (i + 1));
        }
        prop_assert_eq!(fingerprint(&t.relabel(&perm)), fingerprint(&t));
    }

    #[test]
    fn gram_entries_match_degree_profile(t in arb_tournament(10)) {
        let g = GramSquare::of(&SeidelMatrix::of(&t));
        let p = DegreeProfile::of(&t);
        for i in 0..t.n() {
            for j in 0..t.n() {
                if i != j {
                    prop_assert_eq!(m_from_gamma(p.gamma(i, j), t.n()), g.m(i, j));
                }
            }
        }
    }

    #[test]
    fn switching_equivalence_finds_constructed_witnesses(
        t in arb_tournament(7),
        mask in any::<u64>(),
    ) {
        let x = SwitchSet::from_mask(mask & ((1u64 << t.n()) - 1));
        let sw = switch(&t, x);
        let witness = are_switching_equivalent(&t, &sw).unwrap();
        let d = witness.expect("a switched copy must be equivalent");
        prop_assert_eq!(switch(&t, d.to_switch_set()), sw.clone());
        // symmetry
        prop_assert!(are_switching_equivalent(&sw, &t).unwrap().is_some());
    }

    #[test]
    fn switching_equivalence_is_transitive(
        t in arb_tournament(6),
        m1 in any::<u64>(),
        m2 in any::<u64>(),
    ) {
        let cut = (1u64 << t.n()) - 1;
        let a = switch(&t, SwitchSet::from_mask(m1 & cut));
        let b = switch(&a, SwitchSet::from_mask(m2 & cut));
        prop_assert!(are_switching_equivalent(&t, &a).unwrap().is_some());
        prop_assert!(are_switching_equivalent(&a, &b).unwrap().is_some());
        prop_assert!(are_switching_equivalent(&t, &b).unwrap().is_some());
    }

    #[test]
    fn delta_below_proven_bound(t in arb_tournament(11)) {
        if t.n() >= 4 {
            prop_assert!(count_diamonds_spectral(&t) <= bound(t.n()).unwrap().value);
        }
    }

    #[test]
    fn normalize_then_decompose_reproduces_delta(t in arb_tournament(8), v in 0usize..8) {
        prop_assume!(t.n() >= 2);
        let v = v % t.n();
        let norm = normalize_dominant(&t, v);
        let (d, c) = diamond_delta_decomposition(&norm, v).unwrap();
        prop_assert_eq!(d + c, count_diamonds_oracle(&t));
    }
}
