//! Acceptance suite: one test per criterion, each printing a PASS/FAIL line.
//!
//! Run with `cargo test -p diamondlab-core --test acceptance -- --nocapture`.
//! Criterion 10 is a multi-minute exhaustive run and is `#[ignore]`d; opt in
//! with `-- --ignored` or via the CLI target `reproduce conjecture9`.
//!
//! Test manifest (fixed seeds for every randomized corpus):
//! * `SEED_CORPUS`    — criteria 1 and 2, 500 instances per order 7..=16,
//!   per-order stream seeded with `SEED_CORPUS ^ n`;
//! * `SEED_SWITCHES`  — criterion 8 random pre-switches.

use diamondlab_core::counting::principal_seidel_det4;
use diamondlab_core::spectral::{deleted_drt_form_poly, ew_form_poly};
use diamondlab_core::*;
use num_bigint::BigInt;
use rand::{RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

const SEED_CORPUS: u64 = 0xD1A3_0C0A;
const SEED_SWITCHES: u64 = 0xD1A3_0010;

fn exhaustive(n: usize) -> Vec<Tournament> {
    let nbits = tournament::arc_count(n);
    (0u64..1 << nbits)
        .map(|code| Tournament::from_arc_code(n, code).unwrap())
        .collect()
}

fn random_corpus(n: usize, count: usize) -> Vec<Tournament> {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED_CORPUS ^ n as u64);
    (0..count)
        .map(|_| Tournament::random(n, &mut rng).unwrap())
        .collect()
}

fn report(criterion: &str, pass: bool, detail: &str) {
    println!(
        "ACCEPTANCE {criterion}: {} — {detail}",
        if pass { "PASS" } else { "FAIL" }
    );
}

fn is_cyclic(t: &Tournament, a: usize, b: usize, c: usize) -> bool {
    (t.dominates(a, b) && t.dominates(b, c) && t.dominates(c, a))
        || (t.dominates(a, c) && t.dominates(c, b) && t.dominates(b, a))
}

/// c1: the 4-subset oracle and the S²-entry formula agree on diamonds, and
/// the degree formula and the S²-entry formula agree on 3-cycles, exactly,
/// over the exhaustive corpus (n ≤ 6) and 500 seeded instances per
/// n ∈ 7..=16.
#[test]
fn c01_oracle_equivalence() {
    let mut checked = 0u64;
    for n in 1..=6usize {
        for t in exhaustive(n) {
            assert_eq!(
                count_diamonds_oracle(&t),
                count_diamonds_spectral(&t),
                "diamond counters disagree at n={n} bits={}",
                t.bit_string()
            );
            assert_eq!(
                count_3cycles_degree(&t),
                count_3cycles_spectral(&t),
                "3-cycle counters disagree at n={n} bits={}",
                t.bit_string()
            );
            checked += 1;
        }
    }
    for n in 7..=16usize {
        let corpus = random_corpus(n, 500);
        corpus.par_iter().for_each(|t| {
            assert_eq!(count_diamonds_oracle(t), count_diamonds_spectral(t));
            assert_eq!(count_3cycles_degree(t), count_3cycles_spectral(t));
        });
        checked += 500;
    }
    report(
        "C1",
        true,
        &format!("oracle and spectral counters agree exactly on {checked} tournaments"),
    );
}

/// c2: α₄ = 8δ + C(n,4), every 4×4 principal Seidel determinant is 1 or 9
/// (9 exactly on diamonds), and β₂ = 2α₄ + α₂², over the same corpus.
#[test]
fn c02_minor_sum_and_determinant_identities() {
    fn check(t: &Tournament) {
        let n = t.n();
        let s = SeidelMatrix::of(t);
        if n >= 4 {
            let chk = minor_sum_identity_check(t).unwrap();
            assert!(
                chk.pass,
                "alpha4 {} != {} at n={n} bits={}",
                chk.alpha4,
                chk.expected,
                t.bit_string()
            );
            for a in 0..n {
                for b in (a + 1)..n {
                    for c in (b + 1)..n {
                        for d in (c + 1)..n {
                            let det = principal_seidel_det4(&s, a, b, c, d);
                            assert!(det == 1 || det == 9);
                            let cycles = is_cyclic(t, a, b, c) as u32
                                + is_cyclic(t, a, b, d) as u32
                                + is_cyclic(t, a, c, d) as u32
                                + is_cyclic(t, b, c, d) as u32;
                            assert_eq!(det == 9, cycles == 1);
                        }
                    }
                }
            }
        }
        assert!(beta_alpha_identity_check(&s).pass, "beta/alpha at n={n}");
    }

    let mut checked = 0u64;
    for n in 1..=6usize {
        let corpus = exhaustive(n);
        corpus.par_iter().for_each(check);
        checked += corpus.len() as u64;
    }
    for n in 7..=16usize {
        let corpus = random_corpus(n, 500);
        corpus.par_iter().for_each(check);
        checked += 500;
    }
    report(
        "C2",
        true,
        &format!("minor-sum, 4x4 determinant and beta/alpha identities hold on {checked} tournaments"),
    );
}

/// c3: switching never changes the diamond count or the characteristic
/// polynomial: all tournaments on n ≤ 5, all 2ⁿ switch sets.
#[test]
fn c03_switching_invariance() {
    let mut checked = 0u64;
    for n in 1..=5usize {
        let corpus = exhaustive(n);
        checked += corpus.len() as u64 * (1 << n);
        corpus.par_iter().for_each(|t| {
            let delta = count_diamonds_oracle(t);
            let poly = CharPoly::of_seidel(&SeidelMatrix::of(t));
            for mask in 0..(1u64 << n) {
                let sw = switch(t, SwitchSet::from_mask(mask));
                assert_eq!(count_diamonds_oracle(&sw), delta);
                assert_eq!(CharPoly::of_seidel(&SeidelMatrix::of(&sw)), poly);
            }
        });
    }
    report(
        "C3",
        true,
        &format!("delta and char poly invariant across {checked} (tournament, switch set) pairs"),
    );
}

/// c4: for q ∈ {3, 7, 11, 19}, the Paley tournament is doubly regular with
/// pair degree (q-3)/4, its dominated extension is skew-conference, and the
/// extension has (q+1)²q(q-1)/96 diamonds by both counters.
#[test]
fn c04_paley_skew_conference_suite() {
    for q in [3u64, 7, 11, 19] {
        let t = paley(q).unwrap();
        assert!(is_doubly_regular(&t), "paley({q}) must be doubly regular");
        let p = DegreeProfile::of(&t);
        for i in 0..t.n() {
            for j in 0..t.n() {
                if i != j {
                    assert_eq!(p.pair_out(i, j) as u64, (q - 3) / 4);
                }
            }
        }
        let star = add_dominating_vertex(&t).unwrap();
        assert!(is_skew_conference(&SeidelMatrix::of(&star)));
        let n = q + 1;
        let expected = n * n * (n - 1) * (n - 2) / 96;
        assert_eq!(count_diamonds_oracle(&star), expected, "oracle at q={q}");
        assert_eq!(count_diamonds_spectral(&star), expected, "spectral at q={q}");
    }
    report("C4", true, "Paley suite holds for q in {3, 7, 11, 19}");
}

/// c5: exhaustive maxima are 1, 2, 6, 14, 28 at orders 4..=8; at order 6
/// there are exactly two maximizer classes up to isomorphism, one carrying
/// the deleted-vertex lineage and one whose S + I is a skew EW matrix.
#[test]
fn c05_extremal_census() {
    let opts = SearchOptions::default();
    let expected = [(4usize, 1u64), (5, 2), (6, 6), (7, 14), (8, 28)];
    for (n, want) in expected {
        let outcome = search_max(n, &opts).unwrap();
        assert_eq!(outcome.max_delta, want, "max delta at n={n}");
        assert_eq!(outcome.enumerated, 1 << tournament::arc_count(n - 1));
    }

    let s6 = search_max(6, &opts).unwrap();
    assert_eq!(s6.iso_classes, Some(2), "order-6 maximizer classes");
    let reps = s6.class_representatives.clone().unwrap();
    assert_eq!(reps.len(), 2);

    let ew_class: Vec<&Tournament> = reps
        .iter()
        .filter(|r| CharPoly::of_seidel(&SeidelMatrix::of(r)) == ew_form_poly(1))
        .collect();
    let drt_class: Vec<&Tournament> = reps
        .iter()
        .filter(|r| CharPoly::of_seidel(&SeidelMatrix::of(r)) == deleted_drt_form_poly(1))
        .collect();
    assert_eq!((ew_class.len(), drt_class.len()), (1, 1));

    // the EW class is the class of the bundled two-3-cycles tournament,
    // whose S + I is a skew EW matrix
    let ew6 = builtin("ew6").unwrap();
    assert!(is_skew_ew_seidel(&SeidelMatrix::of(&ew6)).unwrap().is_some());
    assert!(are_switching_equivalent_up_to_iso(ew_class[0], &ew6)
        .unwrap()
        .is_some());

    // the other class is a deleted doubly regular tournament and passes the
    // deleted-vertex lineage check (delta and score multiset per deletion)
    let d7 = delete_vertex(&paley(7).unwrap(), 0).unwrap();
    assert!(are_switching_equivalent_up_to_iso(drt_class[0], &d7)
        .unwrap()
        .is_some());
    assert!(lemma_deleted_max_check(drt_class[0]).unwrap().pass);

    report(
        "C5",
        true,
        "maxima 1, 2, 6, 14, 28 at n = 4..8; two order-6 classes (EW and deleted-DRT)",
    );
}

/// c6: the bundled 10-vertex instance: delta 70 by both counters, the stated
/// characteristic polynomial and determinant, S + I not EW, and a parity
/// block certificate.
///
/// The polynomial and determinant sub-claims fail: the stated polynomial
/// (x²+1)(x⁴+18x²+61)² has x⁸ coefficient 37, but every 10-tournament has
/// x⁸ coefficient n(n-1)/2 = 45, and its x⁶ coefficient 482 would force
/// delta = 34, contradicting the stated (and actual) 70. The bundled matrix
/// actually has char poly (x²+9)(x⁴+18x²+61)² and determinant 33489.
#[test]
fn c06_bundled_ten_vertex_instance() {
    let t = builtin("paper10").unwrap();
    let s = SeidelMatrix::of(&t);
    let poly = CharPoly::of_seidel(&s);
    let mut failures: Vec<String> = Vec::new();

    let d_oracle = count_diamonds_oracle(&t);
    let d_spectral = count_diamonds_spectral(&t);
    let sub1 = d_oracle == 70 && d_spectral == 70;
    report(
        "C6.delta",
        sub1,
        &format!("expected 70/70, got oracle {d_oracle}, spectral {d_spectral}"),
    );
    if !sub1 {
        failures.push("delta".into());
    }

    // stated: (x²+1)(x⁴+18x²+61)² = x¹⁰+37x⁸+482x⁶+2642x⁴+5917x²+3721
    let stated_poly: Vec<BigInt> = [3721, 0, 5917, 0, 2642, 0, 482, 0, 37, 0, 1]
        .iter()
        .map(|&c| BigInt::from(c))
        .collect();
    let sub2 = poly.coeffs() == &stated_poly[..];
    report(
        "C6.charpoly",
        sub2,
        &format!(
            "expected (x^2+1)(x^4+18x^2+61)^2, computed {}",
            poly.to_display_string()
        ),
    );
    if !sub2 {
        failures.push("charpoly".into());
    }

    let det = poly.determinant();
    let sub3 = det == BigInt::from(3721);
    report("C6.det", sub3, &format!("expected 3721, computed {det}"));
    if !sub3 {
        failures.push("det".into());
    }

    let sub4 = is_skew_ew_seidel(&s).unwrap().is_none();
    report("C6.not_ew", sub4, "S + I must not be an EW matrix");
    if !sub4 {
        failures.push("not_ew".into());
    }

    let cert = certify_extremal(&t);
    let sub5 = cert.kind == CertificateKind::ParityBlock && cert.verify(&t);
    report(
        "C6.certificate",
        sub5,
        &format!("expected parity_block, got {:?}", cert.kind),
    );
    if !sub5 {
        failures.push("certificate".into());
    }

    report("C6", failures.is_empty(), &format!("sub-claims failed: {failures:?}"));
    assert!(
        failures.is_empty(),
        "stated values unmet: {failures:?} (see C6.* lines; the stated polynomial is \
         inconsistent with x^8 coefficient 45 forced at order 10 and with delta = 70)"
    );
}

/// c7: the named spectral forms: ew6 matches (x²+9)(x²+3)²; deleting any
/// vertex of paley(11) matches (x²+1)(x²+11)⁴ with delta 70.
#[test]
fn c07_named_spectral_forms() {
    let e = builtin("ew6").unwrap();
    let p = CharPoly::of_seidel(&SeidelMatrix::of(&e));
    assert_eq!(p, ew_form_poly(1));
    assert_eq!(p.to_display_string(), "x^6 + 15x^4 + 63x^2 + 81");
    assert_eq!(match_spectral_form(&p), SpectralForm::EwForm { k: 1 });

    let p11 = paley(11).unwrap();
    for v in 0..11 {
        let d = delete_vertex(&p11, v).unwrap();
        let poly = CharPoly::of_seidel(&SeidelMatrix::of(&d));
        assert_eq!(poly, deleted_drt_form_poly(2), "v={v}");
        assert_eq!(match_spectral_form(&poly), SpectralForm::DeletedDrtForm { k: 2 });
        assert_eq!(count_diamonds_oracle(&d), 70, "v={v}");
    }
    report(
        "C7",
        true,
        "(x^2+9)(x^2+3)^2 and (x^2+1)(x^2+11)^4 match their named forms with delta 6 and 70",
    );
}

/// c8: the residue-3 certificate round trip: paley(q) certifies with the
/// parity diagonal, the D-switch is doubly regular, and certifying after a
/// random pre-switch gives the same verdict.
#[test]
fn c08_theorem_round_trips() {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED_SWITCHES);
    for q in [7u64, 11, 19] {
        let t = paley(q).unwrap();
        let cert = certify_extremal(&t);
        assert_eq!(cert.kind, CertificateKind::ParityDiagonalJ, "q={q}");
        assert!(cert.verify(&t));
        let diag = SignDiagonal::new(cert.diagonal.clone().unwrap().to_vec()).unwrap();
        assert!(is_doubly_regular(&extremal::apply_diagonal(&t, &diag)));

        for _ in 0..4 {
            let mask = rng.next_u64() & ((1u64 << q) - 1);
            let switched = switch(&t, SwitchSet::from_mask(mask));
            let cert2 = certify_extremal(&switched);
            assert_eq!(cert2.kind, CertificateKind::ParityDiagonalJ, "q={q} mask={mask:#x}");
            assert!(cert2.verify(&switched));
            let diag2 = SignDiagonal::new(cert2.diagonal.clone().unwrap().to_vec()).unwrap();
            assert!(is_doubly_regular(&extremal::apply_diagonal(&switched, &diag2)));
        }
    }
    report(
        "C8",
        true,
        "parity-diagonal certificates round-trip for q in {7, 11, 19}, before and after switching",
    );
}

/// c9: the order-(4k+1) harnesses: a dominating apex over skew-conference
/// orders 4 and 8 yields 2 and 42 diamonds; both order-6 maximizers pass the
/// deleted-vertex check including the score multiset.
#[test]
fn c09_deleted_and_apex_harnesses() {
    let star3 = add_dominating_vertex(&paley(3).unwrap()).unwrap();
    let chk = lemma_conference_plus_apex_check(&star3).unwrap();
    assert!(chk.pass && chk.extended_order == 5 && chk.delta == 2);

    let star7 = add_dominating_vertex(&paley(7).unwrap()).unwrap();
    let chk = lemma_conference_plus_apex_check(&star7).unwrap();
    assert!(chk.pass && chk.extended_order == 9 && chk.delta == 42);

    for t in [
        builtin("ew6").unwrap(),
        delete_vertex(&paley(7).unwrap(), 0).unwrap(),
    ] {
        let chk = lemma_deleted_max_check(&t).unwrap();
        assert!(chk.pass);
        assert_eq!(chk.expected_delta, 2);
        assert_eq!(chk.expected_scores, vec![1, 2, 2, 2, 3]);
        assert!(chk.rows.iter().all(|r| r.pass));
    }
    report(
        "C9",
        true,
        "apex checks give 2 and 42; both order-6 maximizers pass the deletion/score check",
    );
}

/// c10 (opt-in, multi-minute): exhaustive order-9 probe over 2^28 candidates
/// with checkpointing; must complete and report a definite maximum. Whether
/// that maximum equals the conjectured 42 is reported, not presumed.
#[test]
#[ignore = "exhaustive 2^28 enumeration; run with -- --ignored or via `reproduce conjecture9`"]
fn c10_conjecture_probe_order9() {
    let dir = std::env::var_os("DIAMONDLAB_CHECKPOINT_DIR")
        .map(std::path::PathBuf::from)
        .unwrap_or_else(std::env::temp_dir);
    std::fs::create_dir_all(&dir).unwrap();
    let opts = SearchOptions {
        checkpoint: Some(dir.join("acceptance_search_n9.json")),
        ..Default::default()
    };
    let probe = conjecture_probe(9, &opts).unwrap();
    assert_eq!(probe.conjectured, 42);
    assert_eq!(probe.outcome.enumerated, 1 << 28);
    // the proven order-9 bound caps anything the search can find
    assert!(probe.observed_max <= bound(9).unwrap().value);
    report(
        "C10",
        true,
        &format!(
            "order-9 exhaustion complete: observed max {} vs conjectured 42 ({}), margin {}",
            probe.observed_max,
            if probe.refuted { "refuted" } else { "not refuted" },
            probe.margin
        ),
    );
}
