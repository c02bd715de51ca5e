use super::*;
use crate::counting::catalan_sequence;
use crate::involution::signed_sum_vector;

fn r(s: &str) -> Rat {
    s.parse().unwrap()
}

fn ints(xs: &[i64]) -> Vec<Rat> {
    xs.iter().map(|&x| Rat::int(x)).collect()
}

fn failure(report: &IdentityReport) -> &Counterexample {
    match &report.status {
        Status::Fail(c) => c,
        Status::Pass => panic!("expected failure: {report:?}"),
    }
}

#[test]
fn classical_row_is_delta() {
    let report = verify_alternating_sum(&Rat::one(), &Rat::int(2), &Rat::one(), 8);
    assert!(report.passed());
    assert_eq!(report.checked, 18);
    for n in 0..=8 {
        assert_eq!(alternating_lhs(&Rat::one(), &Rat::int(2), &Rat::one(), n, catalan_gen), kronecker(n));
    }
    assert!(verify_catalan_alternating(10, catalan_gen).passed());
}

#[test]
fn alpha_equal_gamma_collapses() {
    for g in ["-2", "1/3", "4"] {
        for b in ["0", "5/2"] {
            let (g, b) = (r(g), r(b));
            for n in 0..=6 {
                assert_eq!(alternating_rhs(&g, &g, n), kronecker(n));
                assert_eq!(alternating_lhs(&g, &b, &g, n, catalan_gen), kronecker(n));
            }
        }
    }
}

#[test]
fn small_hand_evaluation() {
    // 3 - 4 + 2
    let (a, b, g) = (Rat::int(3), Rat::int(2), Rat::one());
    assert_eq!(alternating_lhs(&a, &b, &g, 2, catalan_gen), Rat::one());
    assert_eq!(alternating_rhs(&a, &g, 2), Rat::one());
}

#[test]
fn rational_parameters_pass() {
    for a in ["-7/2", "1/3", "5/4"] {
        for b in ["-1/2", "3/2", "7/3"] {
            for g in ["-2/3", "1/2", "3"] {
                assert!(verify_alternating_sum(&r(a), &r(b), &r(g), 7).passed(), "{a} {b} {g}");
            }
        }
    }
}

fn plus_one_at_three(n: usize, beta: &Rat, gamma: &Rat) -> Rat {
    catalan_gen(n, beta, gamma) + if n == 3 { Rat::one() } else { Rat::zero() }
}

#[test]
fn faulty_catalan_is_caught_with_counterexample() {
    let report = verify_alternating_sum_with(&Rat::one(), &Rat::int(2), &Rat::one(), 6, plus_one_at_three);
    let c = failure(&report);
    let n = c.params.iter().find(|(k, _)| k == "n").unwrap().1.clone();
    assert_eq!(n, Rat::int(3));
    assert_eq!(c.rhs, Rat::zero());
    assert_eq!(c.lhs, Rat::one());
    // the counterexample reproduces
    assert_ne!(alternating_lhs(&Rat::one(), &Rat::int(2), &Rat::one(), 3, plus_one_at_three), c.rhs);
}

#[test]
fn reindexed_order_agrees() {
    for a in -2..=3 {
        for b in 0..=3 {
            for g in -1..=2 {
                let (a, b, g) = (Rat::int(a), Rat::int(b), Rat::int(g));
                for n in 0..=7 {
                    assert_eq!(
                        reindexed_lhs(&a, &b, &g, n, catalan_gen),
                        alternating_lhs(&a, &b, &g, n, catalan_gen)
                    );
                }
            }
        }
    }
}

#[test]
fn vector_examples() {
    let p = VecProfile::new(vec![1, 1], vec![2, 3]).unwrap();
    assert_eq!(vector_lhs(&p, 1, &Rat::one()), Rat::zero());
    assert_eq!(vector_rhs(&p, 1, &Rat::one()), Rat::zero());
    assert_eq!(vector_lhs(&p, 1, &Rat::int(4)), Rat::int(6));
    assert_eq!(vector_rhs(&p, 1, &Rat::int(4)), Rat::int(6));
    assert_eq!(vector_lhs(&p, 1, &Rat::int(4)), signed_sum_vector(&p, 1, 4).unwrap());
}

#[test]
fn vector_single_class_matches_scalar() {
    for beta in 1..=3usize {
        for gamma in 0..=3usize {
            for alpha in ["-2", "0", "3/2", "5"] {
                let alpha = r(alpha);
                let scalar = verify_alternating_sum(&alpha, &Rat::from(beta), &Rat::from(gamma), 5);
                let vector = verify_vector_alternating_sum(&[beta], gamma, &alpha, 5).unwrap();
                assert_eq!(scalar.passed(), vector.passed());
                assert!(vector.passed());
                for n in 0..=5 {
                    let p = VecProfile::new(vec![n], vec![beta]).unwrap();
                    assert_eq!(
                        vector_lhs(&p, gamma, &alpha),
                        alternating_lhs(&alpha, &Rat::from(beta), &Rat::from(gamma), n, catalan_gen)
                    );
                }
            }
        }
    }
}

#[test]
fn vector_rejects_bad_profile() {
    assert!(verify_vector_alternating_sum(&[3, 2], 1, &Rat::one(), 2).is_err());
    assert!(verify_vector_alternating_sum(&[], 1, &Rat::one(), 2).is_err());
}

#[test]
fn bounded_vectors_graded() {
    let v = bounded_vectors(2, 2);
    assert_eq!(v.len(), 6);
    assert_eq!(v[0], vec![0, 0]);
    assert!(v.windows(2).all(|w| w[0].iter().sum::<usize>() <= w[1].iter().sum::<usize>()));
}

#[test]
fn gould_catalan_roundtrip_example() {
    let seq = ints(&[1, 1, 2, 5, 14]);
    let pair = GouldPair::new(2, Rat::zero(), Rat::one());
    let back = gould_backward(&gould_forward(&seq, &pair), &pair).unwrap();
    assert_eq!(back, seq);
    assert_eq!(gould_forward(&gould_backward(&seq, &pair).unwrap(), &pair), seq);
}

#[test]
fn gould_zero_z_is_identity() {
    let seq = vec![r("1/2"), r("-3"), r("7/5"), r("0"), r("11")];
    for a in -2..=2 {
        for m in ["-1", "1/2", "3"] {
            let pair = GouldPair::new(a, r(m), Rat::zero());
            assert_eq!(gould_forward(&seq, &pair), seq);
            if pair.singular_index(seq.len()).is_none() {
                assert_eq!(gould_backward(&seq, &pair).unwrap(), seq);
            }
        }
    }
}

#[test]
fn gould_forward_of_catalan_is_alternating_rhs() {
    for beta in 0..=4i64 {
        for alpha in -2..=3 {
            for gamma in -1..=3 {
                let (a, b, g) = (Rat::int(alpha), Rat::int(beta), Rat::int(gamma));
                let pair = GouldPair::new(beta - 1, a.clone(), Rat::int(-1));
                let forward = gould_forward(&catalan_sequence(&b, &g, 9), &pair);
                let expected: Vec<Rat> = (0..=9).map(|n| alternating_rhs(&a, &g, n)).collect();
                assert_eq!(forward, expected, "α={alpha} β={beta} γ={gamma}");
            }
        }
    }
}

#[test]
fn gould_backward_naive_oracle() {
    // Direct transcription with the k = n term written out as its quotient.
    let pair = GouldPair::new(3, r("5/2"), r("-2/3"));
    let seq = vec![r("1"), r("-1/2"), r("4"), r("2/7"), r("-3")];
    let expected: Vec<Rat> = (0..seq.len())
        .map(|n| {
            let den = -(Rat::int(3) * Rat::from(n)) - r("5/2");
            (0..=n)
                .map(|k| {
                    let num = -(Rat::int(3) * Rat::from(k)) - r("5/2");
                    num / &den * binom(&den, n - k) * r("-2/3").pow((n - k) as u32) * &seq[k]
                })
                .sum()
        })
        .collect();
    assert_eq!(gould_backward(&seq, &pair).unwrap(), expected);
}

#[test]
fn gould_singular_reported() {
    // -a n - m = 0 at n = 2
    let pair = GouldPair::new(-1, Rat::int(2), Rat::one());
    assert_eq!(pair.singular_index(5), Some(2));
    assert_eq!(pair.singular_index(2), None);
    assert!(matches!(gould_backward(&ints(&[1, 2, 3]), &pair), Err(Error::Singular(_))));
    let report = verify_gould_roundtrip(&pair, &random_sequences(1, 3, 5));
    assert!(report.passed());
    assert_eq!(report.skipped.len(), 1);
    assert_eq!(report.checked, 0);
}

#[test]
fn random_sequences_deterministic() {
    assert_eq!(random_sequences(7, 4, 6), random_sequences(7, 4, 6));
    assert_ne!(random_sequences(7, 4, 6), random_sequences(8, 4, 6));
    let seqs = random_sequences(0, 20, 10);
    assert_eq!(seqs.len(), 20);
    assert!(seqs.iter().all(|s| s.len() == 10));
}

#[test]
fn gould_inversion_examples() {
    assert_eq!(gould_inversion_lhs(&Rat::zero(), &Rat::int(2), &Rat::one(), 1), Some(Rat::one()));
    assert!(verify_gould_inversion(&Rat::zero(), &Rat::int(2), &Rat::one(), 10).passed());
    for g in -2..=3 {
        let g = Rat::int(g);
        assert!(verify_gould_inversion(&g, &Rat::int(3), &g, 8).passed());
    }
}

#[test]
fn gould_inversion_skips_singular() {
    // (1-β)n - α = 0 at β = 2, α = -2, n = 2
    let report = verify_gould_inversion(&Rat::int(-2), &Rat::int(2), &Rat::one(), 5);
    assert!(report.passed());
    assert_eq!(report.skipped.len(), 1);
    assert_eq!(report.checked, 4);
    // β = 1, α = 0: every n is singular
    let report = verify_gould_inversion(&Rat::zero(), &Rat::one(), &Rat::one(), 4);
    assert_eq!((report.checked, report.skipped.len()), (0, 4));
}

#[test]
fn closed_form_examples() {
    let c = reduction_chain(&Rat::int(2), &Rat::one(), 3);
    assert_eq!(&c.plain_closed + &c.shifted_closed, Rat::int(5));
    assert_eq!(c.catalan, Rat::int(5));
    assert!(closed_form_reduction_check(&Rat::int(2), &Rat::one(), 10).passed());
    // β = 1: second closed term vanishes
    let c = reduction_chain(&Rat::one(), &Rat::int(2), 4);
    assert!(c.shifted_closed.is_zero());
    assert!(closed_form_reduction_check(&Rat::one(), &Rat::int(2), 10).passed());
    for b in ["-3/2", "0", "1/3", "4"] {
        for g in ["-1", "2/5", "3"] {
            assert!(closed_form_reduction_check(&r(b), &r(g), 8).passed(), "{b} {g}");
        }
    }
}

#[test]
fn involution_and_cross_method_small() {
    assert!(verify_involution(2, 1, 2, 3, crate::DEFAULT_MAX_STRUCTS).unwrap().passed());
    assert!(verify_cross_method(3, 1, 1, 3, crate::DEFAULT_MAX_STRUCTS).unwrap().passed());
    assert!(verify_vector_involution(&[2, 3], 1, 2, 2, crate::DEFAULT_MAX_STRUCTS).unwrap().passed());
    assert!(matches!(
        verify_involution(2, 1, 2, 6, 10),
        Err(Error::TooManyStructures { .. })
    ));
}

#[test]
fn riordan_and_series_reports() {
    let (p, m) = verify_riordan(&Rat::int(2), &Rat::int(3), &Rat::one(), 12).unwrap();
    assert!(p.passed() && m.passed());
    assert!(verify_functional_equation(&r("5/2"), &r("-1/3"), 10).passed());
    assert!(verify_convolution(&Rat::int(2), &r("1/2"), &r("3/2"), 12).passed());
}

#[test]
fn rat_range_values() {
    let range = RatRange::new(r("-1"), r("1"), r("1/2")).unwrap();
    assert_eq!(range.values(), vec![r("-1"), r("-1/2"), r("0"), r("1/2"), r("1")]);
    assert!(RatRange::new(r("0"), r("1"), r("0")).is_err());
    assert!(RatRange::new(r("0"), r("1"), r("-1")).is_err());
    assert!(RatRange::ints(3, 1).values().is_empty());
    assert!(range.naturals().is_err());
    assert_eq!(RatRange::ints(0, 2).naturals().unwrap(), vec![0, 1, 2]);
}

#[test]
fn empty_config_empty_report() {
    assert!(run_suite(&SuiteConfig::default()).unwrap().is_empty());
}

#[test]
fn smoke_suite_order_and_pass() {
    let reports = run_suite(&SuiteConfig::smoke()).unwrap();
    let ids: Vec<_> = reports.iter().map(|r| r.id).collect();
    assert_eq!(ids, vec![IdentityId::AlternatingSum, IdentityId::ReindexedSum]);
    assert!(reports.iter().all(IdentityReport::passed));
}

#[test]
fn fault_injection_fails_alternating_sum() {
    let config = SuiteConfig { fault: Some(Fault::CatalanOffByOne), catalan_alternating: Some(4), ..SuiteConfig::smoke() };
    let reports = run_suite(&config).unwrap();
    assert_eq!(reports[0].id, IdentityId::CatalanAlternating);
    assert!(!reports[0].passed());
    assert!(!reports[1].passed());
    let c = failure(&reports[1]);
    assert_ne!(c.lhs, c.rhs);
}

#[test]
fn natural_sections_reject_fractions() {
    let config = SuiteConfig {
        involution: Some(InvolutionGrid {
            beta: RatRange::single(r("3/2")),
            gamma: RatRange::ints(1, 1),
            alpha_offset: RatRange::ints(0, 0),
            n_max: 2,
        }),
        ..SuiteConfig::default()
    };
    assert!(run_suite(&config).is_err());
}
