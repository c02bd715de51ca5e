use super::*;
use crate::exact::binom;
use crate::forest::decode;
use alloc::string::ToString;

fn scalar(s: &str) -> ColoredForest {
    decode_colored(s, 1).unwrap()
}

fn addr(component: usize, path: &[usize]) -> VertexAddr {
    VertexAddr { component, path: path.to_vec() }
}

#[test]
fn ternary_candidate_and_incumbent_pair() {
    let left = scalar("((ooo)o*(oo*(ooo)))");
    assert_eq!((left.internal_count(), left.colored_count()), (4, 2));
    assert_eq!(classify(&left), Classification::First { candidate: addr(0, &[2, 1]) });

    let right = involute(&left, &[3]).unwrap();
    assert_eq!(encode_colored(&right), "((ooo)o*(o(ooo)(ooo)))");
    assert_eq!((right.internal_count(), right.colored_count()), (5, 1));
    assert_eq!(classify(&right), Classification::Second { incumbent: addr(0, &[2, 1]) });
    assert_eq!(involute(&right, &[3]).unwrap(), left);
}

#[test]
fn exceptional_structures() {
    for s in ["o", "o;o", "P[3:*,-,*]|o", "P[2:-,-]|o;o"] {
        assert_eq!(classify(&scalar(s)), Classification::Exceptional, "{s}");
        assert_eq!(involute(&scalar(s), &[2]), Err(Error::Exceptional));
    }
}

#[test]
fn uncolored_forest_is_second_class() {
    let c = scalar("(o(oo));(oo)");
    assert_eq!(classify(&c), Classification::Second { incumbent: addr(0, &[1]) });
    let c = scalar("(oo);o");
    assert_eq!(classify(&c), Classification::Second { incumbent: addr(0, &[]) });
}

#[test]
fn lone_colored_leaf_grows() {
    let c = scalar("o*");
    assert_eq!(classify(&c), Classification::First { candidate: addr(0, &[]) });
    assert_eq!(encode_colored(&involute(&c, &[2]).unwrap()), "(oo)");
}

#[test]
fn candidate_prefers_the_bottom_level() {
    // Colored leaves at depths 1 and 2: the deeper one wins even though it is further right.
    let c = scalar("(o*(oo*))");
    assert_eq!(classify(&c), Classification::First { candidate: addr(0, &[1, 1]) });
}

#[test]
fn blocked_colored_leaf_falls_through_to_second_class() {
    // The colored leaf at depth 1 has an internal vertex to its left.
    let c = scalar("((oo)o*)");
    assert_eq!(classify(&c), Classification::Second { incumbent: addr(0, &[0]) });
}

#[test]
fn levels_span_components() {
    // Depth-1 vertices: 0:0 (internal), 0:1, 1:0 (colored), 1:1. The colored leaf is blocked.
    let c = scalar("((oo)o);(o*o)");
    assert_eq!(classify(&c), Classification::Second { incumbent: addr(0, &[0]) });
    let back = involute(&c, &[2]).unwrap();
    assert_eq!(encode_colored(&back), "(o*o);(o*o)");
    assert_eq!(classify(&back), Classification::First { candidate: addr(0, &[0]) });
}

#[test]
fn enumerate_colored_examples() {
    assert_eq!(enumerate_colored(2, 1, 1, 1, 1).unwrap().len(), 2);
    assert_eq!(enumerate_colored(3, 0, 0, 2, 2).unwrap().len(), 1);
    assert_eq!(enumerate_colored(2, 1, 2, 1, 3).unwrap().len(), 6);
    assert_eq!(enumerate_colored(2, 1, 1, 2, 1), Err(Error::AlphaBelowGamma { alpha: 1, gamma: 2 }));
    assert_eq!(enumerate_colored(2, 1, 1, 0, 0), Err(Error::NoComponents));
}

#[test]
fn enumerate_colored_matches_closed_form() {
    for beta in 1..=3 {
        for gamma in 1..=2 {
            for alpha in gamma..=gamma + 2 {
                for n in 0..=3 {
                    for i in 0..=3 {
                        let got = enumerate_colored(beta, n, i, gamma, alpha).unwrap();
                        assert_eq!(got.len() as u128, colored_count_estimate(beta, n, i, gamma, alpha));
                        let distinct: BTreeSet<_> = got.iter().collect();
                        assert_eq!(distinct.len(), got.len());
                    }
                }
            }
        }
    }
}

#[test]
fn involution_roundtrip_grid() {
    for beta in 1..=3 {
        for gamma in 1..=2 {
            for alpha in gamma..=3.max(gamma) {
                for n in 0..=4 {
                    for c in scalar_structures(beta, n, gamma, alpha, u64::MAX).unwrap() {
                        let class = classify(&c);
                        if class == Classification::Exceptional {
                            assert_eq!(c.colored_leaves(), 0);
                            assert_eq!(c.internal_count(), 0);
                            continue;
                        }
                        let image = involute(&c, &[beta]).unwrap();
                        assert_ne!(classify(&image).class_index(), class.class_index());
                        assert_eq!(image.weight(), -c.weight());
                        assert_eq!(image.internal_count() + image.colored_count(), n);
                        assert_eq!(involute(&image, &[beta]).unwrap(), c, "{c}");
                    }
                }
            }
        }
    }
}

#[test]
fn signed_sum_examples() {
    assert_eq!(signed_sum(3, 6, 1, 1).unwrap(), Rat::zero());
    assert_eq!(signed_sum(2, 0, 1, 1).unwrap(), Rat::one());
    assert_eq!(signed_sum(3, 0, 2, 4).unwrap(), Rat::one());
    assert_eq!(signed_sum(2, 2, 1, 3).unwrap(), Rat::one());
    assert!(matches!(signed_sum_with_limit(2, 6, 1, 1, 10), Err(Error::TooManyStructures { .. })));
}

#[test]
fn signed_sum_vector_examples() {
    let p23 = VecProfile::new(vec![1, 1], vec![2, 3]).unwrap();
    assert_eq!(signed_sum_vector(&p23, 1, 1).unwrap(), Rat::zero());
    assert_eq!(signed_sum_vector(&p23, 1, 4).unwrap(), Rat::int(6));
    let empty = VecProfile::new(vec![0], vec![2]).unwrap();
    assert_eq!(signed_sum_vector(&empty, 1, 1).unwrap(), Rat::one());
}

#[test]
fn signed_matching_contract() {
    let structures = scalar_structures(2, 3, 1, 1, u64::MAX).unwrap();
    let matched: Vec<_> = structures.into_iter().filter(|c| classify(c) != Classification::Exceptional).collect();
    assert!(!matched.is_empty());
    let ok = check_signed_matching(&matched, ColoredForest::weight, |c| involute(c, &[2]).ok(), |c| {
        classify(c).class_index()
    });
    assert_eq!(ok, Ok(()));

    let lonely = [scalar("o*")];
    let r = check_signed_matching(&lonely, ColoredForest::weight, |c| involute(c, &[2]).ok(), |c| {
        classify(c).class_index()
    });
    assert!(matches!(r, Err(MatchingFailure::NotClosed(_))));

    let none: [ColoredForest; 0] = [];
    assert_eq!(check_signed_matching(&none, ColoredForest::weight, |_| None, |_| 0u8), Ok(()));

    let ints = [1i64, 2];
    let r = check_signed_matching(&ints, |_| 1, |&x| Some(3 - x), |&x| x);
    assert_eq!(r, Err(MatchingFailure::WeightNotReversed(1)));
    let r = check_signed_matching(&ints, |&x| if x == 1 { 1 } else { -1 }, |&x| Some(x), |&x| x);
    assert_eq!(r, Err(MatchingFailure::FixedPoint(1)));
}

#[test]
fn exceptional_census_counts_planted_choices() {
    for gamma in 1..=2 {
        for alpha in gamma..=gamma + 3 {
            for n in 0..=4 {
                let all = scalar_structures(2, n, gamma, alpha, u64::MAX).unwrap();
                let result = census(&all, &[2]).unwrap();
                let expect = binom(&Rat::from(alpha - gamma), n);
                assert_eq!(Rat::from(result.exceptional.len()), expect);
                assert_eq!(result.exceptional_weight, &expect * Rat::sign_pow(n));
                assert_eq!(result.signed_sum, result.exceptional_weight);
                assert_eq!(result.pairs.len() * 2 + result.exceptional.len(), all.len());
            }
        }
    }
}

#[test]
fn vector_involution_uses_outdegree_classes() {
    let c = decode_colored("(o*2o)", 2).unwrap();
    let image = involute(&c, &[2, 3]).unwrap();
    assert_eq!(encode_colored(&image), "((ooo)o)");
    assert_eq!(involute(&image, &[2, 3]).unwrap(), c);
    let bad = decode_colored("(oooo)", 2).unwrap();
    assert!(matches!(involute(&bad, &[2, 3]), Err(Error::OutdegreeNotInProfile { outdegree: 4, .. })));
}

#[test]
fn colored_encoding_roundtrip() {
    for c in scalar_structures(2, 3, 2, 4, u64::MAX).unwrap() {
        assert_eq!(decode_colored(&encode_colored(&c), 1).unwrap(), c);
    }
    let p = VecProfile::new(vec![1, 1], vec![2, 3]).unwrap();
    for c in vector_structures(&p, 1, 3, u64::MAX).unwrap() {
        assert_eq!(decode_colored(&c.to_string(), 2).unwrap(), c);
    }
    let c = scalar("P[2:*,-]|(o*o);o");
    assert_eq!(c.planted(), 2);
    assert_eq!(c.colored_count(), 2);
    assert_eq!(c.forest, decode("(oo);o").unwrap());
}

#[test]
fn colored_decode_errors() {
    for bad in ["P[2:*]|o", "P[1:x]|o", "o*3", "(o*", "P1:-]|o", "o**"] {
        assert!(decode_colored(bad, 1).is_err() || decode_colored(bad, 2).is_err(), "{bad}");
    }
    assert!(matches!(decode_colored("o*3", 2), Err(Error::Syntax { pos: 2, .. })));
}
