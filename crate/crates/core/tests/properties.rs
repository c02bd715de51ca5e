use catalania_core::forest::{decode, encode, generate_forests};
use catalania_core::identities::{gould_backward, gould_forward, GouldPair};
use catalania_core::involution::{classify, decode_colored, encode_colored, enumerate_colored, involute, Classification};
use catalania_core::{binom, catalan_gen, Rat, Series};
use proptest::prelude::*;

fn rat() -> impl Strategy<Value = Rat> {
    (-30i64..=30, 1i64..=7).prop_map(|(p, q)| Rat::ratio(p, q))
}

fn series(order: usize) -> impl Strategy<Value = Series> {
    proptest::collection::vec(rat(), order + 1).prop_map(Series::new)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn series_ring_laws(a in series(8), b in series(8), c in series(8)) {
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&(&a + &b) - &b, a.clone());
        prop_assert_eq!(&a * &Series::one(8), a);
    }

    #[test]
    fn unit_inverse(mut a in series(7), c in rat()) {
        prop_assume!(!c.is_zero());
        let mut coeffs = a.into_coeffs();
        coeffs[0] = c;
        a = Series::new(coeffs);
        let inv = a.recip().unwrap();
        prop_assert_eq!(&a * &inv, Series::one(7));
    }

    #[test]
    fn binpow_exponent_law(s in rat(), t in rat()) {
        let lhs = &Series::binpow(&s, 10) * &Series::binpow(&t, 10);
        prop_assert_eq!(lhs, Series::binpow(&(&s + &t), 10));
    }

    #[test]
    fn vandermonde(x in rat(), y in rat(), n in 0usize..12) {
        let sum: Rat = (0..=n).map(|k| binom(&x, k) * binom(&y, n - k)).sum();
        prop_assert_eq!(sum, binom(&(&x + &y), n));
    }

    #[test]
    fn catalan_convolution(beta in rat(), g1 in rat(), g2 in rat(), n in 0usize..9) {
        let sum: Rat = (0..=n).map(|i| catalan_gen(i, &beta, &g1) * catalan_gen(n - i, &beta, &g2)).sum();
        prop_assert_eq!(sum, catalan_gen(n, &beta, &(&g1 + &g2)));
    }

    #[test]
    fn gould_roundtrip_random(
        seq in proptest::collection::vec(rat(), 1..10),
        a in -3i64..=3,
        m in rat(),
        z in rat(),
    ) {
        let pair = GouldPair::new(a, m, z);
        prop_assume!(pair.singular_index(seq.len()).is_none());
        let there = gould_forward(&seq, &pair);
        prop_assert_eq!(&gould_backward(&there, &pair).unwrap(), &seq);
        let back = gould_backward(&seq, &pair).unwrap();
        prop_assert_eq!(gould_forward(&back, &pair), seq);
    }

    #[test]
    fn forest_encoding_roundtrip(beta in 1usize..=3, n in 0usize..=4, gamma in 1usize..=3, pick in any::<prop::sample::Index>()) {
        let all = generate_forests(beta, n, gamma).unwrap();
        let f = &all[pick.index(all.len())];
        prop_assert_eq!(&decode(&encode(f)).unwrap(), f);
    }

    #[test]
    fn colored_involution_roundtrip(
        beta in 2usize..=3,
        internal in 0usize..=3,
        colored in 0usize..=2,
        gamma in 1usize..=2,
        extra in 0usize..=2,
        pick in any::<prop::sample::Index>(),
    ) {
        let all = enumerate_colored(beta, internal, colored, gamma, gamma + extra).unwrap();
        prop_assume!(!all.is_empty());
        let c = &all[pick.index(all.len())];
        prop_assert_eq!(&decode_colored(&encode_colored(c), 1).unwrap(), c);
        if classify(c) != Classification::Exceptional {
            let partner = involute(c, &[beta]).unwrap();
            prop_assert_eq!(partner.weight(), -c.weight());
            prop_assert_eq!(&involute(&partner, &[beta]).unwrap(), c);
        }
    }
}
