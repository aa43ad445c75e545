use ffpure::{Monomial, MonomialOrder, Polynomial, PrimeChar, Ring};
use proptest::prelude::*;

fn ring(p: u64, order: MonomialOrder) -> Ring {
    Ring::new(PrimeChar::new(p).unwrap(), &["x", "y", "z"], order).unwrap()
}

type Raw = Vec<(i64, [u32; 3])>;

fn raw_poly(max_exp: u32, max_terms: usize) -> impl Strategy<Value = Raw> {
    prop::collection::vec(
        (-10i64..10, [0..=max_exp, 0..=max_exp, 0..=max_exp]),
        0..=max_terms,
    )
}

fn build(r: &Ring, raw: &Raw) -> Polynomial {
    Polynomial::from_terms(r, raw.iter().map(|(c, e)| (*c, Monomial::new(*e))))
}

fn config() -> impl Strategy<Value = Ring> {
    (
        prop_oneof![Just(2u64), Just(3), Just(5), Just(7)],
        prop_oneof![
            Just(MonomialOrder::Grevlex),
            Just(MonomialOrder::Lex),
            Just(MonomialOrder::block(1, MonomialOrder::Grevlex))
        ],
    )
        .prop_map(|(p, o)| ring(p, o))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn ring_axioms(r in config(), a in raw_poly(3, 5), b in raw_poly(3, 5), c in raw_poly(3, 5)) {
        let (f, g, h) = (build(&r, &a), build(&r, &b), build(&r, &c));
        for x in [&f + &g, &f * &g, &(&f * &g) * &h] {
            prop_assert!(x.is_canonical());
        }
        prop_assert_eq!(&f + &g, &g + &f);
        prop_assert_eq!(&f * &g, &g * &f);
        prop_assert_eq!(&(&f + &g) + &h, &f + &(&g + &h));
        prop_assert_eq!(&(&f * &g) * &h, &f * &(&g * &h));
        prop_assert_eq!(&f * &(&g + &h), &(&f * &g) + &(&f * &h));
        prop_assert!((&f - &f).is_zero());
        prop_assert_eq!(&f + &f.neg(), Polynomial::zero(&r));
    }

    #[test]
    fn frobenius_is_a_ring_endomorphism(r in config(), a in raw_poly(3, 4), b in raw_poly(3, 4), e in 0u32..3) {
        let (f, g) = (build(&r, &a), build(&r, &b));
        let fr = |x: &Polynomial| x.frobenius_power(e).unwrap();
        prop_assert_eq!(fr(&(&f + &g)), &fr(&f) + &fr(&g));
        prop_assert_eq!(fr(&(&f * &g)), &fr(&f) * &fr(&g));
    }

    #[test]
    fn frobenius_matches_repeated_multiplication(r in config(), a in raw_poly(2, 3)) {
        let f = build(&r, &a);
        let q = r.p() as u64;
        prop_assert_eq!(f.frobenius_power(1).unwrap(), f.pow(q).unwrap());
        let mut chain = Polynomial::one(&r);
        for _ in 0..q {
            chain = &chain * &f;
        }
        prop_assert_eq!(f.frobenius_power(1).unwrap(), chain);
    }

    #[test]
    fn nu_power_matches_plain_power(r in config(), a in raw_poly(1, 3), n in 0u32..=3) {
        // exponents <= 1 in each of three variables keeps deg(u) <= 3; cap
        // the check at deg(u) <= 2
        let u = build(&r, &a);
        prop_assume!(u.total_degree() <= 2);
        let nu = ffpure::polyring::nu(r.characteristic(), n).to_u64().unwrap();
        let mut plain = Polynomial::one(&r);
        for _ in 0..nu {
            plain = &plain * &u;
        }
        prop_assert_eq!(u.nu_power(n).unwrap(), plain);
    }

    #[test]
    fn display_parse_round_trip(r in config(), a in raw_poly(4, 6)) {
        let f = build(&r, &a);
        prop_assert_eq!(r.parse(&f.to_string()).unwrap(), f);
    }
}
