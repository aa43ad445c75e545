use ffpure::fsing::{fedder_ideal, verify_identities_with, IdentityConfig, RingPresentation};
use ffpure::groebner::{ideal_contains, ideal_equal, member, Ideal};
use ffpure::ideal_ops::{
    bracket_power, colon, colon_by_elimination, colon_ideal, ideal_product, ideal_sum, intersect,
};
use ffpure::oracle::{minimal_monomial_generators, monomial_colon, monomial_intersect};
use ffpure::random::{random_ideal, random_monomial, random_monomial_ideal, random_polynomial, Shape};
use ffpure::{MonomialOrder, Polynomial, PrimeChar, Ring};
use rand::rngs::StdRng;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};

const VARS: [&str; 3] = ["x", "y", "z"];

fn ring(p: u64, n: usize) -> Ring {
    Ring::new(PrimeChar::new(p).unwrap(), &VARS[..n], MonomialOrder::Grevlex).unwrap()
}

fn random_ring(rng: &mut StdRng) -> Ring {
    ring(*[2u64, 3, 5].choose(rng).unwrap(), rng.gen_range(1..=3))
}

const SMALL: Shape = Shape {
    max_gens: 3,
    max_terms: 2,
    max_degree: 3,
    constants: false,
};

#[test]
fn colon_and_intersection_are_correct() {
    let mut rng = StdRng::seed_from_u64(10);
    for _ in 0..100 {
        let r = random_ring(&mut rng);
        let a = random_ideal(&r, &mut rng, &SMALL);
        let b = random_ideal(&r, &mut rng, &SMALL);
        let g = random_polynomial(&r, &mut rng, &SMALL);

        let meet = intersect(&a, &b).unwrap();
        for h in meet.basis().unwrap() {
            assert!(member(h, &a).unwrap() && member(h, &b).unwrap());
        }
        // the product always lies in the intersection
        assert!(ideal_contains(&meet, &ideal_product(&a, &b).unwrap()).unwrap());

        let q = colon(&a, &g).unwrap();
        assert!(
            ideal_equal(&q, &colon_by_elimination(&a, &g).unwrap()).unwrap(),
            "a = {a}, g = {g}"
        );
        assert!(ideal_contains(&q, &a).unwrap());
        for h in q.basis().unwrap() {
            assert!(member(&(h * &g), &a).unwrap());
        }
        // maximality on a random probe
        let f = random_polynomial(&r, &mut rng, &SMALL);
        assert_eq!(member(&(&f * &g), &a).unwrap(), member(&f, &q).unwrap());
        // (a : g) = (a : (g) + a)
        let widened = ideal_sum(&Ideal::new(&r, [g.clone()]).unwrap(), &a).unwrap();
        assert!(ideal_equal(&q, &colon_ideal(&a, &widened).unwrap()).unwrap());
    }
}

#[test]
fn intersection_basics() {
    let r = ring(2, 2);
    let a = Ideal::parse(&r, &["x^2", "y"]).unwrap();
    let got = intersect(&a, &Ideal::parse(&r, &["x"]).unwrap()).unwrap();
    assert!(ideal_equal(&got, &Ideal::parse(&r, &["x^2", "x*y"]).unwrap()).unwrap());
    assert!(ideal_equal(&intersect(&a, &a).unwrap(), &a).unwrap());
    assert!(intersect(&a, &Ideal::zero(&r)).unwrap().is_zero());
}

#[test]
fn monomial_operations_agree_with_combinatorics() {
    let mut rng = StdRng::seed_from_u64(11);
    let shape = Shape {
        max_gens: 4,
        max_terms: 1,
        max_degree: 5,
        constants: false,
    };
    for _ in 0..120 {
        let r = random_ring(&mut rng);
        let a = random_monomial_ideal(&r, &mut rng, &shape);
        let b = random_monomial_ideal(&r, &mut rng, &shape);
        let m = random_monomial(&r, &mut rng, 4, true);
        let g = Polynomial::monomial(&r, 1, m.clone());

        let engine = colon(&a, &g).unwrap();
        let oracle = monomial_colon(&a, &m).unwrap();
        assert_eq!(
            minimal_monomial_generators(&engine).unwrap(),
            minimal_monomial_generators(&oracle).unwrap(),
            "({a} : {g})"
        );

        let engine = intersect(&a, &b).unwrap();
        let oracle = monomial_intersect(&a, &b).unwrap();
        assert_eq!(
            minimal_monomial_generators(&engine).unwrap(),
            minimal_monomial_generators(&oracle).unwrap(),
            "{a} ∩ {b}"
        );
    }
}

#[test]
fn bracket_power_is_multiplicative_in_the_exponent() {
    let mut rng = StdRng::seed_from_u64(12);
    for _ in 0..40 {
        let r = random_ring(&mut rng);
        let a = random_ideal(&r, &mut rng, &SMALL);
        let twice = bracket_power(&bracket_power(&a, 1).unwrap(), 1).unwrap();
        assert!(ideal_equal(&twice, &bracket_power(&a, 2).unwrap()).unwrap());
        assert!(ideal_equal(&bracket_power(&a, 0).unwrap(), &a).unwrap());
        assert!(ideal_contains(&a, &twice).unwrap());
    }
}

#[test]
fn frobenius_identities_on_random_pairs() {
    let config = IdentityConfig {
        seed: 0xf00d,
        shape: Shape {
            max_gens: 2,
            max_terms: 2,
            max_degree: 3,
            constants: false,
        },
    };
    for p in [2, 3, 5] {
        for n in 1..=3 {
            let r = ring(p, n);
            let rp = RingPresentation::parse(&r, &[VARS[0]]).unwrap();
            let rep = verify_identities_with(&rp, 25, &config).unwrap();
            assert!(rep.all_passed(), "p = {p}, n = {n}: {rep:?}");
        }
    }
}

/// For an associated prime `q` of `a`, `(a^[p] : a) ⊆ (q^[p] : q)`. The
/// associated primes are listed by hand.
#[test]
fn fedder_ideal_shrinks_into_associated_primes() {
    let catalog: &[(&[&str], &[&[&str]])] = &[
        (&["x*y"], &[&["x"], &["y"]]),
        (&["x^2*y"], &[&["x"], &["y"]]),
        (&["x*y", "x*z"], &[&["x"], &["y", "z"]]),
        (&["x^2", "x*y"], &[&["x"], &["x", "y"]]),
        (&["x*y*z"], &[&["x"], &["y"], &["z"]]),
        (&["x*y", "x*z", "y*z"], &[&["x", "y"], &["x", "z"], &["y", "z"]]),
        (&["y^2 - x^3"], &[&["y^2 - x^3"]]),
        (&["x^2 + x*y"], &[&["x"], &["x + y"]]),
    ];
    for p in [2, 3, 5] {
        let r = ring(p, 3);
        for (gens, primes) in catalog {
            let a = RingPresentation::parse(&r, gens).unwrap();
            let j = fedder_ideal(&a).unwrap();
            for q in *primes {
                let q = RingPresentation::parse(&r, q).unwrap();
                let jq = fedder_ideal(&q).unwrap();
                assert!(
                    ideal_contains(&jq, &j).unwrap(),
                    "p = {p}, a = {gens:?}, q = {q:?}",
                    q = q.ideal()
                );
            }
        }
    }
}
