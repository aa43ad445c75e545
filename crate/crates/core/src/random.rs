//! Random polynomials and ideals for randomized identity checks.

use rand::Rng;

use crate::groebner::Ideal;
use crate::polyring::{Monomial, Polynomial, Ring};

/// Shape of randomly generated ideals.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Shape {
    pub max_gens: usize,
    pub max_terms: usize,
    pub max_degree: u32,
    /// Whether terms of degree zero may appear.
    pub constants: bool,
}

impl Default for Shape {
    fn default() -> Self {
        Shape {
            max_gens: 2,
            max_terms: 3,
            max_degree: 4,
            constants: false,
        }
    }
}

pub fn random_monomial<R: Rng + ?Sized>(
    ring: &Ring,
    rng: &mut R,
    max_degree: u32,
    constants: bool,
) -> Monomial {
    let n = ring.nvars();
    let lo = if constants || n == 0 { 0 } else { 1 };
    let deg = rng.gen_range(lo..=max_degree.max(lo));
    let mut exps = vec![0u32; n];
    for _ in 0..deg {
        exps[rng.gen_range(0..n)] += 1;
    }
    Monomial::new(exps)
}

/// A nonzero polynomial with up to `shape.max_terms` terms.
pub fn random_polynomial<R: Rng + ?Sized>(ring: &Ring, rng: &mut R, shape: &Shape) -> Polynomial {
    loop {
        let nterms = rng.gen_range(1..=shape.max_terms.max(1));
        let terms = (0..nterms).map(|_| {
            let c = rng.gen_range(1..ring.p()) as i64;
            (c, random_monomial(ring, rng, shape.max_degree, shape.constants))
        });
        let f = Polynomial::from_terms(ring, terms.collect::<Vec<_>>());
        if !f.is_zero() {
            return f;
        }
    }
}

/// A nonzero ideal with `1..=shape.max_gens` generators.
pub fn random_ideal<R: Rng + ?Sized>(ring: &Ring, rng: &mut R, shape: &Shape) -> Ideal {
    let ngens = rng.gen_range(1..=shape.max_gens.max(1));
    let gens = (0..ngens)
        .map(|_| random_polynomial(ring, rng, shape))
        .collect::<Vec<_>>();
    Ideal::new(ring, gens).expect("generators built in this ring")
}

/// A nonzero monomial ideal.
pub fn random_monomial_ideal<R: Rng + ?Sized>(ring: &Ring, rng: &mut R, shape: &Shape) -> Ideal {
    let ngens = rng.gen_range(1..=shape.max_gens.max(1));
    let gens = (0..ngens)
        .map(|_| {
            Polynomial::monomial(
                ring,
                1,
                random_monomial(ring, rng, shape.max_degree, shape.constants),
            )
        })
        .collect::<Vec<_>>();
    Ideal::new(ring, gens).expect("generators built in this ring")
}
