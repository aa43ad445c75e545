use std::collections::BTreeMap;

use super::RingPresentation;
use crate::error::{Error, Result};
use crate::groebner::{ideal_contains, member, normal_form, Ideal};
use crate::ideal_ops::{bracket_power, colon_ideal, frobenius_maximal, ideal_product, ideal_sum};
use crate::polyring::{Monomial, Polynomial};

/// Outcome of Fedder's criterion: `R` is F-pure at the origin iff
/// `(a^[p] : a) ⊄ n^[p]`.
#[derive(Debug, Clone)]
pub struct FpureReport {
    pub fpure: bool,
    /// `(a^[p] : a)`.
    pub fedder_ideal: Ideal,
    /// An element of the Fedder ideal outside `n^[p]`, present iff `fpure`.
    pub witness_u: Option<Polynomial>,
}

impl FpureReport {
    /// Checks the report against the engine: a witness is a member of the
    /// Fedder ideal outside `n^[p]`, and without one the Fedder ideal sits
    /// inside `n^[p]`.
    pub fn is_consistent(&self) -> Result<bool> {
        let ring = self.fedder_ideal.ring();
        match (&self.witness_u, self.fpure) {
            (Some(u), true) => {
                let np = frobenius_maximal(ring)?;
                Ok(member(u, &self.fedder_ideal)? && !member(u, &np)?)
            }
            (None, false) => ideal_contains(&frobenius_maximal(ring)?, &self.fedder_ideal),
            _ => Ok(false),
        }
    }
}

/// `(a^[p] : a)`.
pub fn fedder_ideal(ring: &RingPresentation) -> Result<Ideal> {
    let a = ring.ideal();
    colon_ideal(&bracket_power(a, 1)?, a)
}

pub fn fedder_test(ring: &RingPresentation) -> Result<FpureReport> {
    let j = fedder_ideal(ring)?;
    // n^[p] is a monomial ideal, so J ⊆ n^[p] iff every basis element is
    let witness_u = j.basis()?.iter().find(|g| !g.in_frobenius_maximal()).cloned();
    let report = FpureReport {
        fpure: witness_u.is_some(),
        fedder_ideal: j,
        witness_u,
    };
    if !report.is_consistent()? {
        return Err(Error::Inconsistent(format!(
            "Fedder report for a = {} disagrees with the engine",
            ring.ideal()
        )));
    }
    Ok(report)
}

/// Coordinates of normal forms over F_p, keyed by monomial.
type Coords = BTreeMap<Monomial, u32>;

fn coords(f: &Polynomial) -> Coords {
    f.terms().iter().map(|t| (t.mono.clone(), t.coeff)).collect()
}

/// Rank over F_p of a list of sparse vectors.
fn rank(vectors: &[Coords], p: u32) -> usize {
    let p = p as u64;
    let inv = |a: u64| {
        let (mut acc, mut base, mut e) = (1u64, a % p, p - 2);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * base % p;
            }
            base = base * base % p;
            e >>= 1;
        }
        acc
    };
    // pivot monomial -> monic row
    let mut rows: BTreeMap<Monomial, BTreeMap<Monomial, u64>> = BTreeMap::new();
    for v in vectors {
        let mut row: BTreeMap<Monomial, u64> = v.iter().map(|(m, c)| (m.clone(), *c as u64)).collect();
        loop {
            let Some((lead, c)) = row.iter().next().map(|(m, c)| (m.clone(), *c)) else {
                break;
            };
            match rows.get(&lead) {
                Some(piv) => {
                    for (m, pc) in piv {
                        let slot = row.entry(m.clone()).or_insert(0);
                        *slot = (*slot + (p - c) * pc) % p;
                    }
                    row.retain(|_, x| *x != 0);
                }
                None => {
                    let k = inv(c);
                    let row = row.into_iter().map(|(m, x)| (m, x * k % p)).collect();
                    rows.insert(lead, row);
                    break;
                }
            }
        }
    }
    rows.len()
}

fn combine(cands: &[Polynomial], coeffs: &[u32]) -> Polynomial {
    let ring = cands[0].ring();
    cands
        .iter()
        .zip(coeffs)
        .filter(|(_, &c)| c != 0)
        .fold(Polynomial::zero(ring), |acc, (g, &c)| &acc + &g.scale(c))
}

/// Elements `u_1, ..., u_t` of `(a^[p] : a) \ n^[p]` whose images minimally
/// generate `T = (a^[p] : a) / a^[p]` at the origin.
///
/// A basis of the F_p-space `T / nT = J / (nJ + a^[p])` is read off the
/// normal forms of the reduced basis of `J`; any chosen lift lying in
/// `n^[p]` is replaced through a deterministic search over F_p-combinations
/// of all candidates that keeps the images independent.
pub fn u_generators(ring: &RingPresentation) -> Result<Vec<Polynomial>> {
    let report = fedder_test(ring)?;
    if !report.fpure {
        return Err(Error::precondition("u_generators requires an F-pure ring"));
    }
    let a = ring.ideal();
    let r = a.ring();
    let p = r.p();
    let j = &report.fedder_ideal;
    let cands: Vec<Polynomial> = j.basis()?.to_vec();

    let w = ideal_sum(&ideal_product(&Ideal::maximal(r), j)?, &bracket_power(a, 1)?)?;
    let w_basis = w.basis()?;
    let images: Vec<Coords> = cands.iter().map(|g| coords(&normal_form(g, w_basis))).collect();

    // greedy maximal independent subset, in basis order
    let mut chosen: Vec<usize> = Vec::new();
    let mut chosen_images: Vec<Coords> = Vec::new();
    for (i, img) in images.iter().enumerate() {
        let mut trial = chosen_images.clone();
        trial.push(img.clone());
        if rank(&trial, p) == trial.len() {
            chosen.push(i);
            chosen_images = trial;
        }
    }
    let t = chosen.len();

    let mut us: Vec<Polynomial> = chosen.iter().map(|&i| cands[i].clone()).collect();
    let k = cands.len();
    for slot in 0..t {
        if !us[slot].in_frobenius_maximal() {
            continue;
        }
        let mut coeffs = vec![0u32; k];
        let mut searched = 0usize;
        let found = loop {
            // next vector in lexicographic order, last coordinate fastest
            let mut pos = k;
            while pos > 0 {
                pos -= 1;
                coeffs[pos] += 1;
                if coeffs[pos] < p {
                    break;
                }
                coeffs[pos] = 0;
            }
            if coeffs.iter().all(|&c| c == 0) {
                break None;
            }
            searched += 1;
            if searched > ring.config().avoidance_cap {
                break None;
            }
            let v = combine(&cands, &coeffs);
            if v.is_zero() || v.in_frobenius_maximal() {
                continue;
            }
            let mut trial = chosen_images.clone();
            trial[slot] = coords(&normal_form(&v, w_basis));
            if rank(&trial, p) == t {
                chosen_images = trial;
                break Some(v);
            }
        };
        match found {
            Some(v) => us[slot] = v,
            None => {
                return Err(Error::AvoidanceExhausted {
                    searched,
                    candidates: k,
                })
            }
        }
    }

    for u in &us {
        if !member(u, j)? || u.in_frobenius_maximal() {
            return Err(Error::Inconsistent(format!(
                "selected u = {u} violates the lift conditions"
            )));
        }
    }
    Ok(us)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groebner::ideal_equal;
    use crate::polyring::{MonomialOrder, PrimeChar, Ring};

    fn ring(p: u64, vars: &[&str]) -> Ring {
        Ring::new(PrimeChar::new(p).unwrap(), vars, MonomialOrder::Grevlex).unwrap()
    }

    #[test]
    fn node_is_fpure() {
        let r = ring(2, &["x", "y"]);
        let rp = RingPresentation::parse(&r, &["x*y"]).unwrap();
        let rep = fedder_test(&rp).unwrap();
        assert!(rep.fpure);
        assert!(ideal_equal(&rep.fedder_ideal, &Ideal::parse(&r, &["x*y"]).unwrap()).unwrap());
        assert_eq!(rep.witness_u.unwrap().to_string(), "x*y");
    }

    #[test]
    fn cusp_is_not_fpure() {
        for p in [2, 3, 5, 7] {
            let r = ring(p, &["x", "y"]);
            let rp = RingPresentation::parse(&r, &["y^2 + x^3"]).unwrap();
            let rep = fedder_test(&rp).unwrap();
            assert!(!rep.fpure, "p = {p}");
            assert!(rep.witness_u.is_none());
        }
    }

    #[test]
    fn triangle_is_fpure() {
        let r = ring(2, &["x", "y", "z"]);
        let rp = RingPresentation::parse(&r, &["x*y", "x*z", "y*z"]).unwrap();
        let rep = fedder_test(&rp).unwrap();
        assert!(rep.fpure);
        assert!(member(&r.parse("x*y*z").unwrap(), &rep.fedder_ideal).unwrap());
    }

    #[test]
    fn u_generator_examples() {
        let r = ring(2, &["x", "y"]);
        let us = u_generators(&RingPresentation::parse(&r, &["x*y"]).unwrap()).unwrap();
        assert_eq!(us, vec![r.parse("x*y").unwrap()]);

        let r = ring(3, &["x", "y"]);
        let us = u_generators(&RingPresentation::parse(&r, &["x"]).unwrap()).unwrap();
        assert_eq!(us, vec![r.parse("x^2").unwrap()]);

        let cusp = RingPresentation::parse(&r, &["y^2 + x^3"]).unwrap();
        assert!(matches!(u_generators(&cusp), Err(Error::Precondition(_))));
    }

    #[test]
    fn rank_over_fp() {
        let r = ring(3, &["x", "y"]);
        let v = |s: &str| coords(&r.parse(s).unwrap());
        assert_eq!(rank(&[v("x + y"), v("2*x + 2*y"), v("y")], 3), 2);
        assert_eq!(rank(&[v("x"), v("y"), v("x*y"), v("x + y + x*y")], 3), 3);
    }
}
