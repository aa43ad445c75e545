//! Brute-force validators that never touch the Gröbner engine.
//!
//! These are test-time cross-checks with explicit scope limits, not decision
//! procedures. Everything here works on raw exponent vectors and dense
//! F_p arithmetic written locally.

use std::collections::{BTreeMap, HashMap};

use crate::error::{Error, Result};
use crate::groebner::Ideal;
use crate::polyring::{Monomial, Polynomial};

/// Total-degree truncation for Macaulay matrices.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub struct DegreeBound(pub u32);

impl DegreeBound {
    /// `2 * maxdeg + 4`, the default used by the randomized agreement tests.
    pub fn heuristic(max_input_degree: u64) -> Self {
        DegreeBound(2 * max_input_degree as u32 + 4)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MacaulayVerdict {
    In,
    NotInUpTo(DegreeBound),
}

/// Cap on `rows * columns` of a Macaulay matrix.
pub const MAX_MATRIX_ENTRIES: usize = 50_000_000;

fn pow_mod(mut base: u64, mut exp: u64, p: u64) -> u64 {
    let mut acc = 1;
    base %= p;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * base % p;
        }
        base = base * base % p;
        exp >>= 1;
    }
    acc
}

/// All exponent vectors in `nvars` variables of total degree `<= d`.
fn monomials_up_to(nvars: usize, d: u32) -> Vec<Vec<u32>> {
    fn rec(prefix: &mut Vec<u32>, left: usize, budget: u32, out: &mut Vec<Vec<u32>>) {
        if left == 0 {
            out.push(prefix.clone());
            return;
        }
        for e in 0..=budget {
            prefix.push(e);
            rec(prefix, left - 1, budget - e, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    rec(&mut Vec::new(), nvars, d, &mut out);
    out
}

fn degree(e: &[u32]) -> u32 {
    e.iter().sum()
}

/// Row-echelon accumulator over F_p. Stored rows are monic at their pivot
/// and zero left of it.
struct Echelon {
    p: u64,
    pivots: Vec<Option<Vec<u64>>>,
}

impl Echelon {
    fn new(p: u64, ncols: usize) -> Self {
        Echelon {
            p,
            pivots: vec![None; ncols],
        }
    }

    /// Reduces `row` by the stored pivots; returns the first surviving column.
    fn reduce(&self, row: &mut [u64]) -> Option<usize> {
        let p = self.p;
        for col in 0..row.len() {
            let c = row[col] % p;
            row[col] = c;
            if c == 0 {
                continue;
            }
            match &self.pivots[col] {
                Some(piv) => {
                    let neg = p - c;
                    for (x, y) in row[col..].iter_mut().zip(&piv[col..]) {
                        if *y != 0 {
                            *x = (*x + neg * y) % p;
                        }
                    }
                }
                None => return Some(col),
            }
        }
        None
    }

    fn insert(&mut self, mut row: Vec<u64>) {
        if let Some(col) = self.reduce(&mut row) {
            let inv = pow_mod(row[col], self.p - 2, self.p);
            for x in row[col..].iter_mut() {
                *x = *x % self.p * inv % self.p;
            }
            self.pivots[col] = Some(row);
        }
    }
}

/// Decides whether `f` is an F_p-combination of `{m·g : deg(m·g) <= D}`.
///
/// `In` is conclusive. `NotInUpTo(D)` only says no certificate of degree
/// `<= D` exists.
pub fn macaulay_member(f: &Polynomial, ideal: &Ideal, bound: DegreeBound) -> Result<MacaulayVerdict> {
    if f.ring() != ideal.ring() {
        return Err(Error::RingMismatch);
    }
    let d = bound.0;
    if f.total_degree() > d as u64 {
        return Err(Error::precondition("deg(f) exceeds the degree bound"));
    }
    if f.is_zero() {
        return Ok(MacaulayVerdict::In);
    }
    let ring = f.ring();
    let p = ring.p() as u64;
    let n = ring.nvars();
    let columns = monomials_up_to(n, d);
    let index: HashMap<&[u32], usize> = columns
        .iter()
        .enumerate()
        .map(|(i, m)| (m.as_slice(), i))
        .collect();

    let mut rows: Vec<Vec<u64>> = Vec::new();
    for g in ideal.generators() {
        let gdeg = g
            .terms()
            .iter()
            .map(|t| degree(t.mono.exponents()))
            .max()
            .unwrap_or(0);
        if gdeg > d {
            continue;
        }
        for m in monomials_up_to(n, d - gdeg) {
            if rows.len().saturating_add(1).saturating_mul(columns.len()) > MAX_MATRIX_ENTRIES {
                return Err(Error::ResourceLimit {
                    what: "Macaulay matrix entries",
                    limit: MAX_MATRIX_ENTRIES,
                });
            }
            let mut row = vec![0u64; columns.len()];
            for t in g.terms() {
                let shifted: Vec<u32> = t.mono.exponents().iter().zip(&m).map(|(a, b)| a + b).collect();
                row[index[shifted.as_slice()]] = t.coeff as u64;
            }
            rows.push(row);
        }
    }

    let mut ech = Echelon::new(p, columns.len());
    for row in rows {
        ech.insert(row);
    }
    let mut target = vec![0u64; columns.len()];
    for t in f.terms() {
        target[index[t.mono.exponents()]] = t.coeff as u64;
    }
    Ok(match ech.reduce(&mut target) {
        None => MacaulayVerdict::In,
        Some(_) => MacaulayVerdict::NotInUpTo(bound),
    })
}

/// Generators of a monomial ideal as exponent vectors; errors on any
/// non-monomial generator.
fn monomial_gens(ideal: &Ideal) -> Result<Vec<Vec<u32>>> {
    ideal
        .generators()
        .iter()
        .map(|g| match g.terms() {
            [t] => Ok(t.mono.exponents().to_vec()),
            _ => Err(Error::NotMonomial),
        })
        .collect()
}

/// Drops every generator divisible by another; the survivors are sorted.
fn minimalize(mut gens: Vec<Vec<u32>>) -> Vec<Vec<u32>> {
    gens.sort();
    gens.dedup();
    let divides = |a: &[u32], b: &[u32]| a.iter().zip(b).all(|(x, y)| x <= y);
    let keep: Vec<bool> = (0..gens.len())
        .map(|i| !(0..gens.len()).any(|j| j != i && divides(&gens[j], &gens[i])))
        .collect();
    gens.into_iter()
        .zip(keep)
        .filter(|(_, k)| *k)
        .map(|(g, _)| g)
        .collect()
}

fn monomial_ideal(ideal: &Ideal, gens: Vec<Vec<u32>>) -> Result<Ideal> {
    let ring = ideal.ring();
    Ideal::new(
        ring,
        minimalize(gens)
            .into_iter()
            .map(|e| Polynomial::monomial(ring, 1, Monomial::new(e))),
    )
}

/// Minimal monomial generators (sorted exponent vectors) of a monomial ideal.
pub fn minimal_monomial_generators(ideal: &Ideal) -> Result<Vec<Monomial>> {
    Ok(minimalize(monomial_gens(ideal)?)
        .into_iter()
        .map(Monomial::new)
        .collect())
}

/// `(I : m)` generated by `g / gcd(g, m)`.
pub fn monomial_colon(ideal: &Ideal, m: &Monomial) -> Result<Ideal> {
    let gens = monomial_gens(ideal)?
        .into_iter()
        .map(|g| {
            g.iter()
                .zip(m.exponents())
                .map(|(a, b)| a.saturating_sub(*b))
                .collect()
        })
        .collect();
    monomial_ideal(ideal, gens)
}

/// `I ∩ J` generated by pairwise lcms.
pub fn monomial_intersect(a: &Ideal, b: &Ideal) -> Result<Ideal> {
    if a.ring() != b.ring() {
        return Err(Error::RingMismatch);
    }
    let (ga, gb) = (monomial_gens(a)?, monomial_gens(b)?);
    let mut gens = Vec::with_capacity(ga.len() * gb.len());
    for x in &ga {
        for y in &gb {
            gens.push(x.iter().zip(y).map(|(u, v)| *u.max(v)).collect());
        }
    }
    monomial_ideal(a, gens)
}

/// `(a^[p] : a)` for a monomial ideal `a`, combinatorially.
pub fn monomial_fedder_ideal(a: &Ideal) -> Result<Ideal> {
    let p = a.ring().p();
    let gens = monomial_gens(a)?;
    if gens.is_empty() {
        return Err(Error::ZeroColon);
    }
    let bracket = monomial_ideal(
        a,
        gens.iter().map(|g| g.iter().map(|e| e * p).collect()).collect(),
    )?;
    let mut acc: Option<Ideal> = None;
    for g in gens {
        let c = monomial_colon(&bracket, &Monomial::new(g))?;
        acc = Some(match acc {
            None => c,
            Some(prev) => monomial_intersect(&prev, &c)?,
        });
    }
    Ok(acc.expect("nonempty"))
}

/// Fedder's criterion for a monomial ideal: some minimal generator of
/// `(a^[p] : a)` has every exponent `< p`.
pub fn monomial_fedder(a: &Ideal) -> Result<bool> {
    let p = a.ring().p();
    let j = monomial_fedder_ideal(a)?;
    Ok(monomial_gens(&j)?.iter().any(|g| g.iter().all(|&e| e < p)))
}

type Dense = BTreeMap<Vec<u32>, u64>;

fn to_dense(f: &Polynomial) -> Dense {
    f.terms()
        .iter()
        .map(|t| (t.mono.exponents().to_vec(), t.coeff as u64))
        .collect()
}

fn dense_mul(a: &Dense, b: &Dense, p: u64, cap: usize) -> Result<Dense> {
    let mut out = Dense::new();
    for (ea, ca) in a {
        for (eb, cb) in b {
            let e: Vec<u32> = ea.iter().zip(eb).map(|(x, y)| x + y).collect();
            let slot = out.entry(e).or_insert(0);
            *slot = (*slot + ca * cb) % p;
        }
    }
    out.retain(|_, c| *c != 0);
    if out.len() > cap {
        return Err(Error::ResourceLimit {
            what: "oracle expansion term count",
            limit: cap,
        });
    }
    Ok(out)
}

/// Long division of `a` by `b` over F_p using lex on raw exponent vectors;
/// `None` when the remainder is nonzero.
fn dense_div(a: &Dense, b: &Dense, p: u64) -> Option<Dense> {
    let (lead_b, lc_b) = b.iter().next_back()?;
    let inv = pow_mod(*lc_b, p - 2, p);
    let mut rem = a.clone();
    let mut quot = Dense::new();
    while let Some((lead, lc)) = rem.iter().next_back().map(|(e, c)| (e.clone(), *c)) {
        let q: Vec<u32> = lead
            .iter()
            .zip(lead_b)
            .map(|(x, y)| x.checked_sub(*y))
            .collect::<Option<_>>()?;
        let c = lc * inv % p;
        *quot.entry(q.clone()).or_insert(0) += c;
        for (e, cb) in b {
            let shifted: Vec<u32> = e.iter().zip(&q).map(|(x, y)| x + y).collect();
            let slot = rem.entry(shifted).or_insert(0);
            *slot = (*slot + p - c * cb % p) % p;
        }
        rem.retain(|_, v| *v != 0);
    }
    Some(quot)
}

/// Given `fq = f^k` with `k >= 1`, returns `f^(k-1)`. In a unique
/// factorization domain this generates `((f^k) : f)`.
pub fn principal_colon(fq: &Polynomial, f: &Polynomial) -> Result<Polynomial> {
    if fq.ring() != f.ring() {
        return Err(Error::RingMismatch);
    }
    if f.is_zero() || f.is_unit() || fq.is_zero() {
        return Err(Error::NotAPower);
    }
    let p = f.ring().p() as u64;
    let base = to_dense(f);
    let first = dense_div(&to_dense(fq), &base, p).ok_or(Error::NotAPower)?;
    // the quotient must itself be a power f^(k-1), k-1 >= 0
    let mut q = first.clone();
    let one: Vec<u32> = vec![0; f.ring().nvars()];
    loop {
        if q.len() == 1 && q.contains_key(&one) {
            if q[&one] != 1 {
                return Err(Error::NotAPower);
            }
            break;
        }
        q = dense_div(&q, &base, p).ok_or(Error::NotAPower)?;
    }
    Ok(Polynomial::from_terms(
        f.ring(),
        first.into_iter().map(|(e, c)| (c as i64, Monomial::new(e))),
    ))
}

/// Fedder's criterion for `a = (f)`: expands `f^(p-1)` directly and looks
/// for a term with every exponent `<= p - 1`.
pub fn hypersurface_fedder(f: &Polynomial) -> Result<bool> {
    if f.is_zero() || f.is_unit() || f.constant_coeff() != 0 {
        return Err(Error::precondition(
            "f must be a nonzero non-unit in the maximal ideal",
        ));
    }
    const CAP: usize = 5_000_000;
    let p = f.ring().p() as u64;
    let base = to_dense(f);
    let mut acc = base.clone();
    for _ in 1..p - 1 {
        acc = dense_mul(&acc, &base, p, CAP)?;
    }
    Ok(acc.keys().any(|e| e.iter().all(|&x| (x as u64) < p)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyring::{MonomialOrder, PrimeChar, Ring};

    fn ring(p: u64, vars: &[&str]) -> Ring {
        Ring::new(PrimeChar::new(p).unwrap(), vars, MonomialOrder::Grevlex).unwrap()
    }

    fn ideal(r: &Ring, gens: &[&str]) -> Ideal {
        Ideal::parse(r, gens).unwrap()
    }

    fn mons(r: &Ring, gens: &[&str]) -> Vec<Monomial> {
        minimal_monomial_generators(&ideal(r, gens)).unwrap()
    }

    #[test]
    fn macaulay_examples() {
        let r = ring(3, &["x", "y"]);
        let p = |s| r.parse(s).unwrap();
        assert_eq!(
            macaulay_member(&p("x^2*y"), &ideal(&r, &["x*y"]), DegreeBound(3)).unwrap(),
            MacaulayVerdict::In
        );
        assert_eq!(
            macaulay_member(&p("x"), &ideal(&r, &["x^2"]), DegreeBound(6)).unwrap(),
            MacaulayVerdict::NotInUpTo(DegreeBound(6))
        );
        assert_eq!(
            macaulay_member(&p("1"), &ideal(&r, &["x*y - 1", "x^2"]), DegreeBound(6)).unwrap(),
            MacaulayVerdict::In
        );
        // the certificate y^2 x^2 - (xy + 1)(xy - 1) needs degree 4
        assert_eq!(
            macaulay_member(&p("1"), &ideal(&r, &["x*y - 1", "x^2"]), DegreeBound(3)).unwrap(),
            MacaulayVerdict::NotInUpTo(DegreeBound(3))
        );
    }

    #[test]
    fn monomial_ops() {
        let r = ring(2, &["x", "y", "z"]);
        let x = Monomial::new([1, 0, 0]);
        let got = monomial_colon(&ideal(&r, &["x^2", "y^2"]), &x).unwrap();
        assert_eq!(
            minimal_monomial_generators(&got).unwrap(),
            mons(&r, &["x", "y^2"])
        );
        let got = monomial_intersect(&ideal(&r, &["x"]), &ideal(&r, &["y"])).unwrap();
        assert_eq!(minimal_monomial_generators(&got).unwrap(), mons(&r, &["x*y"]));
        let xyz = Monomial::new([1, 1, 1]);
        let got = monomial_colon(&ideal(&r, &["x*y", "x*z", "y*z"]), &xyz).unwrap();
        assert_eq!(minimal_monomial_generators(&got).unwrap(), vec![Monomial::one(3)]);
        assert_eq!(
            monomial_colon(&ideal(&r, &["x + y"]), &x).unwrap_err(),
            Error::NotMonomial
        );
    }

    #[test]
    fn principal_colons() {
        let r = ring(3, &["x", "y"]);
        let p = |s| r.parse(s).unwrap();
        assert_eq!(principal_colon(&p("x^2*y^2"), &p("x*y")).unwrap(), p("x*y"));
        let f = p("y^2 + x^3");
        let f3 = f.pow(3).unwrap();
        let q = principal_colon(&f3, &f).unwrap();
        assert_eq!(q, f.pow(2).unwrap());
        assert_eq!(&q * &f, f3);
        assert_eq!(principal_colon(&f, &f).unwrap(), p("1"));
        assert_eq!(principal_colon(&p("x^2 + y"), &f), Err(Error::NotAPower));
        assert_eq!(principal_colon(&(&f3 * &p("x")), &f), Err(Error::NotAPower));
    }

    #[test]
    fn hypersurface_examples() {
        let r5 = ring(5, &["x", "y"]);
        assert!(hypersurface_fedder(&r5.parse("x*y").unwrap()).unwrap());
        let r7 = ring(7, &["x", "y"]);
        assert!(!hypersurface_fedder(&r7.parse("y^2 + x^3").unwrap()).unwrap());
        let r2 = ring(2, &["x", "y"]);
        assert!(hypersurface_fedder(&r2.parse("x").unwrap()).unwrap());
        assert!(hypersurface_fedder(&r2.parse("x + 1").unwrap()).is_err());
    }

    #[test]
    fn cusp_binomial_expansion() {
        // (y^2 + x^3)^(p-1) = sum_k C(p-1, k) x^(3(p-1-k)) y^(2k); every term
        // has x-exponent >= p or y-exponent >= p
        for p in [2u64, 3, 5, 7] {
            let r = ring(p, &["x", "y"]);
            let f = r.parse("y^2 + x^3").unwrap();
            assert!(!hypersurface_fedder(&f).unwrap(), "p = {p}");
            for k in 0..p {
                let (ex, ey) = (3 * (p - 1 - k), 2 * k);
                assert!(ex >= p || ey >= p);
            }
        }
    }

    #[test]
    fn squarefree_monomial_fedder() {
        let r = ring(2, &["x", "y", "z"]);
        let a = ideal(&r, &["x*y", "x*z", "y*z"]);
        let j = monomial_fedder_ideal(&a).unwrap();
        assert!(minimal_monomial_generators(&j)
            .unwrap()
            .contains(&Monomial::new([1, 1, 1])));
        assert!(monomial_fedder(&a).unwrap());
    }
}
