use std::cmp::Ordering;
use std::fmt;
use std::hash::{Hash, Hasher};

use super::{Monomial, Ring};
use crate::error::{Error, Result};

/// A nonzero coefficient in `[1, p)` attached to a monomial.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Term {
    pub coeff: u32,
    pub mono: Monomial,
}

/// A polynomial in canonical form: terms strictly descending in the ring's
/// monomial order, no zero coefficients. The zero polynomial has no terms.
#[derive(Clone)]
pub struct Polynomial {
    ring: Ring,
    terms: Vec<Term>,
}

impl PartialEq for Polynomial {
    fn eq(&self, other: &Self) -> bool {
        self.terms == other.terms && self.ring == other.ring
    }
}

impl Eq for Polynomial {}

impl Hash for Polynomial {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.terms.hash(state);
    }
}

impl Polynomial {
    pub fn zero(ring: &Ring) -> Self {
        Polynomial {
            ring: ring.clone(),
            terms: Vec::new(),
        }
    }

    pub fn one(ring: &Ring) -> Self {
        Self::constant(ring, 1)
    }

    pub fn constant(ring: &Ring, c: i64) -> Self {
        Self::monomial(ring, ring.characteristic().reduce(c), Monomial::one(ring.nvars()))
    }

    /// `coeff * mono`, with `coeff` reduced mod p.
    pub fn monomial(ring: &Ring, coeff: u32, mono: Monomial) -> Self {
        assert_eq!(mono.nvars(), ring.nvars(), "monomial arity does not match ring");
        let coeff = coeff % ring.p();
        let terms = if coeff == 0 {
            Vec::new()
        } else {
            vec![Term { coeff, mono }]
        };
        Polynomial {
            ring: ring.clone(),
            terms,
        }
    }

    /// Builds a polynomial from arbitrary (coefficient, monomial) pairs:
    /// coefficients are reduced mod p, like terms combined, zeros dropped.
    pub fn from_terms(ring: &Ring, terms: impl IntoIterator<Item = (i64, Monomial)>) -> Self {
        let p = ring.characteristic();
        let raw = terms
            .into_iter()
            .map(|(c, mono)| {
                assert_eq!(mono.nvars(), ring.nvars(), "monomial arity does not match ring");
                Term {
                    coeff: p.reduce(c),
                    mono,
                }
            })
            .collect();
        Self::normalize(ring, raw)
    }

    fn normalize(ring: &Ring, mut raw: Vec<Term>) -> Self {
        let order = ring.order();
        let p = ring.characteristic();
        raw.sort_by(|a, b| order.compare(b.mono.exponents(), a.mono.exponents()));
        let mut terms: Vec<Term> = Vec::with_capacity(raw.len());
        for t in raw {
            match terms.last_mut() {
                Some(last) if last.mono == t.mono => last.coeff = p.add(last.coeff, t.coeff),
                _ => {
                    if let Some(last) = terms.last() {
                        if last.coeff == 0 {
                            terms.pop();
                        }
                    }
                    terms.push(t)
                }
            }
        }
        if terms.last().is_some_and(|t| t.coeff == 0) {
            terms.pop();
        }
        Polynomial {
            ring: ring.clone(),
            terms,
        }
    }

    pub(crate) fn from_sorted(ring: &Ring, terms: Vec<Term>) -> Self {
        let poly = Polynomial {
            ring: ring.clone(),
            terms,
        };
        debug_assert!(poly.is_canonical());
        poly
    }

    /// Strictly descending, nonzero coefficients in `[1, p)`.
    pub fn is_canonical(&self) -> bool {
        let order = self.ring.order();
        self.terms
            .iter()
            .all(|t| t.coeff != 0 && t.coeff < self.ring.p() && t.mono.nvars() == self.ring.nvars())
            && self
                .terms
                .windows(2)
                .all(|w| order.compare(w[0].mono.exponents(), w[1].mono.exponents()) == Ordering::Greater)
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn terms(&self) -> &[Term] {
        &self.terms
    }

    pub(crate) fn pop_leading(&mut self) -> Option<Term> {
        (!self.terms.is_empty()).then(|| self.terms.remove(0))
    }

    pub fn into_terms(self) -> Vec<Term> {
        self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Nonzero constant.
    pub fn is_unit(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].mono.is_one()
    }

    pub fn is_one(&self) -> bool {
        self.is_unit() && self.terms[0].coeff == 1
    }

    pub fn is_monomial(&self) -> bool {
        self.terms.len() == 1
    }

    pub fn leading_term(&self) -> Option<&Term> {
        self.terms.first()
    }

    pub fn leading_monomial(&self) -> Option<&Monomial> {
        self.terms.first().map(|t| &t.mono)
    }

    pub fn leading_coeff(&self) -> u32 {
        self.terms.first().map_or(0, |t| t.coeff)
    }

    /// Coefficient of `mono`, zero when absent.
    pub fn coeff_of(&self, mono: &Monomial) -> u32 {
        let order = self.ring.order();
        self.terms
            .binary_search_by(|t| order.compare(mono.exponents(), t.mono.exponents()))
            .map_or(0, |i| self.terms[i].coeff)
    }

    /// Total degree; zero for the zero polynomial.
    pub fn total_degree(&self) -> u64 {
        self.terms.iter().map(|t| t.mono.degree()).max().unwrap_or(0)
    }

    pub fn constant_coeff(&self) -> u32 {
        self.terms
            .last()
            .filter(|t| t.mono.is_one())
            .map_or(0, |t| t.coeff)
    }

    fn check_ring(&self, other: &Polynomial) -> Result<()> {
        if self.ring == other.ring {
            Ok(())
        } else {
            Err(Error::RingMismatch)
        }
    }

    pub fn try_add(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_ring(other)?;
        Ok(self.merge(other, 1))
    }

    pub fn try_sub(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_ring(other)?;
        Ok(self.merge(other, self.ring.p() - 1))
    }

    /// `self + scale * other` by a sorted merge.
    fn merge(&self, other: &Polynomial, scale: u32) -> Polynomial {
        let p = self.ring.characteristic();
        let order = self.ring.order();
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        let (a, b) = (&self.terms, &other.terms);
        while i < a.len() && j < b.len() {
            match order.compare(a[i].mono.exponents(), b[j].mono.exponents()) {
                Ordering::Greater => {
                    out.push(a[i].clone());
                    i += 1;
                }
                Ordering::Less => {
                    out.push(Term {
                        coeff: p.mul(b[j].coeff, scale),
                        mono: b[j].mono.clone(),
                    });
                    j += 1;
                }
                Ordering::Equal => {
                    let c = p.add(a[i].coeff, p.mul(b[j].coeff, scale));
                    if c != 0 {
                        out.push(Term {
                            coeff: c,
                            mono: a[i].mono.clone(),
                        });
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&a[i..]);
        out.extend(b[j..].iter().map(|t| Term {
            coeff: p.mul(t.coeff, scale),
            mono: t.mono.clone(),
        }));
        if scale == 0 {
            out.retain(|t| t.coeff != 0);
        }
        Polynomial::from_sorted(&self.ring, out)
    }

    /// `self - coeff * mono * g`, where the result's leading term is expected
    /// to cancel. Used by the division algorithm.
    pub(crate) fn sub_term_multiple(&self, coeff: u32, mono: &Monomial, g: &Polynomial) -> Polynomial {
        let p = self.ring.characteristic();
        let order = self.ring.order();
        let neg = p.neg(coeff);
        let mut out = Vec::with_capacity(self.terms.len() + g.terms.len());
        let a = &self.terms;
        let mut i = 0;
        for t in &g.terms {
            // shifting cannot overflow: mono * lm(g) divides a term of self
            let m = t.mono.checked_mul(mono).expect("exponent overflow in reduction");
            let c = p.mul(t.coeff, neg);
            while i < a.len() && order.compare(a[i].mono.exponents(), m.exponents()) == Ordering::Greater {
                out.push(a[i].clone());
                i += 1;
            }
            if i < a.len() && a[i].mono == m {
                let s = p.add(a[i].coeff, c);
                if s != 0 {
                    out.push(Term { coeff: s, mono: m });
                }
                i += 1;
            } else {
                out.push(Term { coeff: c, mono: m });
            }
        }
        out.extend_from_slice(&a[i..]);
        Polynomial::from_sorted(&self.ring, out)
    }

    pub fn neg(&self) -> Polynomial {
        self.scale(self.ring.p() - 1)
    }

    /// Multiplies every coefficient by `c` (reduced mod p).
    pub fn scale(&self, c: u32) -> Polynomial {
        let p = self.ring.characteristic();
        let c = c % p.get();
        if c == 0 {
            return Polynomial::zero(&self.ring);
        }
        let terms = self
            .terms
            .iter()
            .map(|t| Term {
                coeff: p.mul(t.coeff, c),
                mono: t.mono.clone(),
            })
            .collect();
        Polynomial::from_sorted(&self.ring, terms)
    }

    /// Scales so the leading coefficient is 1. Zero stays zero.
    pub fn monic(&self) -> Polynomial {
        match self.leading_coeff() {
            0 | 1 => self.clone(),
            lc => self.scale(self.ring.characteristic().inv(lc)),
        }
    }

    pub fn mul_term(&self, coeff: u32, mono: &Monomial) -> Result<Polynomial> {
        let p = self.ring.characteristic();
        let coeff = coeff % p.get();
        if coeff == 0 {
            return Ok(Polynomial::zero(&self.ring));
        }
        let terms = self
            .terms
            .iter()
            .map(|t| {
                Ok(Term {
                    coeff: p.mul(t.coeff, coeff),
                    mono: t.mono.checked_mul(mono)?,
                })
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Polynomial::from_sorted(&self.ring, terms))
    }

    pub fn try_mul(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_ring(other)?;
        if self.is_zero() || other.is_zero() {
            return Ok(Polynomial::zero(&self.ring));
        }
        let (small, large) = if self.terms.len() <= other.terms.len() {
            (self, other)
        } else {
            (other, self)
        };
        if small.terms.len() == 1 {
            let t = &small.terms[0];
            return large.mul_term(t.coeff, &t.mono);
        }
        let p = self.ring.characteristic();
        let mut raw = Vec::with_capacity(self.terms.len() * other.terms.len());
        for a in &small.terms {
            for b in &large.terms {
                raw.push(Term {
                    coeff: p.mul(a.coeff, b.coeff),
                    mono: a.mono.checked_mul(&b.mono)?,
                });
            }
        }
        Ok(Polynomial::normalize(&self.ring, raw))
    }

    /// `self^k` by repeated squaring.
    pub fn pow(&self, mut k: u64) -> Result<Polynomial> {
        let mut acc = Polynomial::one(&self.ring);
        let mut base = self.clone();
        while k > 0 {
            if k & 1 == 1 {
                acc = acc.try_mul(&base)?;
            }
            k >>= 1;
            if k > 0 {
                base = base.try_mul(&base)?;
            }
        }
        Ok(acc)
    }

    /// `self^(p^e)`, computed term-wise: exponents scale by `p^e` and
    /// coefficients are fixed by Frobenius on F_p.
    pub fn frobenius_power(&self, e: u32) -> Result<Polynomial> {
        let q = (self.ring.p() as u64)
            .checked_pow(e)
            .filter(|&q| q <= u32::MAX as u64)
            .ok_or(Error::ExponentOverflow)? as u32;
        let terms = self
            .terms
            .iter()
            .map(|t| {
                Ok(Term {
                    coeff: t.coeff,
                    mono: t.mono.scale(q)?,
                })
            })
            .collect::<Result<Vec<_>>>()?;
        // scaling all exponents by q preserves lex, grevlex and block orders
        Ok(Polynomial::from_sorted(&self.ring, terms))
    }

    /// `self^(nu_n)` with `nu_n = 1 + p + ... + p^(n-1)`, via
    /// `u^(nu_(k+1)) = u * (u^(nu_k))^p`.
    pub fn nu_power(&self, n: u32) -> Result<Polynomial> {
        let mut acc = Polynomial::one(&self.ring);
        for _ in 0..n {
            acc = self.try_mul(&acc.frobenius_power(1)?)?;
        }
        Ok(acc)
    }

    /// Formal partial derivative with respect to variable `var`.
    pub fn derivative(&self, var: usize) -> Polynomial {
        let p = self.ring.characteristic();
        let raw = self
            .terms
            .iter()
            .filter_map(|t| {
                let e = t.mono.exponents()[var];
                let c = p.mul(t.coeff, e % p.get());
                (c != 0).then(|| {
                    let mut exps = t.mono.exponents().to_vec();
                    exps[var] -= 1;
                    Term {
                        coeff: c,
                        mono: Monomial::new(exps),
                    }
                })
            })
            .collect();
        Polynomial::normalize(&self.ring, raw)
    }

    /// `self / g` when `g` divides `self` exactly, `None` otherwise.
    pub fn div_exact(&self, g: &Polynomial) -> Result<Option<Polynomial>> {
        self.check_ring(g)?;
        let Some(lt_g) = g.leading_term() else {
            return Err(Error::precondition("division by zero polynomial"));
        };
        let p = self.ring.characteristic();
        let inv = p.inv(lt_g.coeff);
        let mut rem = self.clone();
        let mut quotient = Vec::new();
        while let Some(lt) = rem.leading_term() {
            let Some(m) = lt.mono.div(&lt_g.mono) else {
                return Ok(None);
            };
            let c = p.mul(lt.coeff, inv);
            rem = rem.sub_term_multiple(c, &m, g);
            quotient.push(Term { coeff: c, mono: m });
        }
        // quotient terms come out in descending order
        Ok(Some(Polynomial::from_sorted(&self.ring, quotient)))
    }

    /// Re-expresses `self` in `ring`, mapping each exponent vector through
    /// `map`. Coefficients carry over; the result is re-sorted.
    pub fn map_into(&self, ring: &Ring, map: impl Fn(&[u32]) -> Monomial) -> Polynomial {
        debug_assert_eq!(ring.p(), self.ring.p());
        let raw = self
            .terms
            .iter()
            .map(|t| Term {
                coeff: t.coeff,
                mono: map(t.mono.exponents()),
            })
            .collect();
        Polynomial::normalize(ring, raw)
    }

    /// Same polynomial viewed in a ring with identical variables but another
    /// order (or limits).
    pub fn reorder(&self, ring: &Ring) -> Result<Polynomial> {
        if ring.vars() != self.ring.vars() || ring.p() != self.ring.p() {
            return Err(Error::RingMismatch);
        }
        Ok(self.map_into(ring, |e| Monomial::new(e.iter().copied())))
    }

    /// Whether every term has some exponent `>= p`, i.e. membership in the
    /// Frobenius power `(x_1^p, ..., x_n^p)` of the homogeneous maximal ideal.
    pub fn in_frobenius_maximal(&self) -> bool {
        let p = self.ring.p();
        self.terms
            .iter()
            .all(|t| t.mono.exponents().iter().any(|&e| e >= p))
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let vars = self.ring.vars();
        for (i, t) in self.terms.iter().enumerate() {
            if i > 0 {
                f.write_str(" + ")?;
            }
            let mut first = true;
            if t.coeff != 1 || t.mono.is_one() {
                write!(f, "{}", t.coeff)?;
                first = false;
            }
            for (v, &e) in vars.iter().zip(t.mono.exponents()) {
                if e == 0 {
                    continue;
                }
                if !first {
                    f.write_str("*")?;
                }
                first = false;
                f.write_str(v)?;
                if e > 1 {
                    write!(f, "^{e}")?;
                }
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Polynomial({self})")
    }
}

// Operator sugar for polynomials known to share a ring. Mismatched rings
// or exponent overflow panic; use the `try_*` methods to handle them.
macro_rules! binop {
    ($trait:ident, $method:ident, $try:ident) => {
        impl std::ops::$trait<&Polynomial> for &Polynomial {
            type Output = Polynomial;
            fn $method(self, rhs: &Polynomial) -> Polynomial {
                self.$try(rhs)
                    .unwrap_or_else(|e| panic!("{}: {e}", stringify!($method)))
            }
        }
        impl std::ops::$trait<Polynomial> for Polynomial {
            type Output = Polynomial;
            fn $method(self, rhs: Polynomial) -> Polynomial {
                (&self).$method(&rhs)
            }
        }
    };
}

binop!(Add, add, try_add);
binop!(Sub, sub, try_sub);
binop!(Mul, mul, try_mul);

impl std::ops::Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        Polynomial::neg(self)
    }
}
