//! Multivariate polynomials over a prime field F_p.
//!
//! A [`Ring`] fixes the characteristic, the variable names and the monomial
//! order; every [`Polynomial`] keeps its terms sorted strictly descending in
//! that order, so structural equality is ideal-free equality of polynomials.

mod monomial;
mod nu;
mod order;
mod parse;
mod poly;

use std::fmt;
use std::sync::Arc;

pub use monomial::Monomial;
pub use nu::{nu, NuValue};
pub use order::MonomialOrder;
pub use poly::{Polynomial, Term};

use crate::error::{Error, Result};
use crate::groebner::Limits;

/// Largest supported characteristic (exclusive).
pub const MAX_CHARACTERISTIC: u64 = 1 << 16;

/// A prime characteristic `p < 2^16`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct PrimeChar(u32);

impl PrimeChar {
    pub fn new(p: u64) -> Result<Self> {
        if p >= MAX_CHARACTERISTIC {
            return Err(Error::CharacteristicTooLarge(p));
        }
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        Ok(PrimeChar(p as u32))
    }

    pub fn get(self) -> u32 {
        self.0
    }

    pub(crate) fn mul(self, a: u32, b: u32) -> u32 {
        ((a as u64 * b as u64) % self.0 as u64) as u32
    }

    pub(crate) fn add(self, a: u32, b: u32) -> u32 {
        let s = a + b;
        if s >= self.0 {
            s - self.0
        } else {
            s
        }
    }

    pub(crate) fn neg(self, a: u32) -> u32 {
        if a == 0 {
            0
        } else {
            self.0 - a
        }
    }

    pub(crate) fn inv(self, a: u32) -> u32 {
        debug_assert!(!a.is_multiple_of(self.0));
        // extended Euclid on (a, p)
        let (mut r0, mut r1) = (self.0 as i64, a as i64);
        let (mut t0, mut t1) = (0i64, 1i64);
        while r1 != 0 {
            let q = r0 / r1;
            (r0, r1) = (r1, r0 - q * r1);
            (t0, t1) = (t1, t0 - q * t1);
        }
        t0.rem_euclid(self.0 as i64) as u32
    }

    /// Reduces a signed integer into `[0, p)`.
    pub fn reduce(self, c: i64) -> u32 {
        c.rem_euclid(self.0 as i64) as u32
    }
}

impl fmt::Display for PrimeChar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

#[derive(Debug)]
struct RingData {
    p: PrimeChar,
    vars: Vec<String>,
    order: MonomialOrder,
    limits: Limits,
}

/// The ambient ring `F_p[x_1, ..., x_n]` together with its monomial order
/// and the resource limits used by Gröbner computations in it.
///
/// Cheap to clone. Two rings are equal when characteristic, variables and
/// order agree; limits do not take part in equality.
#[derive(Debug, Clone)]
pub struct Ring(Arc<RingData>);

impl PartialEq for Ring {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0)
            || (self.0.p == other.0.p && self.0.order == other.0.order && self.0.vars == other.0.vars)
    }
}

impl Eq for Ring {}

/// Prefix of the internal elimination variables; rejected in user rings.
pub const RESERVED_PREFIX: &str = "@t";

impl Ring {
    /// A user-facing ring. Variable names must be identifiers
    /// (`[A-Za-z_][A-Za-z0-9_]*`) and pairwise distinct.
    pub fn new<S: AsRef<str>>(p: PrimeChar, vars: &[S], order: MonomialOrder) -> Result<Ring> {
        let vars: Vec<String> = vars.iter().map(|v| v.as_ref().to_string()).collect();
        for (i, v) in vars.iter().enumerate() {
            if !is_identifier(v) {
                return Err(Error::ReservedVariable(v.clone()));
            }
            if vars[..i].contains(v) {
                return Err(Error::Precondition(format!("duplicate variable `{v}`")));
            }
        }
        Ok(Ring::build(p, vars, order, Limits::default()))
    }

    fn build(p: PrimeChar, vars: Vec<String>, order: MonomialOrder, limits: Limits) -> Ring {
        Ring(Arc::new(RingData {
            p,
            vars,
            order,
            limits,
        }))
    }

    pub fn with_limits(&self, limits: Limits) -> Ring {
        Ring::build(self.0.p, self.0.vars.clone(), self.0.order.clone(), limits)
    }

    pub fn with_order(&self, order: MonomialOrder) -> Ring {
        Ring::build(self.0.p, self.0.vars.clone(), order, self.0.limits.clone())
    }

    /// This ring with one fresh variable `@tK` prepended, ordered by a block
    /// order eliminating it.
    pub(crate) fn with_elimination_var(&self) -> Ring {
        let mut k = 0;
        let name = loop {
            let candidate = format!("{RESERVED_PREFIX}{k}");
            if !self.0.vars.contains(&candidate) {
                break candidate;
            }
            k += 1;
        };
        let mut vars = Vec::with_capacity(self.nvars() + 1);
        vars.push(name);
        vars.extend(self.0.vars.iter().cloned());
        Ring::build(
            self.0.p,
            vars,
            MonomialOrder::block(1, self.0.order.clone()),
            self.0.limits.clone(),
        )
    }

    pub fn characteristic(&self) -> PrimeChar {
        self.0.p
    }

    pub fn p(&self) -> u32 {
        self.0.p.get()
    }

    pub fn vars(&self) -> &[String] {
        &self.0.vars
    }

    pub fn nvars(&self) -> usize {
        self.0.vars.len()
    }

    pub fn order(&self) -> &MonomialOrder {
        &self.0.order
    }

    pub fn limits(&self) -> &Limits {
        &self.0.limits
    }

    pub fn var_index(&self, name: &str) -> Option<usize> {
        self.0.vars.iter().position(|v| v == name)
    }

    /// The variable `name` as a polynomial.
    pub fn var(&self, name: &str) -> Result<Polynomial> {
        let i = self
            .var_index(name)
            .ok_or_else(|| Error::UnknownVariable(name.to_string()))?;
        Ok(Polynomial::monomial(self, 1, Monomial::var(self.nvars(), i)))
    }

    pub fn parse(&self, text: &str) -> Result<Polynomial> {
        Polynomial::parse(text, self)
    }
}

fn is_identifier(s: &str) -> bool {
    let mut chars = s.chars();
    matches!(chars.next(), Some(c) if c.is_ascii_alphabetic() || c == '_')
        && chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}
