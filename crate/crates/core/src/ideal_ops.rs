//! Ideal calculus: sums, products, intersections, colon ideals, Frobenius
//! bracket powers and radical membership.
//!
//! Every returned ideal already carries its reduced Gröbner basis.

use crate::error::{Error, Result};
use crate::groebner::Ideal;
use crate::polyring::{Monomial, Polynomial, Ring};

fn same_ring(a: &Ideal, b: &Ideal) -> Result<()> {
    if a.ring() == b.ring() {
        Ok(())
    } else {
        Err(Error::RingMismatch)
    }
}

fn finish(ideal: Ideal) -> Result<Ideal> {
    ideal.basis()?;
    Ok(ideal)
}

pub fn ideal_sum(a: &Ideal, b: &Ideal) -> Result<Ideal> {
    same_ring(a, b)?;
    let gens = a.generators().iter().chain(b.generators()).cloned();
    finish(Ideal::new(a.ring(), gens)?)
}

pub fn ideal_product(a: &Ideal, b: &Ideal) -> Result<Ideal> {
    same_ring(a, b)?;
    let mut gens = Vec::with_capacity(a.generators().len() * b.generators().len());
    for f in a.generators() {
        for g in b.generators() {
            gens.push(f.try_mul(g)?);
        }
    }
    finish(Ideal::new(a.ring(), gens)?)
}

fn embed(f: &Polynomial, ext: &Ring) -> Polynomial {
    f.map_into(ext, |e| {
        Monomial::new(std::iter::once(0).chain(e.iter().copied()))
    })
}

fn restrict(f: &Polynomial, base: &Ring) -> Polynomial {
    f.map_into(base, |e| Monomial::new(e[1..].iter().copied()))
}

/// `a ∩ b`, as the elimination ideal `(t·a + (1 - t)·b) ∩ k[x]`.
pub fn intersect(a: &Ideal, b: &Ideal) -> Result<Ideal> {
    same_ring(a, b)?;
    let ring = a.ring();
    if a.is_zero() || b.is_zero() {
        return Ok(Ideal::zero(ring));
    }
    let ext = ring.with_elimination_var();
    let t = Polynomial::monomial(&ext, 1, Monomial::var(ext.nvars(), 0));
    let one_minus_t = &Polynomial::one(&ext) - &t;
    let gens = a
        .generators()
        .iter()
        .map(|f| &t * &embed(f, &ext))
        .chain(b.generators().iter().map(|g| &one_minus_t * &embed(g, &ext)));
    let elim = Ideal::new(&ext, gens)?;
    let kept: Vec<Polynomial> = elim
        .basis()?
        .iter()
        .filter(|g| g.terms().iter().all(|t| t.mono.exponents()[0] == 0))
        .map(|g| restrict(g, ring))
        .collect();
    finish(Ideal::new(ring, kept)?)
}

/// `(a : g)`. Colon by the zero polynomial is rejected.
pub fn colon(a: &Ideal, g: &Polynomial) -> Result<Ideal> {
    if g.ring() != a.ring() {
        return Err(Error::RingMismatch);
    }
    if g.is_zero() {
        return Err(Error::ZeroColon);
    }
    let ring = a.ring();
    if a.is_zero() {
        return Ok(Ideal::zero(ring));
    }
    if g.is_unit() {
        return finish(a.clone());
    }
    // principal a = (h): (h : g) = (h / g) whenever g divides h
    if let [h] = a.basis()? {
        if let Some(q) = h.div_exact(g)? {
            return finish(Ideal::new(ring, [q])?);
        }
    }
    colon_by_elimination(a, g)
}

/// `(a : g)` through `a ∩ (g)` followed by exact division by `g`, with no
/// shortcuts.
pub fn colon_by_elimination(a: &Ideal, g: &Polynomial) -> Result<Ideal> {
    if g.is_zero() {
        return Err(Error::ZeroColon);
    }
    let ring = a.ring();
    let principal = Ideal::new(ring, [g.clone()])?;
    let meet = intersect(a, &principal)?;
    let gens = meet
        .basis()?
        .iter()
        .map(|h| {
            h.div_exact(g)?
                .ok_or_else(|| Error::precondition("intersection generator not divisible by g"))
        })
        .collect::<Result<Vec<_>>>()?;
    finish(Ideal::new(ring, gens)?)
}

/// `(a : b) = ∩_j (a : g_j)` over the generators of `b`. The zero ideal `b`
/// is rejected.
pub fn colon_ideal(a: &Ideal, b: &Ideal) -> Result<Ideal> {
    same_ring(a, b)?;
    let mut gens = b.generators().iter();
    let first = gens.next().ok_or(Error::ZeroColon)?;
    let mut acc = colon(a, first)?;
    for g in gens {
        if acc.is_unit()? {
            acc = colon(a, g)?;
        } else {
            let next = colon(a, g)?;
            acc = intersect(&acc, &next)?;
        }
    }
    Ok(acc)
}

/// The Frobenius bracket power `a^[p^e]`, generated by the `p^e`-th powers
/// of the generators of `a`.
pub fn bracket_power(a: &Ideal, e: u32) -> Result<Ideal> {
    let gens = a
        .generators()
        .iter()
        .map(|g| g.frobenius_power(e))
        .collect::<Result<Vec<_>>>()?;
    finish(Ideal::new(a.ring(), gens)?)
}

/// Whether some power of `f` lies in `a`: `1 ∈ a + (1 - t·f)`.
pub fn radical_member(f: &Polynomial, a: &Ideal) -> Result<bool> {
    if f.ring() != a.ring() {
        return Err(Error::RingMismatch);
    }
    if f.is_zero() {
        return Ok(true);
    }
    let ext = a.ring().with_elimination_var();
    let t = Polynomial::monomial(&ext, 1, Monomial::var(ext.nvars(), 0));
    let gens = a
        .generators()
        .iter()
        .map(|g| embed(g, &ext))
        .chain(std::iter::once(&Polynomial::one(&ext) - &(&t * &embed(f, &ext))));
    Ideal::new(&ext, gens)?.is_unit()
}

/// Membership in `(x_1^p, ..., x_n^p)` by the monomial test: every term is
/// divisible by some `x_i^p`.
pub fn in_frobenius_maximal(f: &Polynomial) -> bool {
    f.in_frobenius_maximal()
}

/// The ideal `(x_1^p, ..., x_n^p)`.
pub fn frobenius_maximal(ring: &Ring) -> Result<Ideal> {
    bracket_power(&Ideal::maximal(ring), 1)
}
