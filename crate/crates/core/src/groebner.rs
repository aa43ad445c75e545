//! Buchberger's algorithm, normal forms and the ideal membership and
//! equality tests built on reduced Gröbner bases.
//!
//! Bases are computed in the order of the ideal's ring. Pairs are chosen by
//! the normal strategy (smallest lcm first) and pruned with the
//! Gebauer–Möller update, which applies both the coprime-leading-monomial
//! criterion and the chain criterion.

use std::fmt;
use std::sync::OnceLock;

use crate::error::{Error, Result};
use crate::polyring::{Monomial, Polynomial, Ring};

/// Resource limits for Gröbner computations.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Limits {
    /// Maximum number of pending critical pairs.
    pub max_pairs: usize,
    /// Maximum number of terms in any intermediate polynomial.
    pub max_terms: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            max_pairs: 100_000,
            max_terms: 1_000_000,
        }
    }
}

/// An ideal given by generators, with its reduced Gröbner basis computed on
/// demand and cached.
#[derive(Clone)]
pub struct Ideal {
    ring: Ring,
    gens: Vec<Polynomial>,
    basis: OnceLock<Vec<Polynomial>>,
}

impl Ideal {
    /// Zero generators are dropped; the zero ideal has no generators.
    pub fn new(ring: &Ring, gens: impl IntoIterator<Item = Polynomial>) -> Result<Ideal> {
        let mut out = Vec::new();
        for g in gens {
            if g.ring() != ring {
                return Err(Error::RingMismatch);
            }
            if !g.is_zero() {
                out.push(g);
            }
        }
        Ok(Ideal {
            ring: ring.clone(),
            gens: out,
            basis: OnceLock::new(),
        })
    }

    /// Parses each generator in `ring`.
    pub fn parse<S: AsRef<str>>(ring: &Ring, gens: &[S]) -> Result<Ideal> {
        let polys = gens
            .iter()
            .map(|g| ring.parse(g.as_ref()))
            .collect::<Result<Vec<_>>>()?;
        Ideal::new(ring, polys)
    }

    pub fn zero(ring: &Ring) -> Ideal {
        Ideal {
            ring: ring.clone(),
            gens: Vec::new(),
            basis: OnceLock::from(Vec::new()),
        }
    }

    pub fn unit(ring: &Ring) -> Ideal {
        let one = Polynomial::one(ring);
        Ideal {
            ring: ring.clone(),
            gens: vec![one.clone()],
            basis: OnceLock::from(vec![one]),
        }
    }

    /// The homogeneous maximal ideal `(x_1, ..., x_n)`.
    pub fn maximal(ring: &Ring) -> Ideal {
        let gens = ring
            .vars()
            .iter()
            .map(|v| ring.var(v).expect("ring variable"))
            .collect::<Vec<_>>();
        Ideal::new(ring, gens).expect("same ring")
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn generators(&self) -> &[Polynomial] {
        &self.gens
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    /// The reduced Gröbner basis, computing it on first use.
    pub fn basis(&self) -> Result<&[Polynomial]> {
        if let Some(b) = self.basis.get() {
            return Ok(b);
        }
        let b = buchberger(&self.ring, &self.gens)?;
        Ok(self.basis.get_or_init(|| b))
    }

    pub fn cached_basis(&self) -> Option<&[Polynomial]> {
        self.basis.get().map(Vec::as_slice)
    }

    pub fn is_unit(&self) -> Result<bool> {
        Ok(self.basis()?.first().is_some_and(Polynomial::is_unit))
    }

    pub fn contains(&self, f: &Polynomial) -> Result<bool> {
        member(f, self)
    }

    /// The same ideal in a ring that differs only in monomial order.
    pub fn reorder(&self, ring: &Ring) -> Result<Ideal> {
        let gens = self
            .gens
            .iter()
            .map(|g| g.reorder(ring))
            .collect::<Result<Vec<_>>>()?;
        Ideal::new(ring, gens)
    }
}

impl fmt::Display for Ideal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let gens = self.cached_basis().unwrap_or(&self.gens);
        if gens.is_empty() {
            return f.write_str("(0)");
        }
        f.write_str("(")?;
        for (i, g) in gens.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{g}")?;
        }
        f.write_str(")")
    }
}

impl fmt::Debug for Ideal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Ideal{self}")
    }
}

/// Full remainder of `f` on division by `divisors`: the leading term is
/// reduced first, divisors are tried in list order, and no term of the
/// result is divisible by a leading monomial of `divisors`.
pub fn normal_form(f: &Polynomial, divisors: &[Polynomial]) -> Polynomial {
    reduce(f, divisors, usize::MAX).expect("no term limit")
}

fn reduce(f: &Polynomial, divisors: &[Polynomial], max_terms: usize) -> Result<Polynomial> {
    let ring = f.ring();
    let p = ring.characteristic();
    let lead: Vec<(&Monomial, u32)> = divisors
        .iter()
        .filter_map(|g| g.leading_term().map(|t| (&t.mono, p.inv(t.coeff))))
        .collect();
    let divisors: Vec<&Polynomial> = divisors.iter().filter(|g| !g.is_zero()).collect();
    let mut rest = f.clone();
    let mut remainder = Vec::new();
    while let Some(lt) = rest.leading_term() {
        let hit = lead
            .iter()
            .enumerate()
            .find_map(|(i, (m, inv))| lt.mono.div(m).map(|q| (i, q, p.mul(lt.coeff, *inv))));
        match hit {
            Some((i, q, c)) => {
                rest = rest.sub_term_multiple(c, &q, divisors[i]);
                if rest.len() > max_terms {
                    return Err(Error::ResourceLimit {
                        what: "polynomial term count",
                        limit: max_terms,
                    });
                }
            }
            None => remainder.push(rest.pop_leading().expect("nonzero")),
        }
    }
    Ok(Polynomial::from_sorted(ring, remainder))
}

/// The reduced Gröbner basis of `ideal` in its ring's order.
pub fn groebner_basis(ideal: &Ideal) -> Result<&[Polynomial]> {
    ideal.basis()
}

pub fn member(f: &Polynomial, ideal: &Ideal) -> Result<bool> {
    if f.ring() != ideal.ring() {
        return Err(Error::RingMismatch);
    }
    if f.is_zero() {
        return Ok(true);
    }
    Ok(normal_form(f, ideal.basis()?).is_zero())
}

/// `inner ⊆ outer`.
pub fn ideal_contains(outer: &Ideal, inner: &Ideal) -> Result<bool> {
    if outer.ring() != inner.ring() {
        return Err(Error::RingMismatch);
    }
    let basis = outer.basis()?;
    Ok(inner.generators().iter().all(|g| normal_form(g, basis).is_zero()))
}

pub fn ideal_equal(a: &Ideal, b: &Ideal) -> Result<bool> {
    if a.ring() != b.ring() {
        return Err(Error::RingMismatch);
    }
    Ok(a.basis()? == b.basis()?)
}

/// Buchberger's criterion: every S-polynomial reduces to zero.
pub fn is_groebner_basis(basis: &[Polynomial]) -> bool {
    for i in 0..basis.len() {
        for j in i + 1..basis.len() {
            if let Some(s) = s_polynomial(&basis[i], &basis[j]) {
                if !normal_form(&s, basis).is_zero() {
                    return false;
                }
            }
        }
    }
    true
}

/// Whether `basis` is reduced: monic, and no term of any element is
/// divisible by the leading monomial of another.
pub fn is_reduced(basis: &[Polynomial]) -> bool {
    basis.iter().enumerate().all(|(i, g)| {
        g.leading_coeff() == 1
            && basis.iter().enumerate().all(|(j, h)| {
                i == j
                    || g.terms()
                        .iter()
                        .all(|t| !h.leading_monomial().expect("nonzero").divides(&t.mono))
            })
    })
}

/// `None` when either input is zero or the lcm overflows.
pub fn s_polynomial(f: &Polynomial, g: &Polynomial) -> Option<Polynomial> {
    let (tf, tg) = (f.leading_term()?, g.leading_term()?);
    let p = f.ring().characteristic();
    let l = tf.mono.lcm(&tg.mono);
    let a = f.mul_term(p.inv(tf.coeff), &l.div(&tf.mono)?).ok()?;
    Some(a.sub_term_multiple(p.inv(tg.coeff), &l.div(&tg.mono)?, g))
}

#[derive(Debug, Clone)]
struct Pair {
    i: usize,
    j: usize,
    lcm: Monomial,
}

struct Engine<'r> {
    ring: &'r Ring,
    polys: Vec<Polynomial>,
    active: Vec<bool>,
    pairs: Vec<Pair>,
}

impl<'r> Engine<'r> {
    fn lm(&self, i: usize) -> &Monomial {
        self.polys[i]
            .leading_monomial()
            .expect("basis elements are nonzero")
    }

    fn active_polys(&self) -> Vec<Polynomial> {
        self.polys
            .iter()
            .zip(&self.active)
            .filter(|(_, a)| **a)
            .map(|(g, _)| g.clone())
            .collect()
    }

    /// Gebauer–Möller update for a new basis element `h`.
    fn update(&mut self, h: Polynomial) -> Result<()> {
        let hi = self.polys.len();
        let lm_h = h.leading_monomial().expect("nonzero").clone();
        self.polys.push(h);
        self.active.push(true);

        let mut candidates: Vec<Pair> = (0..hi)
            .filter(|&g| self.active[g])
            .map(|g| Pair {
                i: g,
                j: hi,
                lcm: lm_h.lcm(self.lm(g)),
            })
            .collect();

        // chain criterion among the new pairs
        let mut kept: Vec<Pair> = Vec::new();
        while let Some(pair) = candidates.pop() {
            let coprime = lm_h.is_coprime(self.lm(pair.i));
            let dominated = candidates.iter().chain(&kept).any(|o| o.lcm.divides(&pair.lcm));
            if coprime || !dominated {
                kept.push(pair);
            }
        }
        // coprime criterion
        kept.retain(|pair| !lm_h.is_coprime(self.lm(pair.i)));

        // chain criterion on old pairs
        let old = std::mem::take(&mut self.pairs);
        for pair in old {
            let drop = lm_h.divides(&pair.lcm)
                && lm_h.lcm(self.lm(pair.i)) != pair.lcm
                && lm_h.lcm(self.lm(pair.j)) != pair.lcm;
            if !drop {
                self.pairs.push(pair);
            }
        }
        self.pairs.extend(kept);

        for g in 0..hi {
            if self.active[g] && lm_h.divides(self.lm(g)) {
                self.active[g] = false;
            }
        }

        let limit = self.ring.limits().max_pairs;
        if self.pairs.len() > limit {
            return Err(Error::ResourceLimit {
                what: "critical pair queue",
                limit,
            });
        }
        Ok(())
    }

    /// Index of the pair with the smallest lcm (degree first, then order).
    fn select(&self) -> Option<usize> {
        let order = self.ring.order();
        (0..self.pairs.len()).min_by(|&a, &b| {
            let (pa, pb) = (&self.pairs[a], &self.pairs[b]);
            pa.lcm
                .degree()
                .cmp(&pb.lcm.degree())
                .then_with(|| order.compare(pa.lcm.exponents(), pb.lcm.exponents()))
                .then_with(|| (pa.j, pa.i).cmp(&(pb.j, pb.i)))
        })
    }
}

fn buchberger(ring: &Ring, gens: &[Polynomial]) -> Result<Vec<Polynomial>> {
    let max_terms = ring.limits().max_terms;
    let mut engine = Engine {
        ring,
        polys: Vec::new(),
        active: Vec::new(),
        pairs: Vec::new(),
    };
    let one = || Ok(vec![Polynomial::one(ring)]);

    for g in gens {
        let h = reduce(g, &engine.active_polys(), max_terms)?;
        if h.is_zero() {
            continue;
        }
        if h.is_unit() {
            return one();
        }
        engine.update(h.monic())?;
    }

    while let Some(k) = engine.select() {
        let pair = engine.pairs.swap_remove(k);
        let s =
            s_polynomial(&engine.polys[pair.i], &engine.polys[pair.j]).expect("basis elements are nonzero");
        let h = reduce(&s, &engine.active_polys(), max_terms)?;
        if h.is_zero() {
            continue;
        }
        if h.is_unit() {
            return one();
        }
        engine.update(h.monic())?;
    }

    Ok(interreduce(engine.active_polys()))
}

/// Turns a minimal Gröbner basis into the reduced one, sorted by leading
/// monomial, largest first.
fn interreduce(mut basis: Vec<Polynomial>) -> Vec<Polynomial> {
    for i in 0..basis.len() {
        let g = basis[i].clone();
        let others: Vec<Polynomial> = basis
            .iter()
            .enumerate()
            .filter(|&(j, _)| j != i)
            .map(|(_, h)| h.clone())
            .collect();
        let mut terms = g.into_terms();
        let lead = terms.remove(0);
        let tail = Polynomial::from_sorted(basis[i].ring(), terms);
        let tail = normal_form(&tail, &others);
        let mut out = vec![lead];
        out.extend(tail.into_terms());
        basis[i] = Polynomial::from_sorted(basis[i].ring(), out).monic();
    }
    if let Some(first) = basis.first() {
        let order = first.ring().order().clone();
        basis.sort_by(|a, b| {
            order.compare(
                b.leading_monomial().expect("nonzero").exponents(),
                a.leading_monomial().expect("nonzero").exponents(),
            )
        });
    }
    basis
}
