use super::{fedder_ideal, RingPresentation};
use crate::error::{Error, Result};
use crate::groebner::{ideal_contains, ideal_equal, member, Ideal};
use crate::ideal_ops::{bracket_power, colon};
use crate::polyring::{nu, NuValue, Polynomial};

#[derive(Debug, Clone)]
pub struct ChainEntry {
    pub n: u32,
    pub nu: NuValue,
    /// `b_n = (a^[p^n] : u^(nu_n))`.
    pub ideal: Ideal,
}

/// The ideals `b_n = (a^[p^n] : u^(nu_n))` for `n = 0..=cap`; together they
/// make up the graded annihilator `⊕ b_n x^n` attached to `u`.
#[derive(Debug, Clone)]
pub struct ChainReport {
    pub u: Polynomial,
    pub entries: Vec<ChainEntry>,
    /// `b_n ⊆ b_(n+1)` was checked for every consecutive pair.
    pub ascending_verified: bool,
    /// First index `s < cap` with `b_s = b_(s+1) = ... = b_cap`. This is
    /// "stable through cap", not a proof of stability beyond it.
    pub stabilized_at: Option<usize>,
    pub cap: u32,
}

/// Computes the chain for `u ∈ (a^[p] : a)`, which is exactly when `x e = u y e`
/// makes `(0 :_E a)` a submodule.
pub fn annihilator_chain(ring: &RingPresentation, u: &Polynomial, cap: u32) -> Result<ChainReport> {
    let max = ring.config().max_chain_cap;
    if cap > max {
        return Err(Error::precondition(format!(
            "chain cap {cap} exceeds the configured maximum {max}"
        )));
    }
    let j = fedder_ideal(ring)?;
    if !member(u, &j)? {
        return Err(Error::precondition(format!(
            "u = {u} is not in (a^[p] : a) = {j}"
        )));
    }
    let a = ring.ideal();
    let r = a.ring();
    let p = ring.ring().characteristic();

    let mut entries = Vec::with_capacity(cap as usize + 1);
    // u^(nu_0) = 1, u^(nu_(n+1)) = u * (u^(nu_n))^p
    let mut power = Polynomial::one(r);
    for n in 0..=cap {
        let ideal = if power.is_zero() {
            Ideal::unit(r)
        } else {
            colon(&bracket_power(a, n)?, &power)?
        };
        entries.push(ChainEntry {
            n,
            nu: nu(p, n),
            ideal,
        });
        if n < cap {
            power = u.try_mul(&power.frobenius_power(1)?)?;
        }
    }

    let mut ascending_verified = true;
    for w in entries.windows(2) {
        if !ideal_contains(&w[1].ideal, &w[0].ideal)? {
            ascending_verified = false;
            break;
        }
    }

    let mut s = entries.len() - 1;
    while s > 0 && ideal_equal(&entries[s - 1].ideal, &entries[s].ideal)? {
        s -= 1;
    }
    let stabilized_at = (s < cap as usize).then_some(s);

    Ok(ChainReport {
        u: u.clone(),
        entries,
        ascending_verified,
        stabilized_at,
        cap,
    })
}

/// Checks `(a^[p^n] : u^(nu_n)) = a` for `n = 0..=cap`, where `a` is prime
/// and `u ∈ (a^[p] : a) \ a^[p]`.
///
/// Primality of `a` is NOT verified: the caller asserts it. On a non-prime
/// ideal the answer only describes the computed chain.
pub fn prime_chain_check(ring: &RingPresentation, u: &Polynomial, cap: u32) -> Result<bool> {
    let a = ring.ideal();
    if member(u, &bracket_power(a, 1)?)? {
        return Err(Error::precondition(format!("u = {u} lies in a^[p]")));
    }
    let report = annihilator_chain(ring, u, cap)?;
    for e in &report.entries {
        if !ideal_equal(&e.ideal, a)? {
            return Ok(false);
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyring::{MonomialOrder, PrimeChar, Ring};

    fn ring(p: u64, vars: &[&str]) -> Ring {
        Ring::new(PrimeChar::new(p).unwrap(), vars, MonomialOrder::Grevlex).unwrap()
    }

    #[test]
    fn node_chain_is_constant() {
        let r = ring(2, &["x", "y"]);
        let rp = RingPresentation::parse(&r, &["x*y"]).unwrap();
        let u = r.parse("x*y").unwrap();
        let rep = annihilator_chain(&rp, &u, 3).unwrap();
        assert_eq!(rep.entries.len(), 4);
        for e in &rep.entries {
            assert_eq!(e.ideal.basis().unwrap(), std::slice::from_ref(&u));
        }
        assert!(rep.ascending_verified);
        assert_eq!(rep.stabilized_at, Some(0));
        let nus: Vec<u64> = rep.entries.iter().map(|e| e.nu.to_u64().unwrap()).collect();
        assert_eq!(nus, [0, 1, 3, 7]);
    }

    #[test]
    fn line_chain() {
        let r = ring(3, &["x", "y"]);
        let rp = RingPresentation::parse(&r, &["x"]).unwrap();
        let u = r.parse("x^2").unwrap();
        let rep = annihilator_chain(&rp, &u, 3).unwrap();
        for e in &rep.entries {
            assert!(ideal_equal(&e.ideal, rp.ideal()).unwrap());
        }
        assert!(ideal_equal(&rep.entries[0].ideal, rp.ideal()).unwrap());
    }

    #[test]
    fn chain_guards() {
        let r = ring(2, &["x", "y"]);
        let rp = RingPresentation::parse(&r, &["x*y"]).unwrap();
        assert!(matches!(
            annihilator_chain(&rp, &r.parse("x").unwrap(), 2),
            Err(Error::Precondition(_))
        ));
        assert!(matches!(
            annihilator_chain(&rp, &r.parse("x*y").unwrap(), 5),
            Err(Error::Precondition(_))
        ));
    }

    #[test]
    fn prime_fixed_points() {
        let r = ring(2, &["x", "y"]);
        let rp = RingPresentation::parse(&r, &["x"]).unwrap();
        assert!(prime_chain_check(&rp, &r.parse("x").unwrap(), 3).unwrap());
        // u in a^[p] is rejected
        assert!(prime_chain_check(&rp, &r.parse("x^2").unwrap(), 3).is_err());

        let r = ring(3, &["x", "y"]);
        let rp = RingPresentation::parse(&r, &["x + y"]).unwrap();
        let u = r.parse("x + y").unwrap().pow(2).unwrap();
        assert!(prime_chain_check(&rp, &u, 2).unwrap());
    }
}
