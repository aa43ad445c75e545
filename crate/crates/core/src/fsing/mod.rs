//! Characteristic-p invariants of `R = S/a` at the origin.
//!
//! `S` is the polynomial ring of a [`Ring`] and all local statements are
//! read at the homogeneous maximal ideal `n = (x_1, ..., x_n)`; requiring
//! `a ⊆ n` puts the origin on `V(a)`. Every test reduces to containments
//! between ideals of `S`, so the localization is never built.

mod certify;
mod chain;
mod fedder;
mod identities;

pub use certify::{
    certify_big_test_element, hypersurface_singular_ideal, nonzerodivisor_test, Certificate, Check,
    CheckKind, Conclusion, Verdict,
};
pub use chain::{annihilator_chain, prime_chain_check, ChainEntry, ChainReport};
pub use fedder::{fedder_ideal, fedder_test, u_generators, FpureReport};
pub use identities::{
    verify_identities, verify_identities_with, IdentityConfig, IdentityOutcome, IdentityReport,
};

use crate::error::{Error, Result};
use crate::groebner::Ideal;
use crate::polyring::Ring;

/// Tunables for the operations in this module.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Config {
    /// Largest accepted chain cap.
    pub max_chain_cap: u32,
    /// Largest number of coefficient vectors tried by the avoidance search.
    pub avoidance_cap: usize,
}

impl Default for Config {
    fn default() -> Self {
        Config {
            max_chain_cap: 4,
            avoidance_cap: 1_000_000,
        }
    }
}

/// `R = S/a` with `a` a nonzero proper ideal contained in `n`.
#[derive(Debug, Clone)]
pub struct RingPresentation {
    a: Ideal,
    config: Config,
}

impl RingPresentation {
    pub fn new(a: Ideal) -> Result<Self> {
        Self::with_config(a, Config::default())
    }

    pub fn with_config(a: Ideal, config: Config) -> Result<Self> {
        if a.is_zero() {
            return Err(Error::precondition("the defining ideal must be nonzero"));
        }
        if let Some(g) = a.generators().iter().find(|g| g.constant_coeff() != 0) {
            return Err(Error::precondition(format!(
                "generator `{g}` has a nonzero constant term; a must lie in (x_1, ..., x_n)"
            )));
        }
        if a.is_unit()? {
            return Err(Error::precondition("the defining ideal must be proper"));
        }
        Ok(RingPresentation { a, config })
    }

    /// Parses generators of `a` in `ring`.
    pub fn parse<S: AsRef<str>>(ring: &Ring, gens: &[S]) -> Result<Self> {
        Self::new(Ideal::parse(ring, gens)?)
    }

    pub fn ring(&self) -> &Ring {
        self.a.ring()
    }

    pub fn ideal(&self) -> &Ideal {
        &self.a
    }

    pub fn config(&self) -> &Config {
        &self.config
    }

    pub fn p(&self) -> u32 {
        self.ring().p()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyring::{MonomialOrder, PrimeChar};

    #[test]
    fn presentation_guards() {
        let r = Ring::new(PrimeChar::new(3).unwrap(), &["x", "y"], MonomialOrder::Grevlex).unwrap();
        assert!(RingPresentation::parse(&r, &["x*y"]).is_ok());
        assert!(matches!(
            RingPresentation::parse(&r, &["0"]),
            Err(Error::Precondition(_))
        ));
        assert!(matches!(
            RingPresentation::parse(&r, &["x + 1"]),
            Err(Error::Precondition(_))
        ));
        assert!(matches!(
            RingPresentation::parse::<&str>(&r, &[]),
            Err(Error::Precondition(_))
        ));
    }
}
