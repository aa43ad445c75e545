//! Exact computations in `F_p[x_1, ..., x_n]` for studying quotient rings
//! `R = S/a` in prime characteristic: Frobenius bracket powers, colon
//! ideals, Fedder's F-purity test, the ideal chain `(a^[p^n] : u^(nu_n))`
//! and a big-test-element certifier for hypersurfaces.

pub mod error;
pub mod fsing;
pub mod groebner;
pub mod ideal_ops;
pub mod oracle;
pub mod polyring;
pub mod random;

pub use error::{Error, Result};
pub use groebner::{Ideal, Limits};
pub use polyring::{Monomial, MonomialOrder, NuValue, Polynomial, PrimeChar, Ring};
