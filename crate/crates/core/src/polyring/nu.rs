use num_bigint::BigUint;
use num_traits::{One, Zero};

use super::PrimeChar;

/// `nu_n = 1 + p + ... + p^(n-1)`, with `nu_0 = 0`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct NuValue {
    pub n: u32,
    pub value: BigUint,
}

pub fn nu(p: PrimeChar, n: u32) -> NuValue {
    // Horner: nu_(k+1) = p * nu_k + 1
    let mut value = BigUint::zero();
    for _ in 0..n {
        value = value * p.get() + BigUint::one();
    }
    NuValue { n, value }
}

impl NuValue {
    /// The value as a machine integer, if it fits.
    pub fn to_u64(&self) -> Option<u64> {
        u64::try_from(&self.value).ok()
    }
}

impl std::fmt::Display for NuValue {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        self.value.fmt(f)
    }
}
