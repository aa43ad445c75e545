use smallvec::SmallVec;

use crate::error::{Error, Result};

/// Exponent vector of a monomial, one entry per ring variable.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial(SmallVec<[u32; 4]>);

impl Monomial {
    pub fn one(nvars: usize) -> Self {
        Monomial(SmallVec::from_elem(0, nvars))
    }

    pub fn new(exponents: impl IntoIterator<Item = u32>) -> Self {
        Monomial(exponents.into_iter().collect())
    }

    pub fn var(nvars: usize, index: usize) -> Self {
        let mut m = Self::one(nvars);
        m.0[index] = 1;
        m
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    pub fn nvars(&self) -> usize {
        self.0.len()
    }

    pub fn degree(&self) -> u64 {
        self.0.iter().map(|&e| e as u64).sum()
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    /// `self | other`.
    pub fn divides(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    pub fn is_coprime(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(&a, &b)| a == 0 || b == 0)
    }

    pub fn checked_mul(&self, other: &Monomial) -> Result<Monomial> {
        self.0
            .iter()
            .zip(&other.0)
            .map(|(a, b)| a.checked_add(*b).ok_or(Error::ExponentOverflow))
            .collect::<Result<SmallVec<_>>>()
            .map(Monomial)
    }

    /// `self / other`, or `None` when `other` does not divide `self`.
    pub fn div(&self, other: &Monomial) -> Option<Monomial> {
        self.0
            .iter()
            .zip(&other.0)
            .map(|(a, b)| a.checked_sub(*b))
            .collect::<Option<SmallVec<_>>>()
            .map(Monomial)
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| *a.max(b)).collect())
    }

    pub fn gcd(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| *a.min(b)).collect())
    }

    /// Every exponent multiplied by `k`.
    pub fn scale(&self, k: u32) -> Result<Monomial> {
        self.0
            .iter()
            .map(|e| e.checked_mul(k).ok_or(Error::ExponentOverflow))
            .collect::<Result<SmallVec<_>>>()
            .map(Monomial)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn lcm_gcd_divide() {
        let a = Monomial::new([2, 0, 1]);
        let b = Monomial::new([1, 3, 0]);
        assert_eq!(a.lcm(&b), Monomial::new([2, 3, 1]));
        assert_eq!(a.gcd(&b), Monomial::new([1, 0, 0]));
        assert!(a.gcd(&b).divides(&a));
        assert_eq!(a.div(&b), None);
        assert_eq!(a.lcm(&b).div(&a), Some(Monomial::new([0, 3, 0])));
        assert!(!a.is_coprime(&b));
        assert!(Monomial::new([0, 1, 0]).is_coprime(&a));
    }

    #[test]
    fn overflow_is_an_error() {
        let big = Monomial::new([u32::MAX, 0]);
        assert_eq!(
            big.checked_mul(&Monomial::var(2, 0)),
            Err(Error::ExponentOverflow)
        );
        assert_eq!(Monomial::new([1 << 31, 0]).scale(2), Err(Error::ExponentOverflow));
    }
}
