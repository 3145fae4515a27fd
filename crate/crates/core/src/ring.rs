//! Coefficient-domain traits used by the generic polynomial machinery.
//!
//! Elements carry their own context (a number-field element knows its field, a
//! multivariate polynomial knows its variable count), so identities are
//! obtained from an existing value via [`Ring::zero_like`] / [`Ring::one_like`]
//! rather than from a bare type.

/// A commutative integral domain with exact division.
pub trait Ring: Clone + PartialEq + std::fmt::Debug {
    /// The additive identity of the ring `self` belongs to.
    fn zero_like(&self) -> Self;
    /// The multiplicative identity of the ring `self` belongs to.
    fn one_like(&self) -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, rhs: &Self) -> Self;
    fn sub(&self, rhs: &Self) -> Self;
    fn mul(&self, rhs: &Self) -> Self;
    fn neg(&self) -> Self;
    /// Exact division; `None` when `rhs` does not divide `self` (or is zero).
    fn exact_div(&self, rhs: &Self) -> Option<Self>;
}

/// A ring in which every nonzero element is invertible.
pub trait FieldOps: Ring {
    /// Multiplicative inverse; `None` for zero.
    fn inv(&self) -> Option<Self>;

    fn div(&self, rhs: &Self) -> Self {
        self.mul(&rhs.inv().expect("division by zero"))
    }
}

/// `c` multiplied by a small natural number, via doubling.
pub fn mul_small<C: Ring>(c: &C, k: usize) -> C {
    let mut acc = c.zero_like();
    let mut base = c.clone();
    let mut k = k;
    while k > 0 {
        if k & 1 == 1 {
            acc = acc.add(&base);
        }
        k >>= 1;
        if k > 0 {
            base = base.add(&base);
        }
    }
    acc
}
