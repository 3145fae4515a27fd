//! Arbitrary-precision rationals in canonical form.

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::ring::{FieldOps, Ring};

/// An exact rational number.
///
/// Invariants (maintained by `num-rational`): numerator and denominator are
/// coprime, the denominator is positive, and zero is stored as `0/1`.
/// [`fmt::Display`] always renders the canonical `"p/q"` form, including the
/// `/1`, so rendered values round-trip bit-exactly through [`FromStr`].
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Rat(BigRational);

impl Rat {
    /// `num/den`. Panics if `den == 0`.
    pub fn new(num: i64, den: i64) -> Self {
        assert!(den != 0, "zero denominator");
        Rat(BigRational::new(BigInt::from(num), BigInt::from(den)))
    }

    pub fn from_int(n: i64) -> Self {
        Rat(BigRational::from_integer(BigInt::from(n)))
    }

    pub fn from_bigint(n: BigInt) -> Self {
        Rat(BigRational::from_integer(n))
    }

    /// `num/den` from big integers; `None` when `den == 0`.
    pub fn from_parts(num: BigInt, den: BigInt) -> Option<Self> {
        if den.is_zero() {
            None
        } else {
            Some(Rat(BigRational::new(num, den)))
        }
    }

    pub fn zero() -> Self {
        Rat(BigRational::zero())
    }

    pub fn one() -> Self {
        Rat(BigRational::one())
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.0.is_one()
    }

    pub fn is_negative(&self) -> bool {
        self.0.is_negative()
    }

    pub fn is_integer(&self) -> bool {
        self.0.is_integer()
    }

    pub fn numer(&self) -> &BigInt {
        self.0.numer()
    }

    pub fn denom(&self) -> &BigInt {
        self.0.denom()
    }

    pub fn abs(&self) -> Self {
        Rat(self.0.abs())
    }

    pub fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            None
        } else {
            Some(Rat(self.0.recip()))
        }
    }

    /// Integer power; negative exponents require a nonzero base.
    pub fn pow(&self, e: i32) -> Self {
        if e == 0 {
            return Rat::one();
        }
        if e < 0 {
            return Rat(self.0.recip().pow(-e));
        }
        Rat(self.0.pow(e))
    }

    /// `max(|numerator|, denominator)` — the usual naive height.
    pub fn height(&self) -> BigInt {
        self.numer().abs().max(self.denom().clone())
    }

    /// Nonnegative gcd: the largest rational `g` with `self/g` and `other/g`
    /// coprime integers. `gcd(0, 0) = 0`.
    pub fn gcd(&self, other: &Self) -> Self {
        if self.is_zero() {
            return other.abs();
        }
        if other.is_zero() {
            return self.abs();
        }
        let num = (self.numer() * other.denom()).gcd(&(other.numer() * self.denom()));
        Rat(BigRational::new(num, self.denom() * other.denom()))
    }

    /// Decimal rendering with exactly `digits` fractional digits, rounding
    /// half away from zero. Used only by the lossy plot emitter.
    pub fn to_decimal(&self, digits: usize) -> String {
        let scale = BigInt::from(10u8).pow(digits as u32);
        let num = self.numer() * &scale;
        let den = self.denom();
        // round(num/den) half away from zero
        let two = BigInt::from(2);
        let scaled = (num.abs() * &two + den) / (den * &two);
        let sign = if self.is_negative() && !scaled.is_zero() {
            "-"
        } else {
            ""
        };
        if digits == 0 {
            return format!("{sign}{scaled}");
        }
        let (int_part, frac_part) = scaled.div_rem(&scale);
        format!("{sign}{int_part}.{frac:0>width$}", frac = frac_part, width = digits)
    }

    pub fn to_f64(&self) -> Option<f64> {
        self.0.to_f64()
    }
}

impl fmt::Display for Rat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.numer(), self.denom())
    }
}

impl fmt::Debug for Rat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Error produced when parsing a rational string fails.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("invalid rational literal {0:?}")]
pub struct ParseRatError(pub String);

impl FromStr for Rat {
    type Err = ParseRatError;

    /// Accepts `"p/q"` or a bare integer `"p"`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || ParseRatError(s.to_string());
        match s.split_once('/') {
            Some((n, d)) => {
                let num: BigInt = n.trim().parse().map_err(|_| bad())?;
                let den: BigInt = d.trim().parse().map_err(|_| bad())?;
                Rat::from_parts(num, den).ok_or_else(bad)
            }
            None => {
                let num: BigInt = s.trim().parse().map_err(|_| bad())?;
                Ok(Rat::from_bigint(num))
            }
        }
    }
}

macro_rules! rat_binop {
    ($trait:ident, $method:ident) => {
        impl $trait for &Rat {
            type Output = Rat;
            fn $method(self, rhs: &Rat) -> Rat {
                Rat((&self.0).$method(&rhs.0))
            }
        }
        impl $trait for Rat {
            type Output = Rat;
            fn $method(self, rhs: Rat) -> Rat {
                Rat(self.0.$method(rhs.0))
            }
        }
        impl $trait<&Rat> for Rat {
            type Output = Rat;
            fn $method(self, rhs: &Rat) -> Rat {
                Rat(self.0.$method(&rhs.0))
            }
        }
    };
}

rat_binop!(Add, add);
rat_binop!(Sub, sub);
rat_binop!(Mul, mul);

impl Div for &Rat {
    type Output = Rat;
    fn div(self, rhs: &Rat) -> Rat {
        assert!(!rhs.is_zero(), "division by zero");
        Rat(&self.0 / &rhs.0)
    }
}

impl Div for Rat {
    type Output = Rat;
    fn div(self, rhs: Rat) -> Rat {
        Div::div(&self, &rhs)
    }
}

impl Neg for &Rat {
    type Output = Rat;
    fn neg(self) -> Rat {
        Rat(-&self.0)
    }
}

impl Neg for Rat {
    type Output = Rat;
    fn neg(self) -> Rat {
        Rat(-self.0)
    }
}

impl Ring for Rat {
    fn zero_like(&self) -> Self {
        Rat::zero()
    }
    fn one_like(&self) -> Self {
        Rat::one()
    }
    fn is_zero(&self) -> bool {
        Rat::is_zero(self)
    }
    fn add(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn sub(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn mul(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn neg(&self) -> Self {
        -self
    }
    fn exact_div(&self, rhs: &Self) -> Option<Self> {
        rhs.inv().map(|i| self * &i)
    }
}

impl FieldOps for Rat {
    fn inv(&self) -> Option<Self> {
        Rat::inv(self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn canonical_form() {
        assert_eq!(Rat::new(2, 4), Rat::new(1, 2));
        assert_eq!(Rat::new(1, -2), Rat::new(-1, 2));
        assert_eq!(Rat::new(0, -7), Rat::zero());
        assert_eq!(Rat::new(1, -2).to_string(), "-1/2");
        assert_eq!(Rat::zero().to_string(), "0/1");
    }

    #[test]
    fn parse_round_trip() {
        for s in ["3/4", "-7/2", "0/1", "12345678901234567890/7"] {
            let r: Rat = s.parse().unwrap();
            assert_eq!(r.to_string(), s);
        }
        let r: Rat = "6/-4".parse().unwrap();
        assert_eq!(r.to_string(), "-3/2");
        assert!("1/0".parse::<Rat>().is_err());
        assert!("x".parse::<Rat>().is_err());
    }

    #[test]
    fn decimal_rendering() {
        assert_eq!(Rat::new(1, 3).to_decimal(4), "0.3333");
        assert_eq!(Rat::new(-1, 2).to_decimal(3), "-0.500");
        assert_eq!(Rat::new(5, 1).to_decimal(0), "5");
        assert_eq!(Rat::new(1, 8).to_decimal(2), "0.13");
        assert_eq!(Rat::new(-1, 200).to_decimal(2), "-0.01");
    }

    #[test]
    fn rational_gcd() {
        assert_eq!(Rat::new(4, 3).gcd(&Rat::new(2, 9)), Rat::new(2, 9));
        assert_eq!(Rat::new(-6, 1).gcd(&Rat::new(4, 1)), Rat::new(2, 1));
        assert_eq!(Rat::zero().gcd(&Rat::new(-3, 5)), Rat::new(3, 5));
    }
}
