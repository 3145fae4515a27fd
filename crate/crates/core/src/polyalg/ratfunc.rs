//! Univariate rational functions over a field, kept in lowest terms.

use std::fmt;

use crate::polyalg::UniPoly;
use crate::ring::{FieldOps, Ring};

/// Error for a vanishing denominator.
#[derive(Debug, Clone, PartialEq, thiserror::Error)]
#[error("rational function with zero denominator")]
pub struct ZeroDenominator;

/// `num/den` with `gcd(num, den) = 1` and a monic denominator, so equal
/// functions compare equal componentwise.
#[derive(Clone, PartialEq, Eq)]
pub struct RatFunc<C> {
    num: UniPoly<C>,
    den: UniPoly<C>,
}

impl<C: FieldOps> RatFunc<C> {
    pub fn new(num: UniPoly<C>, den: UniPoly<C>) -> Result<Self, ZeroDenominator> {
        if den.is_zero() {
            return Err(ZeroDenominator);
        }
        if num.is_zero() {
            return Ok(RatFunc {
                num: UniPoly::zero(),
                den: den.one_like(),
            });
        }
        let g = num.gcd(&den);
        let num = num.exact_div(&g).unwrap();
        let den = den.exact_div(&g).unwrap();
        let lead_inv = den.leading().unwrap().inv().unwrap();
        Ok(RatFunc {
            num: num.scale(&lead_inv),
            den: den.scale(&lead_inv),
        })
    }

    pub fn from_poly(p: UniPoly<C>) -> Self {
        if p.is_zero() {
            panic!("use RatFunc::zero_of for the zero function (needs context)");
        }
        let den = p.one_like();
        RatFunc { num: p, den }
    }

    pub fn constant(c: C) -> Self {
        let den = UniPoly::constant(c.one_like());
        RatFunc {
            num: UniPoly::constant(c),
            den,
        }
    }

    /// The zero function, with context taken from `sample`.
    pub fn zero_of(sample: &C) -> Self {
        RatFunc {
            num: UniPoly::zero(),
            den: UniPoly::constant(sample.one_like()),
        }
    }

    /// The identity function `t`.
    pub fn identity(sample: &C) -> Self {
        RatFunc {
            num: UniPoly::var(sample),
            den: UniPoly::constant(sample.one_like()),
        }
    }

    pub fn num(&self) -> &UniPoly<C> {
        &self.num
    }

    pub fn den(&self) -> &UniPoly<C> {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_constant(&self) -> bool {
        self.num.is_constant() && self.den.is_constant()
    }

    pub fn add(&self, rhs: &Self) -> Self {
        let num = self.num.mul(&rhs.den).add(&self.den.mul(&rhs.num));
        Self::new(num, self.den.mul(&rhs.den)).unwrap()
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        self.add(&rhs.neg())
    }

    pub fn neg(&self) -> Self {
        RatFunc {
            num: self.num.neg(),
            den: self.den.clone(),
        }
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        Self::new(self.num.mul(&rhs.num), self.den.mul(&rhs.den)).unwrap()
    }

    pub fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        Self::new(self.den.clone(), self.num.clone()).ok()
    }

    pub fn div(&self, rhs: &Self) -> Self {
        self.mul(&rhs.inv().expect("division by the zero function"))
    }

    pub fn scale(&self, c: &C) -> Self {
        Self::new(self.num.scale(c), self.den.clone()).unwrap()
    }

    /// Value at `x`; `None` at a pole.
    pub fn eval(&self, x: &C) -> Option<C> {
        self.den.eval(x).inv().map(|d| self.num.eval(x).mul(&d))
    }

    /// Composition `self(g)`; `None` when the denominator collapses to zero
    /// (possible only for a constant `g` hitting a pole).
    pub fn compose(&self, g: &Self) -> Option<Self> {
        let d = self.num.degree().unwrap_or(0).max(self.den.degree().unwrap_or(0));
        let lift = |p: &UniPoly<C>| -> UniPoly<C> {
            // sum p_i gn^i gd^(d-i), the degree-d homogenization of p at g
            let mut acc = UniPoly::zero();
            for (i, c) in p.coeffs().iter().enumerate() {
                if c.is_zero() {
                    continue;
                }
                let t = if i == 0 {
                    g.den.pow(d).scale(c)
                } else {
                    g.num.pow(i).mul(&g.den.pow(d - i)).scale(c)
                };
                acc = acc.add(&t);
            }
            acc
        };
        let num = lift(&self.num);
        let den = lift(&self.den);
        Self::new(num, den).ok()
    }

    pub fn map_coeffs<T: FieldOps>(&self, f: impl Fn(&C) -> T) -> RatFunc<T> {
        let num = UniPoly::new(self.num.coeffs().iter().map(&f).collect());
        let den = UniPoly::new(self.den.coeffs().iter().map(&f).collect());
        RatFunc::new(num, den).expect("denominator must not collapse under coefficient map")
    }

    pub fn render(&self, var: &str) -> String
    where
        C: fmt::Display,
    {
        if self.den.is_constant() && self.den.is_monic() {
            return self.num.render(var);
        }
        format!("[{}] / [{}]", self.num.render(var), self.den.render(var))
    }
}

impl<C: fmt::Debug> fmt::Debug for RatFunc<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({:?})/({:?})", self.num, self.den)
    }
}

impl<C: FieldOps> Ring for RatFunc<C> {
    fn zero_like(&self) -> Self {
        RatFunc {
            num: UniPoly::zero(),
            den: self.den.one_like(),
        }
    }

    fn one_like(&self) -> Self {
        let one = self.den.one_like();
        RatFunc {
            num: one.clone(),
            den: one,
        }
    }

    fn is_zero(&self) -> bool {
        RatFunc::is_zero(self)
    }
    fn add(&self, rhs: &Self) -> Self {
        RatFunc::add(self, rhs)
    }
    fn sub(&self, rhs: &Self) -> Self {
        RatFunc::sub(self, rhs)
    }
    fn mul(&self, rhs: &Self) -> Self {
        RatFunc::mul(self, rhs)
    }
    fn neg(&self) -> Self {
        RatFunc::neg(self)
    }
    fn exact_div(&self, rhs: &Self) -> Option<Self> {
        rhs.inv().map(|i| self.mul(&i))
    }
}

impl<C: FieldOps> FieldOps for RatFunc<C> {
    fn inv(&self) -> Option<Self> {
        RatFunc::inv(self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::Rat;

    fn rf(num: &[i64], den: &[i64]) -> RatFunc<Rat> {
        RatFunc::new(UniPoly::from_ints(num), UniPoly::from_ints(den)).unwrap()
    }

    #[test]
    fn reduction_invariant() {
        // (t^2-1)/(2t-2) = (t+1)/2
        let f = rf(&[-1, 0, 1], &[-2, 2]);
        assert_eq!(f, rf(&[1, 1], &[2]));
        assert!(f.den().is_monic());
    }

    #[test]
    fn field_laws() {
        let f = rf(&[1, 2], &[3, 0, 1]);
        let g = rf(&[0, 1], &[-1, 1]);
        assert_eq!(f.add(&g).sub(&g), f);
        assert_eq!(f.mul(&g).div(&g), f);
        assert!(f.mul(&f.inv().unwrap()).sub(&f.one_like()).is_zero());
    }

    #[test]
    fn composition() {
        // f = 1/t, g = t+1 => f∘g = 1/(t+1)
        let f = rf(&[1], &[0, 1]);
        let g = rf(&[1, 1], &[1]);
        assert_eq!(f.compose(&g).unwrap(), rf(&[1], &[1, 1]));
        // composing into the pole of a constant
        let c = rf(&[0], &[1]);
        assert!(f.compose(&c).is_none());
    }

    #[test]
    fn eval_and_poles() {
        let f = rf(&[1], &[-1, 1]); // 1/(t-1)
        assert_eq!(f.eval(&Rat::from_int(3)), Some(Rat::new(1, 2)));
        assert_eq!(f.eval(&Rat::from_int(1)), None);
    }
}
