//! Moebius units `(at+b)/(ct+d)` under composition.

use std::fmt;

use crate::polyalg::{RatFunc, UniPoly};
use crate::ring::FieldOps;

/// Error for `ad - bc = 0`.
#[derive(Debug, Clone, PartialEq, thiserror::Error)]
#[error("unit requires ad - bc != 0")]
pub struct SingularUnit;

/// An invertible element of the composition near-ring of rational functions:
/// `u(t) = (at+b)/(ct+d)` with `ad - bc != 0`.
#[derive(Clone, PartialEq, Eq)]
pub struct MoebiusUnit<C> {
    a: C,
    b: C,
    c: C,
    d: C,
}

impl<C: FieldOps> MoebiusUnit<C> {
    pub fn new(a: C, b: C, c: C, d: C) -> Result<Self, SingularUnit> {
        let u = MoebiusUnit { a, b, c, d };
        if u.determinant().is_zero() {
            return Err(SingularUnit);
        }
        Ok(u)
    }

    /// The identity unit `t`, with context from `sample`.
    pub fn identity(sample: &C) -> Self {
        let (zero, one) = (sample.zero_like(), sample.one_like());
        MoebiusUnit {
            a: one.clone(),
            b: zero.clone(),
            c: zero,
            d: one,
        }
    }

    /// The polynomial unit `at + b`, `a != 0`.
    pub fn affine(a: C, b: C) -> Result<Self, SingularUnit> {
        let (zero, one) = (a.zero_like(), a.one_like());
        Self::new(a, b, zero, one)
    }

    pub fn a(&self) -> &C {
        &self.a
    }
    pub fn b(&self) -> &C {
        &self.b
    }
    pub fn c(&self) -> &C {
        &self.c
    }
    pub fn d(&self) -> &C {
        &self.d
    }

    pub fn determinant(&self) -> C {
        self.a.mul(&self.d).sub(&self.b.mul(&self.c))
    }

    /// The inverse unit `(-dt + b)/(ct - a)`; `u ∘ u⁻¹ = u⁻¹ ∘ u = t`.
    pub fn invert(&self) -> Self {
        MoebiusUnit {
            a: self.d.neg(),
            b: self.b.clone(),
            c: self.c.clone(),
            d: self.a.neg(),
        }
    }

    /// Composition `self(rhs(t))` — the product of coefficient matrices.
    pub fn compose(&self, rhs: &Self) -> Self {
        MoebiusUnit {
            a: self.a.mul(&rhs.a).add(&self.b.mul(&rhs.c)),
            b: self.a.mul(&rhs.b).add(&self.b.mul(&rhs.d)),
            c: self.c.mul(&rhs.a).add(&self.d.mul(&rhs.c)),
            d: self.c.mul(&rhs.b).add(&self.d.mul(&rhs.d)),
        }
    }

    /// Left composition with `t + lambda`: the unit `lambda + u(t)`.
    pub fn translate(&self, lambda: &C) -> Self {
        MoebiusUnit {
            a: self.a.add(&lambda.mul(&self.c)),
            b: self.b.add(&lambda.mul(&self.d)),
            c: self.c.clone(),
            d: self.d.clone(),
        }
    }

    /// Left composition with `lambda·t`, `lambda != 0`: the unit `lambda·u(t)`.
    pub fn scale_left(&self, lambda: &C) -> Self {
        assert!(!lambda.is_zero(), "scaling a unit by zero");
        MoebiusUnit {
            a: self.a.mul(lambda),
            b: self.b.mul(lambda),
            c: self.c.clone(),
            d: self.d.clone(),
        }
    }

    /// True for polynomial units `at + b`.
    pub fn is_polynomial(&self) -> bool {
        self.c.is_zero()
    }

    /// True for the shape `1/(t + d)`.
    pub fn is_reduced(&self) -> bool {
        self.a.is_zero()
            && self.b.sub(&self.b.one_like()).is_zero()
            && self.c.sub(&self.c.one_like()).is_zero()
    }

    /// The pole `-d/c`; `None` for polynomial units.
    pub fn pole(&self) -> Option<C> {
        self.c.inv().map(|ci| self.d.neg().mul(&ci))
    }

    /// `u(∞) = a/c`; `None` for polynomial units (the value is infinite).
    pub fn value_at_infinity(&self) -> Option<C> {
        self.c.inv().map(|ci| self.a.mul(&ci))
    }

    /// `u(x)`; `None` at the pole.
    pub fn eval(&self, x: &C) -> Option<C> {
        let den = self.c.mul(x).add(&self.d);
        den.inv().map(|di| self.a.mul(x).add(&self.b).mul(&di))
    }

    pub fn to_ratfunc(&self) -> RatFunc<C> {
        let num = UniPoly::new(vec![self.b.clone(), self.a.clone()]);
        let den = UniPoly::new(vec![self.d.clone(), self.c.clone()]);
        RatFunc::new(num, den).expect("unit denominator cannot vanish")
    }

    /// Applies the unit to a rational function argument:
    /// `(a·g + b)/(c·g + d)`. `None` only when `g` is constant at the pole.
    pub fn apply_to(&self, g: &RatFunc<C>) -> Option<RatFunc<C>> {
        self.to_ratfunc().compose(g)
    }

    pub fn map_coeffs<T: FieldOps>(&self, f: impl Fn(&C) -> T) -> Result<MoebiusUnit<T>, SingularUnit> {
        MoebiusUnit::new(f(&self.a), f(&self.b), f(&self.c), f(&self.d))
    }
}

impl<C: fmt::Display> fmt::Display for MoebiusUnit<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "(({})t + ({})) / (({})t + ({}))",
            self.a, self.b, self.c, self.d
        )
    }
}

impl<C: fmt::Debug> fmt::Debug for MoebiusUnit<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "(({:?})t + ({:?})) / (({:?})t + ({:?}))",
            self.a, self.b, self.c, self.d
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::{NumberField, Rat};

    #[test]
    fn singular_rejected() {
        assert!(MoebiusUnit::new(
            Rat::from_int(1),
            Rat::from_int(2),
            Rat::from_int(2),
            Rat::from_int(4)
        )
        .is_err());
    }

    #[test]
    fn inverse_paper_example() {
        // field a^3 + a^2 - 3: u = ((2+a)t + a)/(t + 1 - a)
        let k = NumberField::from_int_minpoly(&[-3, 0, 1, 1]).unwrap();
        let u = MoebiusUnit::new(
            k.element_from_ints(&[2, 1, 0]),
            k.alpha(),
            k.one(),
            k.element_from_ints(&[1, -1, 0]),
        )
        .unwrap();
        // inverse is ((a-1)t + a)/(t - 2 - a)
        let v = u.invert();
        assert_eq!(v.a(), &k.element_from_ints(&[-1, 1, 0]));
        assert_eq!(v.b(), &k.alpha());
        assert_eq!(v.c(), &k.one());
        assert_eq!(v.d(), &k.element_from_ints(&[-2, -1, 0]));
        // v(u(t)) = t and u(v(t)) = t
        assert_eq!(
            v.apply_to(&u.to_ratfunc()).unwrap(),
            RatFunc::identity(&k.one())
        );
        assert_eq!(
            u.apply_to(&v.to_ratfunc()).unwrap(),
            RatFunc::identity(&k.one())
        );
    }

    #[test]
    fn invert_is_involution_and_composition_identity() {
        let k = NumberField::from_int_minpoly(&[2, 2, 0, 1]).unwrap();
        let u = MoebiusUnit::new(
            k.element_from_ints(&[1, 2, 0]),
            k.element_from_ints(&[0, 0, 1]),
            k.element_from_ints(&[3, 0, 0]),
            k.element_from_ints(&[1, 1, 1]),
        )
        .unwrap();
        let v = u.invert();
        assert_eq!(v.invert().to_ratfunc(), u.to_ratfunc());
        // compose(u, invert(u)) is the identity up to a projective scalar
        let w = u.compose(&v);
        assert!(w.b().is_zero() && w.c().is_zero());
        assert_eq!(w.a(), w.d());
        // and as rational functions, exactly the identity
        assert_eq!(
            u.apply_to(&v.to_ratfunc()).unwrap(),
            RatFunc::identity(&k.one())
        );
    }

    #[test]
    fn compose_matrix_law() {
        // compose(t + l, l'·t) = l'·t + l over Q
        let tr = MoebiusUnit::affine(Rat::one(), Rat::from_int(5)).unwrap();
        let sc = MoebiusUnit::affine(Rat::from_int(3), Rat::zero()).unwrap();
        let c = tr.compose(&sc);
        assert_eq!(c.a(), &Rat::from_int(3));
        assert_eq!(c.b(), &Rat::from_int(5));
        // compose with identity
        let id = MoebiusUnit::identity(&Rat::one());
        assert_eq!(c.compose(&id), c);
    }

    #[test]
    fn determinant_multiplicative() {
        let u = MoebiusUnit::new(Rat::from_int(2), Rat::from_int(1), Rat::from_int(1), Rat::from_int(1)).unwrap();
        let w = MoebiusUnit::new(Rat::from_int(0), Rat::from_int(1), Rat::from_int(1), Rat::from_int(4)).unwrap();
        assert_eq!(
            u.compose(&w).determinant(),
            u.determinant() * w.determinant()
        );
    }
}
