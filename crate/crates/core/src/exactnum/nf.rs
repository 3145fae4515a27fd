//! Number fields `L = Q[x]/(M)` and their elements.

use std::fmt;
use std::sync::Arc;

use crate::exactnum::irreducible::{certify_irreducible, Irreducibility};
use crate::exactnum::Rat;
use crate::linalg::Mat;
use crate::polyalg::UniPoly;
use crate::ring::{FieldOps, Ring};

/// Errors raised while constructing a [`NumberField`].
#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum FieldError {
    #[error("defining polynomial must have degree at least 1")]
    DegreeZero,
    #[error("defining polynomial must be monic")]
    NotMonic,
    #[error("defining polynomial is reducible, witness factor {}", .0.render("t"))]
    Reducible(UniPoly<Rat>),
    #[error("irreducibility of the defining polynomial could not be certified within the work budget")]
    Inconclusive,
}

/// The field `Q(alpha)` presented by the monic irreducible minimal polynomial
/// of its primitive element `alpha`.
#[derive(Clone)]
pub struct NumberField {
    minpoly: Vec<Rat>, // monic, constant term first, length degree + 1
    degree: usize,
}

impl PartialEq for NumberField {
    fn eq(&self, other: &Self) -> bool {
        self.minpoly == other.minpoly
    }
}

impl Eq for NumberField {}

impl fmt::Debug for NumberField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Q[a]/({})", UniPoly::new(self.minpoly.clone()).render("a"))
    }
}

impl NumberField {
    /// Builds the field after certifying that `minpoly` is monic, squarefree
    /// and irreducible over `Q`. Construction is refused otherwise; an
    /// inconclusive certification is also a refusal.
    pub fn new(minpoly: Vec<Rat>) -> Result<Arc<Self>, FieldError> {
        let p = UniPoly::new(minpoly);
        match p.degree() {
            None | Some(0) => return Err(FieldError::DegreeZero),
            Some(_) if !p.is_monic() => return Err(FieldError::NotMonic),
            _ => {}
        }
        match certify_irreducible(&p).map_err(|_| FieldError::NotMonic)? {
            Irreducibility::Irreducible => Ok(Self::new_certified(p.coeffs().to_vec())?),
            Irreducibility::Reducible(f) => Err(FieldError::Reducible(f)),
            Irreducibility::Unknown => Err(FieldError::Inconclusive),
        }
    }

    /// Builds the field from a polynomial the caller has already proved
    /// irreducible (for instance the output of [`NFElement::minimal_polynomial`],
    /// which is minimal by construction). Only monicity and the degree are
    /// checked.
    pub fn new_certified(minpoly: Vec<Rat>) -> Result<Arc<Self>, FieldError> {
        let p = UniPoly::new(minpoly);
        let degree = match p.degree() {
            None | Some(0) => return Err(FieldError::DegreeZero),
            Some(d) => d,
        };
        if !p.is_monic() {
            return Err(FieldError::NotMonic);
        }
        Ok(Arc::new(NumberField {
            minpoly: p.coeffs().to_vec(),
            degree,
        }))
    }

    /// Convenience constructor from integer coefficients, constant term first.
    pub fn from_int_minpoly(coeffs: &[i64]) -> Result<Arc<Self>, FieldError> {
        Self::new(coeffs.iter().map(|&c| Rat::from_int(c)).collect())
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    /// Coefficients of the defining polynomial, constant term first.
    pub fn minpoly_coeffs(&self) -> &[Rat] {
        &self.minpoly
    }

    pub fn minpoly(&self) -> UniPoly<Rat> {
        UniPoly::new(self.minpoly.clone())
    }

    /// Reduces a polynomial in `alpha` (coefficients constant-term first) to
    /// its canonical representative of degree < n.
    fn reduce(&self, coeffs: &mut Vec<Rat>) {
        let n = self.degree;
        while coeffs.len() > n {
            let top = coeffs.pop().unwrap();
            if top.is_zero() {
                continue;
            }
            let k = coeffs.len() - n; // top was the coefficient of x^(n+k)
            for i in 0..n {
                let delta = &top * &self.minpoly[i];
                coeffs[k + i] = &coeffs[k + i] - &delta;
            }
        }
        coeffs.resize(n, Rat::zero());
    }

    /// Element from polynomial coefficients in `alpha` (any length; reduced).
    pub fn element(self: &Arc<Self>, mut coords: Vec<Rat>) -> NFElement {
        self.reduce(&mut coords);
        NFElement {
            field: Arc::clone(self),
            coords,
        }
    }

    pub fn element_from_ints(self: &Arc<Self>, coords: &[i64]) -> NFElement {
        self.element(coords.iter().map(|&c| Rat::from_int(c)).collect())
    }

    pub fn scalar(self: &Arc<Self>, r: Rat) -> NFElement {
        self.element(vec![r])
    }

    pub fn zero(self: &Arc<Self>) -> NFElement {
        self.element(Vec::new())
    }

    pub fn one(self: &Arc<Self>) -> NFElement {
        self.scalar(Rat::one())
    }

    /// The primitive element `alpha`.
    pub fn alpha(self: &Arc<Self>) -> NFElement {
        self.element(vec![Rat::zero(), Rat::one()])
    }

    /// Lifts a rational polynomial to one with coefficients in this field.
    pub fn lift_poly(self: &Arc<Self>, p: &UniPoly<Rat>) -> UniPoly<NFElement> {
        UniPoly::new(p.coeffs().iter().map(|c| self.scalar(c.clone())).collect())
    }
}

/// An element of a number field: coordinates on `1, alpha, …, alpha^(n-1)`.
#[derive(Clone)]
pub struct NFElement {
    field: Arc<NumberField>,
    coords: Vec<Rat>, // length == field.degree
}

impl PartialEq for NFElement {
    fn eq(&self, other: &Self) -> bool {
        self.field == other.field && self.coords == other.coords
    }
}

impl Eq for NFElement {}

impl NFElement {
    pub fn field(&self) -> &Arc<NumberField> {
        &self.field
    }

    /// Coordinates on the power basis, length `n`.
    pub fn coords(&self) -> &[Rat] {
        &self.coords
    }

    pub fn coord(&self, i: usize) -> Rat {
        self.coords.get(i).cloned().unwrap_or_else(Rat::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(Rat::is_zero)
    }

    pub fn is_one(&self) -> bool {
        self.coords[0].is_one() && self.coords[1..].iter().all(Rat::is_zero)
    }

    /// True when the element lies in the base field `Q`.
    pub fn is_rational(&self) -> bool {
        self.coords[1..].iter().all(Rat::is_zero)
    }

    pub fn to_rat(&self) -> Option<Rat> {
        self.is_rational().then(|| self.coords[0].clone())
    }

    fn check_same_field(&self, other: &Self) {
        assert!(
            Arc::ptr_eq(&self.field, &other.field) || self.field == other.field,
            "elements of different number fields"
        );
    }

    pub fn add(&self, rhs: &Self) -> Self {
        self.check_same_field(rhs);
        let coords = self
            .coords
            .iter()
            .zip(&rhs.coords)
            .map(|(a, b)| a + b)
            .collect();
        NFElement {
            field: Arc::clone(&self.field),
            coords,
        }
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        self.add(&rhs.neg())
    }

    pub fn neg(&self) -> Self {
        NFElement {
            field: Arc::clone(&self.field),
            coords: self.coords.iter().map(|c| -c).collect(),
        }
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        self.check_same_field(rhs);
        let n = self.field.degree;
        let mut out = vec![Rat::zero(); 2 * n - 1];
        for (i, a) in self.coords.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coords.iter().enumerate() {
                out[i + j] = &out[i + j] + &(a * b);
            }
        }
        self.field.element(out)
    }

    pub fn scale(&self, r: &Rat) -> Self {
        NFElement {
            field: Arc::clone(&self.field),
            coords: self.coords.iter().map(|c| c * r).collect(),
        }
    }

    /// Multiplicative inverse via the extended Euclidean algorithm against the
    /// minimal polynomial. `None` for zero.
    pub fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        let a = UniPoly::new(self.coords.clone());
        let m = self.field.minpoly();
        let (g, s, _) = a.extended_gcd(&m);
        debug_assert!(g.degree() == Some(0), "minimal polynomial not irreducible");
        Some(self.field.element(s.coeffs().to_vec()))
    }

    pub fn div(&self, rhs: &Self) -> Option<Self> {
        rhs.inv().map(|i| self.mul(&i))
    }

    pub fn pow(&self, e: i64) -> Option<Self> {
        let base = if e < 0 { self.inv()? } else { self.clone() };
        let mut acc = self.field.one();
        let mut k = e.unsigned_abs();
        let mut b = base;
        while k > 0 {
            if k & 1 == 1 {
                acc = acc.mul(&b);
            }
            k >>= 1;
            if k > 0 {
                b = b.mul(&b);
            }
        }
        Some(acc)
    }

    /// The monic minimal polynomial of this element over `Q`.
    ///
    /// Computed by Gaussian elimination: the first power `beta^r` that is a
    /// `Q`-linear combination of `1, beta, …, beta^(r-1)` yields the monic
    /// dependency. The result is irreducible by minimality and its degree
    /// divides the field degree.
    pub fn minimal_polynomial(&self) -> UniPoly<Rat> {
        let n = self.field.degree;
        let mut powers: Vec<NFElement> = vec![self.field.one()];
        for _ in 1..=n {
            let next = powers.last().unwrap().mul(self);
            // rows: coordinates of 1, beta, ..., beta^(r-1); solve rows^T x = next
            let rows: Vec<Vec<Rat>> = powers.iter().map(|p| p.coords.clone()).collect();
            if let Some(sol) = Mat::from_rows(rows).solve_transposed(next.coords()) {
                let mut coeffs: Vec<Rat> = sol.into_iter().map(|c| -c).collect();
                coeffs.push(Rat::one());
                return UniPoly::new(coeffs);
            }
            powers.push(next);
        }
        unreachable!("every element of a degree-n field satisfies a degree <= n relation")
    }

    /// Expresses `self` on the power basis `1, gamma, …, gamma^(r-1)` of the
    /// subfield `Q(gamma)`, where `r = deg(minpoly(gamma))`. `None` when
    /// `self` does not lie in `Q(gamma)`.
    pub fn in_power_basis_of(&self, gamma: &Self) -> Option<Vec<Rat>> {
        self.check_same_field(gamma);
        let r = gamma.minimal_polynomial().degree().unwrap();
        let mut rows = Vec::with_capacity(r);
        let mut p = self.field.one();
        for _ in 0..r {
            rows.push(p.coords.clone());
            p = p.mul(gamma);
        }
        Mat::from_rows(rows).solve_transposed(self.coords())
    }

    /// The matrix of multiplication by `self` on the power basis of `alpha`:
    /// column `j` holds the coordinates of `self * alpha^j`.
    pub fn mult_matrix(&self) -> Mat<Rat> {
        let n = self.field.degree;
        let mut cols = Vec::with_capacity(n);
        let mut p = self.clone();
        for j in 0..n {
            cols.push(p.coords.clone());
            if j + 1 < n {
                p = p.mul(&self.field.alpha());
            }
        }
        Mat::from_cols(cols)
    }
}

impl fmt::Display for NFElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let terms: Vec<String> = self
            .coords
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| match i {
                0 => format!("{c}"),
                1 => format!("{c}*a"),
                _ => format!("{c}*a^{i}"),
            })
            .collect();
        write!(f, "{}", terms.join(" + "))
    }
}

impl fmt::Debug for NFElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

macro_rules! nf_binop {
    ($trait:ident, $method:ident) => {
        impl std::ops::$trait for &NFElement {
            type Output = NFElement;
            fn $method(self, rhs: &NFElement) -> NFElement {
                NFElement::$method(self, rhs)
            }
        }
        impl std::ops::$trait for NFElement {
            type Output = NFElement;
            fn $method(self, rhs: NFElement) -> NFElement {
                NFElement::$method(&self, &rhs)
            }
        }
    };
}

nf_binop!(Add, add);
nf_binop!(Sub, sub);
nf_binop!(Mul, mul);

impl std::ops::Neg for &NFElement {
    type Output = NFElement;
    fn neg(self) -> NFElement {
        NFElement::neg(self)
    }
}

impl std::ops::Neg for NFElement {
    type Output = NFElement;
    fn neg(self) -> NFElement {
        NFElement::neg(&self)
    }
}

impl Ring for NFElement {
    fn zero_like(&self) -> Self {
        self.field.zero()
    }
    fn one_like(&self) -> Self {
        self.field.one()
    }
    fn is_zero(&self) -> bool {
        NFElement::is_zero(self)
    }
    fn add(&self, rhs: &Self) -> Self {
        NFElement::add(self, rhs)
    }
    fn sub(&self, rhs: &Self) -> Self {
        NFElement::sub(self, rhs)
    }
    fn mul(&self, rhs: &Self) -> Self {
        NFElement::mul(self, rhs)
    }
    fn neg(&self) -> Self {
        NFElement::neg(self)
    }
    fn exact_div(&self, rhs: &Self) -> Option<Self> {
        NFElement::div(self, rhs)
    }
}

impl FieldOps for NFElement {
    fn inv(&self) -> Option<Self> {
        NFElement::inv(self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cubic_field() -> Arc<NumberField> {
        // alpha^3 + 2 alpha + 2 = 0
        NumberField::from_int_minpoly(&[2, 2, 0, 1]).unwrap()
    }

    #[test]
    fn arithmetic_reduces_mod_minpoly() {
        let k = cubic_field();
        let a = k.alpha();
        // alpha * alpha^2 = alpha^3 = -2 alpha - 2
        let a2 = a.mul(&a);
        assert_eq!(a.mul(&a2), k.element_from_ints(&[-2, -2, 0]));
    }

    #[test]
    fn inverse_of_one_and_alpha() {
        let k = cubic_field();
        assert_eq!(k.one().inv().unwrap(), k.one());
        // 1/alpha = -(alpha^2 + 2)/2
        let inv = k.alpha().inv().unwrap();
        assert_eq!(
            inv,
            k.element(vec![Rat::from_int(-1), Rat::zero(), Rat::new(-1, 2)])
        );
        assert!(k.alpha().mul(&inv).is_one());
        assert!(k.zero().inv().is_none());
    }

    #[test]
    fn inv_round_trips_on_random_elements() {
        let k = cubic_field();
        for coords in [[1, 2, 3], [0, 1, 0], [5, -7, 2], [-1, 0, 4]] {
            let x = k.element_from_ints(&coords);
            let y = k.element_from_ints(&[2, 0, -1]);
            let lhs = x.inv().unwrap().mul(&x.mul(&y));
            assert_eq!(lhs, y);
        }
    }

    #[test]
    fn minimal_polynomial_of_primitive_and_subfield_elements() {
        let k = cubic_field();
        // primitive element returns the defining polynomial
        assert_eq!(k.alpha().minimal_polynomial(), k.minpoly());
        // -alpha has minimal polynomial t^3 + 2t - 2
        assert_eq!(
            k.alpha().neg().minimal_polynomial(),
            UniPoly::from_ints(&[-2, 2, 0, 1])
        );
        // alpha^2 in Q[a]/(a^4+1) has minimal polynomial t^2 + 1
        let k4 = NumberField::from_int_minpoly(&[1, 0, 0, 0, 1]).unwrap();
        let beta = k4.alpha().pow(2).unwrap();
        assert_eq!(beta.minimal_polynomial(), UniPoly::from_ints(&[1, 0, 1]));
    }

    #[test]
    fn minimal_polynomial_degree_divides_field_degree() {
        let k4 = NumberField::from_int_minpoly(&[1, 0, 0, 0, 1]).unwrap();
        for coords in [[0, 0, 1, 0], [1, 1, 0, 0], [0, 2, 0, 1], [3, 0, 0, 0]] {
            let x = k4.element_from_ints(&coords);
            let d = x.minimal_polynomial().degree().unwrap();
            assert_eq!(4 % d, 0, "degree {d} must divide 4");
            // evaluated at x, the minimal polynomial vanishes exactly
            let val = x.minimal_polynomial().eval_map(&x, |c| k4.scalar(c.clone()));
            assert!(val.is_zero());
        }
    }

    #[test]
    fn power_basis_change() {
        // beta = alpha^3 + 1 is primitive in Q[a]/(a^4+1)
        let k4 = NumberField::from_int_minpoly(&[1, 0, 0, 0, 1]).unwrap();
        let beta = k4.element_from_ints(&[1, 0, 0, 1]);
        assert_eq!(beta.minimal_polynomial(), UniPoly::from_ints(&[2, -4, 6, -4, 1]));
        // alpha = (beta - 1)^3 expressed on the beta power basis
        let alpha = k4.alpha();
        let coords = alpha.in_power_basis_of(&beta).unwrap();
        assert_eq!(
            coords,
            vec![Rat::from_int(-1), Rat::from_int(3), Rat::from_int(-3), Rat::from_int(1)]
        );
        // an element outside a strict subfield has no expansion
        let gamma = k4.alpha().pow(2).unwrap(); // Q(alpha^2) has degree 2
        assert!(alpha.in_power_basis_of(&gamma).is_none());
    }

    #[test]
    fn field_construction_guards() {
        assert!(matches!(
            NumberField::from_int_minpoly(&[-1, 0, 1]),
            Err(FieldError::Reducible(_))
        ));
        assert!(matches!(
            NumberField::from_int_minpoly(&[5]),
            Err(FieldError::DegreeZero)
        ));
        assert!(matches!(
            NumberField::new(vec![Rat::one(), Rat::zero(), Rat::from_int(2)]),
            Err(FieldError::NotMonic)
        ));
    }
}
