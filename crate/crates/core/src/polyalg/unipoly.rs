//! Dense univariate polynomials over a generic coefficient domain.

use std::fmt;

use crate::exactnum::Rat;
use crate::ring::{mul_small, FieldOps, Ring};

/// A univariate polynomial, stored as coefficients from the constant term up.
///
/// The zero polynomial is the empty coefficient list; a nonzero polynomial
/// never stores a zero leading coefficient. Polynomials do not carry the name
/// of their indeterminate — rendering and serialization supply it.
#[derive(Clone, PartialEq, Eq)]
pub struct UniPoly<C> {
    coeffs: Vec<C>,
}

impl<C: Ring> UniPoly<C> {
    pub fn new(mut coeffs: Vec<C>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        UniPoly { coeffs }
    }

    pub fn zero() -> Self {
        UniPoly { coeffs: Vec::new() }
    }

    pub fn constant(c: C) -> Self {
        Self::new(vec![c])
    }

    /// `c · t^k`.
    pub fn monomial(c: C, k: usize) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![c.zero_like(); k];
        coeffs.push(c);
        UniPoly { coeffs }
    }

    /// The identity polynomial `t`, with identities drawn from `one`.
    pub fn var(one: &C) -> Self {
        Self::monomial(one.one_like(), 1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeffs(&self) -> &[C] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> Option<&C> {
        self.coeffs.get(i)
    }

    pub fn leading(&self) -> Option<&C> {
        self.coeffs.last()
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn add(&self, rhs: &Self) -> Self {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for i in 0..n {
            let c = match (self.coeffs.get(i), rhs.coeffs.get(i)) {
                (Some(a), Some(b)) => a.add(b),
                (Some(a), None) => a.clone(),
                (None, Some(b)) => b.clone(),
                (None, None) => unreachable!(),
            };
            out.push(c);
        }
        Self::new(out)
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        self.add(&rhs.neg())
    }

    pub fn neg(&self) -> Self {
        UniPoly {
            coeffs: self.coeffs.iter().map(|c| c.neg()).collect(),
        }
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        if self.is_zero() || rhs.is_zero() {
            return Self::zero();
        }
        let zero = self.coeffs[0].zero_like();
        let mut out = vec![zero; self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] = out[i + j].add(&a.mul(b));
            }
        }
        Self::new(out)
    }

    pub fn scale(&self, c: &C) -> Self {
        Self::new(self.coeffs.iter().map(|a| a.mul(c)).collect())
    }

    /// Multiply by `t^k`.
    pub fn shift_up(&self, k: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![self.coeffs[0].zero_like(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        UniPoly { coeffs }
    }

    pub fn pow(&self, e: usize) -> Self {
        match (e, self.coeffs.first()) {
            (0, Some(c)) => Self::constant(c.one_like()),
            (0, None) => panic!("0^0 of the zero polynomial has no coefficient context"),
            _ => {
                let mut acc = self.clone();
                for _ in 1..e {
                    acc = acc.mul(self);
                }
                acc
            }
        }
    }

    pub fn eval(&self, x: &C) -> C {
        let mut acc = x.zero_like();
        for c in self.coeffs.iter().rev() {
            acc = acc.mul(x).add(c);
        }
        acc
    }

    /// Horner evaluation into another ring, mapping each coefficient through
    /// `embed`. This is also polynomial composition when `T` is a polynomial
    /// ring or a field of rational functions.
    pub fn eval_map<T: Ring>(&self, x: &T, embed: impl Fn(&C) -> T) -> T {
        let mut acc = x.zero_like();
        for c in self.coeffs.iter().rev() {
            acc = acc.mul(x).add(&embed(c));
        }
        acc
    }

    /// Composition `self(g)`.
    pub fn compose(&self, g: &Self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        // evaluate in the polynomial ring via Horner
        let mut acc = Self::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc.mul(g).add(&Self::constant(c.clone()));
        }
        acc
    }

    pub fn derivative(&self) -> Self {
        if self.coeffs.len() <= 1 {
            return Self::zero();
        }
        Self::new(
            self.coeffs[1..]
                .iter()
                .enumerate()
                .map(|(i, c)| mul_small(c, i + 1))
                .collect(),
        )
    }

    /// Exact division in `R[t]` for an integral domain `R`.
    ///
    /// Returns `None` when `rhs` does not divide `self` exactly; partial
    /// results are never returned.
    pub fn exact_div(&self, rhs: &Self) -> Option<Self> {
        if rhs.is_zero() {
            return None;
        }
        if self.is_zero() {
            return Some(Self::zero());
        }
        let (dn, dd) = (self.degree()?, rhs.degree()?);
        if dn < dd {
            return None;
        }
        let lead = rhs.leading().unwrap();
        let mut rem = self.clone();
        let mut q = vec![self.coeffs[0].zero_like(); dn - dd + 1];
        while !rem.is_zero() {
            let dr = rem.degree().unwrap();
            if dr < dd {
                return None;
            }
            let qc = rem.leading().unwrap().exact_div(lead)?;
            q[dr - dd] = qc.clone();
            rem = rem.sub(&rhs.mul(&Self::monomial(qc, dr - dd)));
        }
        Some(Self::new(q))
    }

    pub fn render(&self, var: &str) -> String
    where
        C: fmt::Display,
    {
        if self.is_zero() {
            return "0".to_string();
        }
        let terms: Vec<String> = self
            .coeffs
            .iter()
            .enumerate()
            .rev()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| match i {
                0 => format!("({c})"),
                1 => format!("({c})*{var}"),
                _ => format!("({c})*{var}^{i}"),
            })
            .collect();
        terms.join(" + ")
    }
}

impl<C: FieldOps> UniPoly<C> {
    /// Quotient and remainder; panics if `rhs` is zero.
    pub fn div_rem(&self, rhs: &Self) -> (Self, Self) {
        let dd = rhs.degree().expect("division by the zero polynomial");
        let lead_inv = rhs.leading().unwrap().inv().unwrap();
        let mut rem = self.clone();
        let mut q = Self::zero();
        while let Some(dr) = rem.degree() {
            if dr < dd {
                break;
            }
            let qc = rem.leading().unwrap().mul(&lead_inv);
            let term = Self::monomial(qc, dr - dd);
            rem = rem.sub(&rhs.mul(&term));
            q = q.add(&term);
        }
        (q, rem)
    }

    /// Monic gcd. `gcd(0, 0) = 0`.
    pub fn gcd(&self, rhs: &Self) -> Self {
        let mut a = self.clone();
        let mut b = rhs.clone();
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b);
            a = b;
            b = r;
        }
        a.make_monic()
    }

    /// Extended gcd: `(g, s, t)` with `g = s·self + t·rhs` and `g` monic.
    pub fn extended_gcd(&self, rhs: &Self) -> (Self, Self, Self) {
        let sample = self
            .coeffs
            .first()
            .or_else(|| rhs.coeffs.first())
            .expect("extended gcd of two zero polynomials")
            .clone();
        let one = Self::constant(sample.one_like());
        let (mut r0, mut r1) = (self.clone(), rhs.clone());
        let (mut s0, mut s1) = (one.clone(), Self::zero());
        let (mut t0, mut t1) = (Self::zero(), one);
        while !r1.is_zero() {
            let (q, r) = r0.div_rem(&r1);
            (r0, r1) = (r1, r);
            (s0, s1) = (s1.clone(), s0.sub(&q.mul(&s1)));
            (t0, t1) = (t1.clone(), t0.sub(&q.mul(&t1)));
        }
        if let Some(lead) = r0.leading() {
            let inv = lead.inv().unwrap();
            let inv = Self::constant(inv);
            (r0.mul(&inv), s0.mul(&inv), t0.mul(&inv))
        } else {
            (r0, s0, t0)
        }
    }

    pub fn lcm(&self, rhs: &Self) -> Self {
        if self.is_zero() || rhs.is_zero() {
            return Self::zero();
        }
        let g = self.gcd(rhs);
        self.mul(&rhs.exact_div(&g).unwrap()).make_monic()
    }

    pub fn is_monic(&self) -> bool {
        self.leading().is_some_and(|c| c.clone().sub(&c.one_like()).is_zero())
    }

    pub fn make_monic(&self) -> Self {
        match self.leading() {
            None => Self::zero(),
            Some(lead) => self.scale(&lead.inv().unwrap()),
        }
    }
}

impl UniPoly<Rat> {
    /// Convenience constructor from `i64` coefficients, constant term first.
    pub fn from_ints(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| Rat::from_int(c)).collect())
    }

    /// Nonnegative gcd of all coefficients.
    pub fn content(&self) -> Rat {
        self.coeffs
            .iter()
            .fold(Rat::zero(), |acc, c| acc.gcd(c))
    }

    /// Scalar-canonical form: content 1 and positive leading coefficient.
    /// Returns the zero polynomial unchanged.
    pub fn primitive_part(&self) -> Self {
        match self.leading() {
            None => Self::zero(),
            Some(lead) => {
                let mut c = self.content();
                if lead.is_negative() {
                    c = -c;
                }
                self.scale(&c.inv().unwrap())
            }
        }
    }
}

impl<C: fmt::Debug> fmt::Debug for UniPoly<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "poly{:?}", self.coeffs)
    }
}

impl<C: Ring> Ring for UniPoly<C> {
    fn zero_like(&self) -> Self {
        Self::zero()
    }

    /// Panics on the zero polynomial, which carries no coefficient context.
    fn one_like(&self) -> Self {
        let c = self
            .coeffs
            .first()
            .expect("one_like on the zero polynomial")
            .one_like();
        Self::constant(c)
    }

    fn is_zero(&self) -> bool {
        UniPoly::is_zero(self)
    }
    fn add(&self, rhs: &Self) -> Self {
        UniPoly::add(self, rhs)
    }
    fn sub(&self, rhs: &Self) -> Self {
        UniPoly::sub(self, rhs)
    }
    fn mul(&self, rhs: &Self) -> Self {
        UniPoly::mul(self, rhs)
    }
    fn neg(&self) -> Self {
        UniPoly::neg(self)
    }
    fn exact_div(&self, rhs: &Self) -> Option<Self> {
        UniPoly::exact_div(self, rhs)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(coeffs: &[i64]) -> UniPoly<Rat> {
        UniPoly::from_ints(coeffs)
    }

    #[test]
    fn arithmetic_and_degree() {
        let a = p(&[1, 0, 1]); // 1 + t^2
        let b = p(&[-1, 1]); // t - 1
        assert_eq!(a.mul(&b), p(&[-1, 1, -1, 1]));
        assert_eq!(a.add(&b), p(&[0, 1, 1]));
        assert_eq!(a.sub(&a), UniPoly::zero());
        assert_eq!(a.degree(), Some(2));
        assert_eq!(UniPoly::<Rat>::zero().degree(), None);
    }

    #[test]
    fn division_gcd() {
        let a = p(&[-1, 0, 1]); // t^2 - 1
        let b = p(&[-1, 1]); // t - 1
        let (q, r) = a.div_rem(&b);
        assert_eq!(q, p(&[1, 1]));
        assert!(r.is_zero());
        assert_eq!(a.gcd(&b), p(&[-1, 1]));
        assert_eq!(a.exact_div(&b), Some(p(&[1, 1])));
        assert_eq!(p(&[1, 1]).exact_div(&b), None);
    }

    #[test]
    fn exact_div_round_trip() {
        let a = p(&[3, -2, 0, 5]);
        let b = p(&[1, 7, 2]);
        assert_eq!(a.mul(&b).exact_div(&b), Some(a));
    }

    #[test]
    fn compose_example() {
        // (t^2) ∘ (t+1) = t^2 + 2t + 1
        assert_eq!(p(&[0, 0, 1]).compose(&p(&[1, 1])), p(&[1, 2, 1]));
    }

    #[test]
    fn extended_gcd_bezout() {
        let a = p(&[1, 0, 1]);
        let b = p(&[-1, 1]);
        let (g, s, t) = a.extended_gcd(&b);
        assert_eq!(g, p(&[1]));
        assert_eq!(s.mul(&a).add(&t.mul(&b)), g);
    }

    #[test]
    fn content_and_primitive() {
        let a = p(&[-4, 0, -6]);
        assert_eq!(a.content(), Rat::from_int(2));
        assert_eq!(a.primitive_part(), p(&[2, 0, 3]));
    }
}
