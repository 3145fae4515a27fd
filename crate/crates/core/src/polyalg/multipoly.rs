//! Sparse multivariate polynomials in graded lexicographic order.

use std::collections::BTreeMap;
use std::fmt;

use crate::exactnum::Rat;
use crate::ring::Ring;

/// An exponent vector, ordered graded-lex with the first variable largest.
#[derive(Clone, PartialEq, Eq, Debug, Hash)]
pub struct Monomial(pub Vec<u32>);

impl Monomial {
    pub fn total_degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        Monomial(self.0.iter().zip(&rhs.0).map(|(a, b)| a + b).collect())
    }

    /// Componentwise quotient; `None` when some exponent would go negative.
    pub fn div(&self, rhs: &Self) -> Option<Self> {
        self.0
            .iter()
            .zip(&rhs.0)
            .map(|(a, b)| a.checked_sub(*b))
            .collect::<Option<Vec<_>>>()
            .map(Monomial)
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.total_degree()
            .cmp(&other.total_degree())
            // lex tie-break: a higher exponent on an earlier variable wins
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

/// A sparse multivariate polynomial. Zero coefficients are never stored.
#[derive(Clone, PartialEq, Eq)]
pub struct MultiPoly<C> {
    nvars: usize,
    terms: BTreeMap<Monomial, C>,
}

impl<C: Ring> MultiPoly<C> {
    pub fn zero(nvars: usize) -> Self {
        MultiPoly {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(nvars: usize, c: C) -> Self {
        let mut p = Self::zero(nvars);
        p.add_term(Monomial(vec![0; nvars]), c);
        p
    }

    /// The variable `x_i`.
    pub fn var(nvars: usize, i: usize, one: C) -> Self {
        assert!(i < nvars);
        let mut exps = vec![0; nvars];
        exps[i] = 1;
        let mut p = Self::zero(nvars);
        p.add_term(Monomial(exps), one);
        p
    }

    pub fn from_terms(nvars: usize, terms: impl IntoIterator<Item = (Vec<u32>, C)>) -> Self {
        let mut p = Self::zero(nvars);
        for (exps, c) in terms {
            assert_eq!(exps.len(), nvars, "exponent vector arity mismatch");
            p.add_term(Monomial(exps), c);
        }
        p
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Terms in ascending graded-lex order.
    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &C)> {
        self.terms.iter()
    }

    /// Terms in descending graded-lex order (leading term first).
    pub fn terms_desc(&self) -> impl Iterator<Item = (&Monomial, &C)> {
        self.terms.iter().rev()
    }

    pub fn coeff(&self, exps: &[u32]) -> Option<&C> {
        self.terms.get(&Monomial(exps.to_vec()))
    }

    pub fn leading_term(&self) -> Option<(&Monomial, &C)> {
        self.terms.iter().next_back()
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(Monomial::total_degree).max()
    }

    pub fn add_term(&mut self, m: Monomial, c: C) {
        debug_assert_eq!(m.0.len(), self.nvars);
        if c.is_zero() {
            return;
        }
        match self.terms.remove(&m) {
            None => {
                self.terms.insert(m, c);
            }
            Some(old) => {
                let s = old.add(&c);
                if !s.is_zero() {
                    self.terms.insert(m, s);
                }
            }
        }
    }

    pub fn add(&self, rhs: &Self) -> Self {
        assert_eq!(self.nvars, rhs.nvars);
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        self.add(&rhs.neg())
    }

    pub fn neg(&self) -> Self {
        MultiPoly {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.clone(), c.neg()))
                .collect(),
        }
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        assert_eq!(self.nvars, rhs.nvars);
        let mut out = Self::zero(self.nvars);
        for (m1, c1) in &self.terms {
            for (m2, c2) in &rhs.terms {
                out.add_term(m1.mul(m2), c1.mul(c2));
            }
        }
        out
    }

    pub fn scale(&self, c: &C) -> Self {
        let mut out = Self::zero(self.nvars);
        for (m, a) in &self.terms {
            out.add_term(m.clone(), a.mul(c));
        }
        out
    }

    pub fn pow(&self, e: usize) -> Self {
        let mut acc: Option<Self> = None;
        for _ in 0..e {
            acc = Some(match acc {
                None => self.clone(),
                Some(a) => a.mul(self),
            });
        }
        acc.unwrap_or_else(|| {
            let one = self
                .terms
                .values()
                .next()
                .map(|c| c.one_like())
                .expect("0^0 of the zero polynomial has no coefficient context");
            Self::constant(self.nvars, one)
        })
    }

    /// Exact division by a single divisor via leading-term cancellation in
    /// graded-lex order. `None` when the division is not exact.
    pub fn exact_div(&self, rhs: &Self) -> Option<Self> {
        assert_eq!(self.nvars, rhs.nvars);
        let (lm, lc) = rhs.leading_term()?;
        let (lm, lc) = (lm.clone(), lc.clone());
        let mut rem = self.clone();
        let mut q = Self::zero(self.nvars);
        while let Some((rm, rc)) = rem.leading_term() {
            let m = rm.div(&lm)?;
            let c = rc.exact_div(&lc)?;
            let mut t = Self::zero(self.nvars);
            t.add_term(m, c);
            rem = rem.sub(&t.mul(rhs));
            q = q.add(&t);
        }
        Some(q)
    }

    /// Evaluation at ring values, mapping coefficients through `embed`.
    pub fn eval_map<T: Ring>(&self, args: &[T], embed: impl Fn(&C) -> T) -> T {
        assert_eq!(args.len(), self.nvars, "argument arity mismatch");
        assert!(!args.is_empty(), "evaluation needs at least one argument");
        let mut acc = args[0].zero_like();
        for (m, c) in &self.terms {
            let mut t = embed(c);
            for (x, &e) in args.iter().zip(&m.0) {
                for _ in 0..e {
                    t = t.mul(x);
                }
            }
            acc = acc.add(&t);
        }
        acc
    }

    pub fn eval(&self, args: &[C]) -> C {
        self.eval_map(args, C::clone)
    }

    /// Substitutes 1 for variable `var` and drops it, leaving `nvars - 1`
    /// variables.
    pub fn dehomogenize(&self, var: usize) -> Self {
        assert!(var < self.nvars);
        let mut out = Self::zero(self.nvars - 1);
        for (m, c) in &self.terms {
            let mut exps = m.0.clone();
            exps.remove(var);
            out.add_term(Monomial(exps), c.clone());
        }
        out
    }

    /// The homogeneous part of total degree `d`.
    pub fn degree_part(&self, d: u32) -> Self {
        let mut out = Self::zero(self.nvars);
        for (m, c) in &self.terms {
            if m.total_degree() == d {
                out.add_term(m.clone(), c.clone());
            }
        }
        out
    }

    pub fn map_coeffs<T: Ring>(&self, f: impl Fn(&C) -> T) -> MultiPoly<T> {
        let mut out = MultiPoly::zero(self.nvars);
        for (m, c) in &self.terms {
            out.add_term(m.clone(), f(c));
        }
        out
    }

    pub fn render(&self, names: &[&str]) -> String
    where
        C: fmt::Display,
    {
        assert_eq!(names.len(), self.nvars);
        if self.is_zero() {
            return "0".to_string();
        }
        let mut parts = Vec::new();
        for (m, c) in self.terms_desc() {
            let vars: Vec<String> = m
                .0
                .iter()
                .enumerate()
                .filter(|(_, &e)| e > 0)
                .map(|(i, &e)| {
                    if e == 1 {
                        names[i].to_string()
                    } else {
                        format!("{}^{}", names[i], e)
                    }
                })
                .collect();
            if vars.is_empty() {
                parts.push(format!("({c})"));
            } else {
                parts.push(format!("({})*{}", c, vars.join("*")));
            }
        }
        parts.join(" + ")
    }
}

impl MultiPoly<Rat> {
    pub fn content(&self) -> Rat {
        self.terms
            .values()
            .fold(Rat::zero(), |acc, c| acc.gcd(c))
    }

    /// Scalar-canonical form: content 1 and positive leading coefficient
    /// in graded-lex order. Returns the applied scalar `s` with
    /// `self = s · canonical`.
    pub fn canonical_scaled(&self) -> (Self, Rat) {
        match self.leading_term() {
            None => (self.clone(), Rat::one()),
            Some((_, lead)) => {
                let mut s = self.content();
                if lead.is_negative() {
                    s = -s;
                }
                (self.scale(&s.inv().unwrap()), s)
            }
        }
    }

    pub fn canonical(&self) -> Self {
        self.canonical_scaled().0
    }
}

impl<C: fmt::Debug> fmt::Debug for MultiPoly<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "mpoly[{} vars]{:?}", self.nvars, self.terms)
    }
}

impl<C: Ring> Ring for MultiPoly<C> {
    fn zero_like(&self) -> Self {
        Self::zero(self.nvars)
    }

    fn one_like(&self) -> Self {
        let one = self
            .terms
            .values()
            .next()
            .map(|c| c.one_like())
            .expect("one_like on the zero polynomial");
        Self::constant(self.nvars, one)
    }

    fn is_zero(&self) -> bool {
        MultiPoly::is_zero(self)
    }
    fn add(&self, rhs: &Self) -> Self {
        MultiPoly::add(self, rhs)
    }
    fn sub(&self, rhs: &Self) -> Self {
        MultiPoly::sub(self, rhs)
    }
    fn mul(&self, rhs: &Self) -> Self {
        MultiPoly::mul(self, rhs)
    }
    fn neg(&self) -> Self {
        MultiPoly::neg(self)
    }
    fn exact_div(&self, rhs: &Self) -> Option<Self> {
        MultiPoly::exact_div(self, rhs)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn mp(terms: &[(&[u32], i64)]) -> MultiPoly<Rat> {
        MultiPoly::from_terms(
            3,
            terms
                .iter()
                .map(|(e, c)| (e.to_vec(), Rat::from_int(*c))),
        )
    }

    #[test]
    fn grlex_order() {
        // x0^2 > x0 x1 > x1^2 > x0 > x2
        let ms = [
            Monomial(vec![2, 0, 0]),
            Monomial(vec![1, 1, 0]),
            Monomial(vec![0, 2, 0]),
            Monomial(vec![1, 0, 0]),
            Monomial(vec![0, 0, 1]),
        ];
        for w in ms.windows(2) {
            assert!(w[0] > w[1], "{:?} should exceed {:?}", w[0], w[1]);
        }
    }

    #[test]
    fn mul_and_exact_div_round_trip() {
        let a = mp(&[(&[1, 0, 0], 2), (&[0, 1, 0], -3), (&[0, 0, 0], 1)]);
        let b = mp(&[(&[1, 1, 0], 1), (&[0, 0, 2], 5)]);
        let prod = a.mul(&b);
        assert_eq!(prod.exact_div(&b), Some(a.clone()));
        assert_eq!(prod.exact_div(&a), Some(b));
        let c = mp(&[(&[0, 0, 1], 1), (&[0, 0, 0], 1)]);
        assert_eq!(prod.exact_div(&c), None);
    }

    #[test]
    fn eval_and_dehomogenize() {
        let p = mp(&[(&[2, 0, 0], 1), (&[0, 1, 1], -2)]);
        let args = [Rat::from_int(3), Rat::from_int(1), Rat::from_int(4)];
        assert_eq!(p.eval(&args), Rat::from_int(9 - 8));
        let q = p.dehomogenize(2);
        assert_eq!(q.nvars(), 2);
        assert_eq!(
            q.eval(&[Rat::from_int(3), Rat::from_int(1)]),
            Rat::from_int(7)
        );
    }

    #[test]
    fn canonical_form() {
        let p = mp(&[(&[2, 0, 0], -4), (&[0, 0, 0], 6)]);
        let (c, s) = p.canonical_scaled();
        assert_eq!(s, Rat::from_int(-2));
        assert_eq!(c, mp(&[(&[2, 0, 0], 2), (&[0, 0, 0], -3)]));
        assert_eq!(c.scale(&s), p);
    }
}
