//! Sylvester resultants and fraction-free determinants.

use std::sync::Arc;

use crate::exactnum::{NFElement, NumberField, Rat};
use crate::polyalg::{MultiPoly, UniPoly};
use crate::ring::Ring;

/// Fraction-free Bareiss determinant over an integral domain.
///
/// Every interior division is exact by the Bareiss identity, so the result
/// stays in the ring. `one` supplies the identity for the initial pivot.
pub fn determinant_bareiss<C: Ring>(mut m: Vec<Vec<C>>, one: C) -> C {
    let n = m.len();
    if n == 0 {
        return one;
    }
    assert!(m.iter().all(|r| r.len() == n), "determinant of a non-square matrix");
    let mut sign_flip = false;
    let mut prev = one;
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            let Some(p) = (k + 1..n).find(|&r| !m[r][k].is_zero()) else {
                return m[k][k].zero_like();
            };
            m.swap(k, p);
            sign_flip = !sign_flip;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let t = m[k][k].mul(&m[i][j]).sub(&m[i][k].mul(&m[k][j]));
                m[i][j] = t
                    .exact_div(&prev)
                    .expect("Bareiss division is exact over an integral domain");
            }
            m[i][k] = m[i][k].zero_like();
        }
        prev = m[k][k].clone();
    }
    let det = m[n - 1][n - 1].clone();
    if sign_flip {
        det.neg()
    } else {
        det
    }
}

/// The Sylvester matrix of `p` (degree m) and `q` (degree n): `n` shifted
/// rows of `p`'s coefficients above `m` shifted rows of `q`'s, in descending
/// powers.
pub fn sylvester_matrix<C: Ring>(p: &UniPoly<C>, q: &UniPoly<C>) -> Vec<Vec<C>> {
    let dp = p.degree().expect("sylvester matrix of the zero polynomial");
    let dq = q.degree().expect("sylvester matrix of the zero polynomial");
    let n = dp + dq;
    let zero = p.leading().unwrap().zero_like();
    let mut rows = Vec::with_capacity(n);
    for shift in 0..dq {
        let mut row = vec![zero.clone(); n];
        for (i, c) in p.coeffs().iter().enumerate() {
            row[shift + dp - i] = c.clone();
        }
        rows.push(row);
    }
    for shift in 0..dp {
        let mut row = vec![zero.clone(); n];
        for (i, c) in q.coeffs().iter().enumerate() {
            row[shift + dq - i] = c.clone();
        }
        rows.push(row);
    }
    rows
}

/// The resultant `Res(p, q)` as the Sylvester determinant.
///
/// For monic `p`, `Res(p, q) = ∏ q(root)` over the roots of `p`, which is the
/// norm-form used to rationalize denominators. Conventions: if either
/// argument is zero the resultant is zero; if both are nonzero constants it
/// is one.
pub fn resultant<C: Ring>(p: &UniPoly<C>, q: &UniPoly<C>) -> C {
    let sample = p
        .leading()
        .or_else(|| q.leading())
        .expect("resultant of two zero polynomials");
    let one = sample.one_like();
    let (dp, dq) = match (p.degree(), q.degree()) {
        (Some(a), Some(b)) => (a, b),
        _ => return sample.zero_like(),
    };
    match (dp, dq) {
        (0, 0) => one,
        (0, _) => pow_ring(p.leading().unwrap(), dq),
        (_, 0) => pow_ring(q.leading().unwrap(), dp),
        _ => determinant_bareiss(sylvester_matrix(p, q), one),
    }
}

fn pow_ring<C: Ring>(c: &C, e: usize) -> C {
    let mut acc = c.one_like();
    for _ in 0..e {
        acc = acc.mul(c);
    }
    acc
}

/// Rewrites a polynomial over `L = Q(alpha)` as a polynomial in a fresh
/// variable `y` standing for `alpha`, with coefficients in `Q[t]`:
/// `sum_i d_i(alpha) t^i  ->  sum_j c_j(t) y^j`.
fn alpha_to_var_uni(p: &UniPoly<NFElement>, field: &Arc<NumberField>) -> UniPoly<UniPoly<Rat>> {
    let n = field.degree();
    let mut comps: Vec<Vec<Rat>> = vec![vec![Rat::zero(); p.coeffs().len()]; n];
    for (i, c) in p.coeffs().iter().enumerate() {
        for (j, r) in c.coords().iter().enumerate() {
            comps[j][i] = r.clone();
        }
    }
    UniPoly::new(comps.into_iter().map(UniPoly::new).collect())
}

/// Same as [`alpha_to_var_uni`] for multivariate coefficients.
fn alpha_to_var_multi(
    p: &MultiPoly<NFElement>,
    field: &Arc<NumberField>,
) -> UniPoly<MultiPoly<Rat>> {
    let n = field.degree();
    let mut comps: Vec<MultiPoly<Rat>> = vec![MultiPoly::zero(p.nvars()); n];
    for (m, c) in p.terms() {
        for (j, r) in c.coords().iter().enumerate() {
            if !r.is_zero() {
                comps[j].add_term(m.clone(), r.clone());
            }
        }
    }
    UniPoly::new(comps)
}

fn minpoly_over<CC: Ring>(field: &Arc<NumberField>, embed: impl Fn(&Rat) -> CC) -> UniPoly<CC> {
    UniPoly::new(field.minpoly_coeffs().iter().map(embed).collect())
}

/// Norm of a nonzero denominator `D` in `L[t]`: returns
/// `(N, cofactor)` with `N = Res_y(M_alpha(y), D|alpha->y) ∈ Q[t]` and
/// `D · cofactor = N` exactly in `L[t]`.
///
/// When `D` already has rational coefficients the norm is `D` itself and the
/// cofactor is 1.
pub fn norm_cofactor_uni(
    den: &UniPoly<NFElement>,
    field: &Arc<NumberField>,
) -> (UniPoly<Rat>, UniPoly<NFElement>) {
    assert!(!den.is_zero(), "norm of the zero denominator");
    if den.coeffs().iter().all(NFElement::is_rational) {
        let n = UniPoly::new(den.coeffs().iter().map(|c| c.to_rat().unwrap()).collect());
        return (n, UniPoly::constant(field.one()));
    }
    let den_y = alpha_to_var_uni(den, field);
    let m_y = minpoly_over(field, |c| UniPoly::constant(c.clone()));
    let norm = resultant(&m_y, &den_y);
    let lifted = field.lift_poly(&norm);
    let cof = lifted
        .exact_div(den)
        .expect("denominator divides its norm exactly");
    (norm, cof)
}

/// Multivariate version of [`norm_cofactor_uni`].
pub fn norm_cofactor_multi(
    den: &MultiPoly<NFElement>,
    field: &Arc<NumberField>,
) -> (MultiPoly<Rat>, MultiPoly<NFElement>) {
    assert!(!den.is_zero(), "norm of the zero denominator");
    let nv = den.nvars();
    if den.terms().all(|(_, c)| c.is_rational()) {
        let n = den.map_coeffs(|c| c.to_rat().unwrap());
        return (n, MultiPoly::constant(nv, field.one()));
    }
    let den_y = alpha_to_var_multi(den, field);
    let m_y = minpoly_over(field, |c| MultiPoly::constant(nv, c.clone()));
    let norm = resultant(&m_y, &den_y);
    let lifted = norm.map_coeffs(|c| field.scalar(c.clone()));
    let cof = lifted
        .exact_div(den)
        .expect("denominator divides its norm exactly");
    (norm, cof)
}
