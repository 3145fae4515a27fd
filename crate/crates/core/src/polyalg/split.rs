//! Splitting objects over `L = Q(alpha)` into power-basis components over `Q`.

use std::sync::Arc;

use crate::exactnum::{NFElement, NumberField, Rat};
use crate::polyalg::resultant::norm_cofactor_uni;
use crate::polyalg::{MultiPoly, RatFunc, UniPoly};

/// The `n` rational-coefficient components of a polynomial over `L`:
/// `p = sum_i comps[i] · alpha^i`.
pub fn split_unipoly(p: &UniPoly<NFElement>, field: &Arc<NumberField>) -> Vec<UniPoly<Rat>> {
    let n = field.degree();
    let mut comps = vec![vec![Rat::zero(); p.coeffs().len()]; n];
    for (i, c) in p.coeffs().iter().enumerate() {
        for (j, r) in c.coords().iter().enumerate() {
            comps[j][i] = r.clone();
        }
    }
    comps.into_iter().map(UniPoly::new).collect()
}

pub fn recombine_unipoly(comps: &[UniPoly<Rat>], field: &Arc<NumberField>) -> UniPoly<NFElement> {
    let alpha = field.alpha();
    let mut acc = UniPoly::zero();
    let mut power = field.one();
    for comp in comps {
        acc = acc.add(&field.lift_poly(comp).scale(&power));
        power = power.mul(&alpha);
    }
    acc
}

/// Componentwise version for multivariate polynomials.
pub fn split_multipoly(p: &MultiPoly<NFElement>, field: &Arc<NumberField>) -> Vec<MultiPoly<Rat>> {
    let n = field.degree();
    let mut comps = vec![MultiPoly::zero(p.nvars()); n];
    for (m, c) in p.terms() {
        for (j, r) in c.coords().iter().enumerate() {
            if !r.is_zero() {
                comps[j].add_term(m.clone(), r.clone());
            }
        }
    }
    comps
}

pub fn recombine_multipoly(
    comps: &[MultiPoly<Rat>],
    field: &Arc<NumberField>,
) -> MultiPoly<NFElement> {
    let nvars = comps
        .first()
        .map(MultiPoly::nvars)
        .expect("recombining an empty component list");
    let alpha = field.alpha();
    let mut acc = MultiPoly::zero(nvars);
    let mut power = field.one();
    for comp in comps {
        let lifted = comp.map_coeffs(|c| field.scalar(c.clone()).mul(&power));
        acc = acc.add(&lifted);
        power = power.mul(&alpha);
    }
    acc
}

/// Embeds a rational-coefficient polynomial into `L[t]`.
pub fn lift_ratfunc(f: &RatFunc<Rat>, field: &Arc<NumberField>) -> RatFunc<NFElement> {
    f.map_coeffs(|c| field.scalar(c.clone()))
}

/// Projects a rational function over `L` down to `Q` when all coefficients
/// are rational.
pub fn ratfunc_to_q(f: &RatFunc<NFElement>) -> Option<RatFunc<Rat>> {
    let num: Option<Vec<Rat>> = f.num().coeffs().iter().map(NFElement::to_rat).collect();
    let den: Option<Vec<Rat>> = f.den().coeffs().iter().map(NFElement::to_rat).collect();
    RatFunc::new(UniPoly::new(num?), UniPoly::new(den?)).ok()
}

/// Decomposes `f ∈ L(t)` on the power basis: returns the unique rational
/// functions `(phi_0, …, phi_{n-1})` over `Q` with `f = sum phi_i alpha^i`.
///
/// The denominator is rationalized by its resultant norm: with
/// `N = Res_y(M_alpha(y), den|alpha->y)` and cofactor `c = N/den` in `L[t]`,
/// `f = (num · c) / N` has a rational denominator, and the numerator splits
/// componentwise. Each component is returned fully reduced.
pub fn alpha_components(f: &RatFunc<NFElement>, field: &Arc<NumberField>) -> Vec<RatFunc<Rat>> {
    let (norm, cof) = norm_cofactor_uni(f.den(), field);
    let num = f.num().mul(&cof);
    split_unipoly(&num, field)
        .into_iter()
        .map(|comp| RatFunc::new(comp, norm.clone()).unwrap())
        .collect()
}

/// Recombination `sum comps[i](t) · alpha^i` as an element of `L(t)`.
pub fn recombine_components(
    comps: &[RatFunc<Rat>],
    field: &Arc<NumberField>,
) -> RatFunc<NFElement> {
    let alpha = field.alpha();
    let mut acc = RatFunc::zero_of(&field.one());
    let mut power = field.one();
    for comp in comps {
        let lifted = lift_ratfunc(comp, field);
        acc = acc.add(&lifted.scale(&power));
        power = power.mul(&alpha);
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyalg::MoebiusUnit;

    fn cubic() -> Arc<NumberField> {
        NumberField::from_int_minpoly(&[2, 2, 0, 1]).unwrap()
    }

    #[test]
    fn split_recombine_round_trip() {
        let k = cubic();
        let p = UniPoly::new(vec![
            k.element_from_ints(&[1, 2, 3]),
            k.element_from_ints(&[0, -1, 0]),
            k.element_from_ints(&[5, 0, 0]),
        ]);
        let comps = split_unipoly(&p, &k);
        assert_eq!(comps.len(), 3);
        assert_eq!(recombine_unipoly(&comps, &k), p);
    }

    #[test]
    fn components_of_paper_unit() {
        // (t - a)/(t + a) over a^3 + 2a + 2 = 0 decomposes into
        // ((t^3+2t+2)/(t^3+2t-2), -2t^2/(t^3+2t-2), 2t/(t^3+2t-2))
        let k = cubic();
        let u = MoebiusUnit::new(k.one(), k.alpha().neg(), k.one(), k.alpha()).unwrap();
        let comps = alpha_components(&u.to_ratfunc(), &k);
        let den = UniPoly::from_ints(&[-2, 2, 0, 1]);
        assert_eq!(
            comps[0],
            RatFunc::new(UniPoly::from_ints(&[2, 2, 0, 1]), den.clone()).unwrap()
        );
        assert_eq!(
            comps[1],
            RatFunc::new(UniPoly::from_ints(&[0, 0, -2]), den.clone()).unwrap()
        );
        assert_eq!(
            comps[2],
            RatFunc::new(UniPoly::from_ints(&[0, 2]), den).unwrap()
        );
        // recombination reproduces the unit
        assert_eq!(recombine_components(&comps, &k), u.to_ratfunc());
    }

    #[test]
    fn rational_and_scalar_inputs() {
        let k = cubic();
        // f in Q(t) splits as (f, 0, 0)
        let f = RatFunc::new(UniPoly::from_ints(&[1, 1]), UniPoly::from_ints(&[3, 0, 1])).unwrap();
        let comps = alpha_components(&lift_ratfunc(&f, &k), &k);
        assert_eq!(comps[0], f);
        assert!(comps[1].is_zero() && comps[2].is_zero());
        // f = alpha splits as (0, 1, 0)
        let g = RatFunc::constant(k.alpha());
        let comps = alpha_components(&g, &k);
        assert!(comps[0].is_zero() && comps[2].is_zero());
        assert_eq!(comps[1], RatFunc::constant(Rat::one()));
    }
}
