//! Exact arithmetic for hypercircles.
//!
//! A hypercircle is the Zariski closure in `K^n` of the image of the base-field
//! axis under a Moebius unit `u(t) = (at+b)/(ct+d)` with coefficients in a
//! degree-`n` extension `L = K(alpha)`, expanded on the power basis of `alpha`.
//! Over `K = Q` and `L = Q(i)` this recovers ordinary circles and lines; over
//! larger extensions the same construction yields rational space curves that are
//! projectively equivalent to the rational normal curve.
//!
//! The crate provides, all in exact rational arithmetic:
//!
//! * [`exactnum`] — big rationals, number fields `Q[x]/(M)`, minimal
//!   polynomials, and desk-scale irreducibility certification;
//! * [`polyalg`] — univariate and sparse multivariate polynomials over `Q` or
//!   over a number field, rational functions, Sylvester resultants, Moebius
//!   units, and power-basis component splitting;
//! * [`hypercircle`] — parametrization of the curve attached to a unit, reduced
//!   forms, degree and primitivity, points at infinity, the inverse point map,
//!   three-point interpolation and same-curve testing;
//! * [`geometry`] — transforms onto the rational normal curve, Groebner-free
//!   implicitization, implicit generators from the inverse unit, affine
//!   equivalence, non-primitive embeddings, and hypercircle certification;
//! * [`weil`] — Weil-descent component extraction and the end-to-end
//!   reparametrization pipeline for curves given over an extension field.

pub mod ring;

pub mod exactnum;
pub mod linalg;
pub mod polyalg;

pub mod geometry;
pub mod hypercircle;
pub mod weil;

pub use exactnum::{certify_irreducible, Irreducibility, NFElement, NumberField, Rat};
pub use polyalg::{MoebiusUnit, Monomial, MultiPoly, RatFunc, UniPoly};
