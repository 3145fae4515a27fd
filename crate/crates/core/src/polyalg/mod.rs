//! Polynomial and rational-function algebra over `Q` and over number fields.

mod moebius;
mod multipoly;
mod ratfunc;
pub mod resultant;
pub mod split;
mod unipoly;

pub use moebius::{MoebiusUnit, SingularUnit};
pub use multipoly::{Monomial, MultiPoly};
pub use ratfunc::{RatFunc, ZeroDenominator};
pub use resultant::{determinant_bareiss, resultant, sylvester_matrix};
pub use unipoly::UniPoly;
