//! Exact rational arithmetic and number fields.

mod irreducible;
mod nf;
mod rat;

pub use irreducible::{certify_irreducible, certify_irreducible_with_budget, Irreducibility, NotMonic};
pub use nf::{FieldError, NFElement, NumberField};
pub use rat::{ParseRatError, Rat};
