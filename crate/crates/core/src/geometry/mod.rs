//! Structure theory and implicitization.
