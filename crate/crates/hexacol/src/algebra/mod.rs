//! Exact arithmetic: finite fields, dense matrices with canonical
//! reduction, subspaces/quotients, and formal multivariate polynomials.

pub mod field;
pub mod matrix;
pub mod poly;
pub mod subspace;

pub use field::{Elt, Field, FieldError};
pub use matrix::{Eliminator, Matrix};
pub use poly::{coeff_string, coordinate_names, MPoly};
pub use subspace::{QuotientSpace, Subspace};
