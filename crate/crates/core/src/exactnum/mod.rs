//! Exact scalars and dense linear algebra over the Gaussian rationals.

mod matrix;
mod scalar;
mod subspace;

pub use matrix::{rref, solve, Matrix, SolveOutcome};
pub use scalar::{dot, parse_rational, rational_to_text, GaussianRational, GR};
pub use subspace::{kernel, Subspace};
