//! Exact rational scalars and linear algebra over `Q`.
//!
//! Everything downstream (rank conditions, subspace chains, basis changes)
//! is decided here without any floating point.

mod matrix;
mod rational;
mod subspace;

pub use matrix::{
    determinant_is_zero, invert, nullspace, rref, solve_linear, Matrix, Rref, SolutionSet,
    SolutionStatus,
};
pub use rational::{q, Rational};
pub use subspace::Subspace;
pub(crate) use subspace::unit;

/// Parse a comma-separated list of rationals such as `1,1/2,-3`.
pub fn parse_point(s: &str) -> crate::Result<Vec<Rational>> {
    s.split(',').map(|p| p.trim().parse()).collect()
}

pub fn format_vector(v: &[Rational]) -> String {
    let parts: Vec<String> = v.iter().map(ToString::to_string).collect();
    format!("({})", parts.join(", "))
}
