//! Exact-arithmetic toolkit for finite-dimensional algebras given by
//! structure constants and for their evolution-algebra approximations.

pub mod algebra;
pub mod approx;
pub mod catalog;
mod digraph;
mod error;
pub mod evolution;
pub mod exact;
pub mod format;
pub mod sample;
pub mod structure;

pub use algebra::{verify_isomorphism_witness, ChainKind, ChainVerdict, FDAlgebra, Identity, PowerChain};
pub use approx::{
    approximate_at, beta_symbolic, equal_point_self_iso, evolution_operator, existence_solve, jacobian,
    symbolic_right_nilpotent, ExistenceReport, ExistenceVerdict, Variant,
};
pub use error::{Error, Result};
pub use evolution::{monomial_isomorphism_search, EvolutionMatrix, MonomialSearch, RightNilpotency};
pub use exact::{Matrix, Rational};
pub use structure::{apply_basis_change, sup_distance, CubicTensor, LinearForm, LinearFormMatrix};
