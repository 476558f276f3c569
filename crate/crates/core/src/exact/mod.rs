//! Exact arithmetic substrate: rationals, weighted polynomials, matrices and
//! linear algebra over `Q`.

mod eigen;
mod linalg;
mod matrix;
mod monomial;
mod poly;
mod polymatrix;
pub mod rational;
pub mod serial;
mod squarefree;
mod unipoly;

pub use eigen::{char_poly, integer_eigenvalues, integer_roots, minimal_poly, MAX_EXACT_DIM};
pub use linalg::{kernel, rref, solve_vector, RrefResult, SolveOutcome};
pub use matrix::RationalMatrix;
pub use monomial::Monomial;
pub use poly::WeightedPoly;
pub use polymatrix::PolyMatrix;
pub use rational::{int, parse_rational, rat, Rational};
pub use squarefree::{squarefree_probable, SquarefreeVerdict, DEFAULT_TRIALS};
pub use unipoly::UniPoly;

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ExactError {
    #[error("weight vectors differ: {left:?} vs {right:?}")]
    WeightMismatch { left: Vec<u32>, right: Vec<u32> },
    #[error("division by the zero polynomial")]
    DivisionByZero,
    #[error("polynomial division is not exact")]
    InexactDivision,
    #[error("matrix of dimension {dim} exceeds the exact limit {max}")]
    TooLarge { dim: usize, max: usize },
    #[error("shape error: {0}")]
    Shape(String),
    #[error("parse error: {0}")]
    Parse(String),
}
