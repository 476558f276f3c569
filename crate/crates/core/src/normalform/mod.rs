//! Normal-form data for flat logarithmic connections: graded solution spaces,
//! curvature, and the polynomial system cutting out the moduli variety.

mod assemble;
pub mod json;
mod connection;
mod matrix_poly;
mod problem;
mod system;

use thiserror::Error;

use crate::divisor::DivisorError;
use crate::exact::ExactError;
use crate::liealg::LieError;

pub use assemble::{
    assemble_connection, check_xf_point, monodromy_split, MonodromySplit, PointCheck, XFPoint,
};
pub use connection::{curvature, is_flat, FlatnessReport, LogConnection};
pub use matrix_poly::MatrixPolyMap;
pub use problem::{
    BasisElement, GradedSolutionSpace, NormalFormProblem, Pivot, SpaceFamily, SymmetryAlgebra,
};
pub use system::{
    emit_xf, linear_certificate, normalize_equations, CertificateOutcome, Coordinate, CoordinateFamily,
    EquationTag, LinearCertificate, PolyEquation, PolySystem, Residuals,
};

#[derive(Debug, Error)]
pub enum NormalFormError {
    #[error(transparent)]
    Divisor(#[from] DivisorError),
    #[error(transparent)]
    Lie(#[from] LieError),
    #[error(transparent)]
    Exact(#[from] ExactError),
    #[error("invalid residue: {0}")]
    Residue(String),
    #[error("shape mismatch: {0}")]
    Shape(String),
    #[error("not in the solution space: {0}")]
    Membership(String),
    #[error("internal inconsistency: {0}")]
    Internal(String),
}
