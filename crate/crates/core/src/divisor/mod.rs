//! Free divisors with a chosen logarithmic frame.

pub mod catalog;
mod forms;
mod frame;
pub mod json;
mod saito;
mod structure;
mod vector_field;

pub use catalog::{catalog, CATALOG_NAMES};
pub use forms::{dlog_f_expansion, dual_log_forms, form_structure_equations, FormStructure, LogFormFrame};
pub use frame::{DivisorData, FrameElement, FrameElementKind, FreeDivisor, LogCharacter};
pub use saito::{verify_saito, SaitoSummary, SaitoVerdict};
pub use structure::{expand_in_frame, AlgebroidConstants, StructureFunctions};
pub use vector_field::VectorFieldPoly;

use thiserror::Error;

use crate::exact::ExactError;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum DivisorError {
    #[error(transparent)]
    Exact(#[from] ExactError),
    #[error("shape error: {0}")]
    Shape(String),
    #[error("{0}")]
    NotHomogeneous(String),
    #[error("euler data: {0}")]
    Euler(String),
    #[error("log character: {0}")]
    LogCharacter(String),
    #[error("frame determinant vanishes identically")]
    DegenerateFrame,
    #[error("bracket [{i}, {j}] is not a polynomial combination of the frame")]
    NotClosed { i: String, j: String },
    #[error("bracket relations: {0}")]
    Structure(String),
    #[error("unknown catalog entry {0:?}")]
    UnknownCatalog(String),
    #[error("divisor file: {0}")]
    Json(String),
}
