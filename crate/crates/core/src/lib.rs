//! Exact computations for flat connections with logarithmic poles along
//! weighted-homogeneous Saito free divisors.
//!
//! The crate is layered bottom-up:
//!
//! - [`exact`]: rationals, weighted polynomials, exact linear algebra.
//! - [`divisor`]: free divisors with a chosen logarithmic frame, Saito's
//!   criterion, brackets, dual logarithmic forms and a catalog of examples.
//! - [`liealg`]: `gl_m` context, adjoint operators, centralizers and the
//!   Jordan–Chevalley decomposition.
//! - [`normalform`]: graded solution spaces for the normal-form data, the
//!   curvature of logarithmic connections and the polynomial system cutting
//!   out the moduli variety.
//! - [`cli`]: the `logres` command-line front end.

pub mod exact;
pub mod divisor;
pub mod liealg;
pub mod normalform;
pub mod cli;
