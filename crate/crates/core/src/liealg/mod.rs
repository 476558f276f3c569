//! `gl_m` over the rationals: brackets, adjoint operators, centralizers and
//! the Jordan–Chevalley decomposition.

mod jordan;
mod residue;

pub use jordan::{
    exp_nilpotent, is_nilpotent, is_semisimple, is_unipotent, jordan_chevalley, log_unipotent, JCDecomposition,
    JCMode,
};
pub use residue::{validate_residue, ResidueData, ResidueViolation};

use thiserror::Error;

use crate::exact::{kernel, ExactError, RationalMatrix};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum LieError {
    #[error(transparent)]
    Exact(#[from] ExactError),
    #[error("expected a square matrix, got {rows}×{cols}")]
    NotSquare { rows: usize, cols: usize },
    #[error("matrices of sizes {0} and {1} cannot be combined")]
    SizeMismatch(usize, usize),
    #[error("matrix is not invertible")]
    NotInvertible,
    #[error("decomposition failed its own checks: {0}")]
    Internal(String),
}

/// Which bracket a computation uses on `gl_m`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub enum BracketConvention {
    /// `[X, Y]_c = XY − YX`.
    Commutator,
    /// `[X, Y] = YX − XY`, the bracket of the normal-form equations.
    #[default]
    NegativeCommutator,
}

impl BracketConvention {
    pub fn bracket(&self, x: &RationalMatrix, y: &RationalMatrix) -> RationalMatrix {
        match self {
            BracketConvention::Commutator => x.commutator(y),
            BracketConvention::NegativeCommutator => y.commutator(x),
        }
    }
}

/// Matrix size plus bracket convention.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct LieContext {
    pub m: usize,
    pub convention: BracketConvention,
}

impl LieContext {
    pub fn new(m: usize) -> Self {
        assert!(m >= 1, "gl_0 is not supported");
        LieContext {
            m,
            convention: BracketConvention::default(),
        }
    }

    pub fn with_convention(mut self, convention: BracketConvention) -> Self {
        self.convention = convention;
        self
    }

    pub fn bracket(&self, x: &RationalMatrix, y: &RationalMatrix) -> RationalMatrix {
        self.convention.bracket(x, y)
    }

    pub fn dim(&self) -> usize {
        self.m * self.m
    }

    /// Matrix unit basis in row-major order.
    pub fn basis(&self) -> Vec<RationalMatrix> {
        let m = self.m;
        (0..m * m).map(|i| RationalMatrix::unit(m, i / m, i % m)).collect()
    }
}

pub(crate) fn check_square(a: &RationalMatrix) -> Result<usize, LieError> {
    if a.is_square() {
        Ok(a.rows())
    } else {
        Err(LieError::NotSquare {
            rows: a.rows(),
            cols: a.cols(),
        })
    }
}

/// Matrix of `X ↦ AX − XA` on row-major matrix units.
pub fn ad_operator(a: &RationalMatrix) -> Result<RationalMatrix, LieError> {
    let m = check_square(a)?;
    let mut out = RationalMatrix::zeros(m * m, m * m);
    for p in 0..m {
        for q in 0..m {
            let row = p * m + q;
            for r in 0..m {
                out[(row, r * m + q)] += &a[(p, r)];
            }
            for s in 0..m {
                out[(row, p * m + s)] -= &a[(s, q)];
            }
        }
    }
    Ok(out)
}

/// Basis of `{X : XM = MX for every M}`; all of `gl_m` when `mats` is empty.
pub fn centralizer_algebra(m: usize, mats: &[RationalMatrix]) -> Result<Vec<RationalMatrix>, LieError> {
    let mut stacked: Vec<Vec<_>> = Vec::new();
    for a in mats {
        if check_square(a)? != m {
            return Err(LieError::SizeMismatch(m, a.rows()));
        }
        stacked.extend(ad_operator(a)?.to_rows());
    }
    if stacked.is_empty() {
        return Ok(LieContext::new(m).basis());
    }
    let op = RationalMatrix::from_rows(stacked)?;
    Ok(kernel(&op)
        .into_iter()
        .map(|v| RationalMatrix::from_vector(m, m, &v))
        .collect())
}
