use serde::Serialize;

use super::FreeDivisor;
use crate::exact::{squarefree_probable, Rational, SquarefreeVerdict, WeightedPoly, DEFAULT_TRIALS};

/// Outcome of checking Saito's criterion on a divisor's frame.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SaitoVerdict {
    /// `det(A) = c·f` and `f` showed no repeated factor.
    Ok { constant: Rational, squarefree: SquarefreeVerdict },
    DeterminantMismatch { det: WeightedPoly },
    NotReduced,
}

impl SaitoVerdict {
    pub fn is_ok(&self) -> bool {
        matches!(self, SaitoVerdict::Ok { .. })
    }

    pub fn constant(&self) -> Option<&Rational> {
        match self {
            SaitoVerdict::Ok { constant, .. } => Some(constant),
            _ => None,
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct SaitoSummary {
    pub ok: bool,
    pub constant: Option<String>,
    pub squarefree: Option<SquarefreeVerdict>,
    pub failure: Option<String>,
}

impl From<&SaitoVerdict> for SaitoSummary {
    fn from(v: &SaitoVerdict) -> Self {
        use crate::exact::rational::format_rational;
        match v {
            SaitoVerdict::Ok { constant, squarefree } => SaitoSummary {
                ok: true,
                constant: Some(format_rational(constant)),
                squarefree: Some(*squarefree),
                failure: None,
            },
            SaitoVerdict::DeterminantMismatch { det } => SaitoSummary {
                ok: false,
                constant: None,
                squarefree: None,
                failure: Some(format!("determinant {det} is not a constant multiple of f")),
            },
            SaitoVerdict::NotReduced => SaitoSummary {
                ok: false,
                constant: None,
                squarefree: Some(SquarefreeVerdict::NotSquarefree),
                failure: Some("f has a repeated factor".into()),
            },
        }
    }
}

/// Checks `det(frame) = c·f` with `c ≠ 0` and runs the line-restriction
/// reducedness test on `f`.
pub fn verify_saito(d: &FreeDivisor, seed: u64) -> SaitoVerdict {
    let det = d.frame_matrix().det().expect("frame matrix is square");
    let constant = match det.exact_divide(d.f()) {
        Ok(q) => match q.constant_value() {
            Some(c) if !det.is_zero() => c,
            _ => return SaitoVerdict::DeterminantMismatch { det },
        },
        Err(_) => return SaitoVerdict::DeterminantMismatch { det },
    };
    match squarefree_probable(d.f(), DEFAULT_TRIALS, seed) {
        SquarefreeVerdict::NotSquarefree => SaitoVerdict::NotReduced,
        squarefree => SaitoVerdict::Ok { constant, squarefree },
    }
}
