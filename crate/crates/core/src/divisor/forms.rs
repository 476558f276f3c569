use super::{DivisorError, FreeDivisor, StructureFunctions};
use crate::exact::{PolyMatrix, Rational, WeightedPoly};

/// Dual logarithmic 1-forms stored as `numerator / (κ·f)`.
///
/// Row `k` of the numerator holds the `dz_j` coefficients of `ξ^k`, and
/// `ξ^k(V_i) = δ_ik`, i.e. `numerator · Aᵀ = κ f · I` for the frame matrix `A`
/// whose rows are the frame fields.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LogFormFrame {
    pub numerator: PolyMatrix,
    pub constant: Rational,
    pub f: WeightedPoly,
}

impl LogFormFrame {
    pub fn denominator(&self) -> WeightedPoly {
        self.f.scale(&self.constant)
    }

    /// Checks `numerator · Aᵀ = κ f · I` exactly.
    pub fn pairing_holds(&self, d: &FreeDivisor) -> bool {
        let prod = self.numerator.mul(&d.frame_matrix().transpose());
        prod.is_scalar_multiple_of_identity(&self.denominator())
    }
}

pub fn dual_log_forms(d: &FreeDivisor) -> Result<LogFormFrame, DivisorError> {
    let a = d.frame_matrix();
    let det = a.det()?;
    let constant = det
        .exact_divide(d.f())
        .ok()
        .and_then(|q| q.constant_value())
        .filter(|_| !det.is_zero())
        .ok_or(DivisorError::DegenerateFrame)?;
    let frame = LogFormFrame {
        numerator: a.adjugate()?.transpose(),
        constant,
        f: d.f().clone(),
    };
    debug_assert!(frame.pairing_holds(d));
    Ok(frame)
}

/// Coefficients of `dlog f` in the dual frame, namely `V_i(f)/f`.
pub fn dlog_f_expansion(d: &FreeDivisor) -> Result<Vec<WeightedPoly>, DivisorError> {
    d.frame()
        .iter()
        .map(|el| {
            el.field.apply(d.f()).exact_divide(d.f()).map_err(|_| {
                DivisorError::LogCharacter(format!("{} is not logarithmic along f", el.name))
            })
        })
        .collect()
}

/// `dξ^k = Σ_{i<j} coeff · ξ^i∧ξ^j`, with `coeff = −c_ij^k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FormStructure {
    pub rows: Vec<Vec<(usize, usize, WeightedPoly)>>,
}

impl FormStructure {
    /// Coefficient of `ξ^i∧ξ^j` (`i < j`) in `dξ^k`, if nonzero.
    pub fn coefficient(&self, k: usize, i: usize, j: usize) -> Option<&WeightedPoly> {
        self.rows[k].iter().find(|(p, q, _)| *p == i && *q == j).map(|(_, _, c)| c)
    }

    pub fn display(&self, form_names: &[String], variables: &[String]) -> Vec<String> {
        self.rows
            .iter()
            .enumerate()
            .map(|(k, row)| {
                let rhs: Vec<String> = row
                    .iter()
                    .map(|(i, j, c)| {
                        format!("({})·{}∧{}", c.fmt_with(variables), form_names[*i], form_names[*j])
                    })
                    .collect();
                let rhs = if rhs.is_empty() { "0".to_string() } else { rhs.join(" + ") };
                format!("d{} = {}", form_names[k], rhs)
            })
            .collect()
    }
}

pub fn form_structure_equations(sf: &StructureFunctions) -> FormStructure {
    let n = sf.dim();
    let rows = (0..n)
        .map(|k| {
            let mut row = Vec::new();
            for i in 0..n {
                for j in i + 1..n {
                    let c = sf.get(i, j, k);
                    if !c.is_zero() {
                        row.push((i, j, -c));
                    }
                }
            }
            row
        })
        .collect();
    FormStructure { rows }
}
