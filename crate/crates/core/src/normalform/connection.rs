use std::sync::Arc;

use super::{MatrixPolyMap, NormalFormError};
use crate::divisor::{FreeDivisor, StructureFunctions};
use crate::liealg::BracketConvention;

/// `ω` in the dual frame: component `i` is `ω(V_i)`.
#[derive(Clone, Debug)]
pub struct LogConnection {
    divisor: Arc<FreeDivisor>,
    structure: Arc<StructureFunctions>,
    components: Vec<MatrixPolyMap>,
}

impl LogConnection {
    pub fn new(divisor: Arc<FreeDivisor>, components: Vec<MatrixPolyMap>) -> Result<Self, NormalFormError> {
        let structure = Arc::new(StructureFunctions::compute(&divisor)?);
        Self::with_structure(divisor, structure, components)
    }

    pub fn with_structure(
        divisor: Arc<FreeDivisor>,
        structure: Arc<StructureFunctions>,
        components: Vec<MatrixPolyMap>,
    ) -> Result<Self, NormalFormError> {
        if components.len() != divisor.dim() {
            return Err(NormalFormError::Shape(format!(
                "{} connection components for a frame of size {}",
                components.len(),
                divisor.dim()
            )));
        }
        let m = components[0].m();
        if components.iter().any(|c| c.m() != m || c.weights() != divisor.weights()) {
            return Err(NormalFormError::Shape("connection components disagree in size or weights".into()));
        }
        Ok(LogConnection {
            divisor,
            structure,
            components,
        })
    }

    pub fn divisor(&self) -> &Arc<FreeDivisor> {
        &self.divisor
    }

    pub fn components(&self) -> &[MatrixPolyMap] {
        &self.components
    }

    pub fn m(&self) -> usize {
        self.components[0].m()
    }
}

/// `R(V_i, V_j) = V_i(ω_j) − V_j(ω_i) − Σ_k c_ij^k ω_k + [ω_i, ω_j]` for `i < j`,
/// with the negative-commutator bracket.
pub fn curvature(conn: &LogConnection) -> Vec<((usize, usize), MatrixPolyMap)> {
    let d = &conn.divisor;
    let n = d.dim();
    let w = &conn.components;
    let mut out = Vec::with_capacity(n * (n - 1) / 2);
    for i in 0..n {
        for j in i + 1..n {
            let mut r = w[j].apply_field(d.field(i)).sub(&w[i].apply_field(d.field(j)));
            for (k, wk) in w.iter().enumerate() {
                let c = conn.structure.get(i, j, k);
                if !c.is_zero() {
                    r = r.sub(&wk.mul_poly(c));
                }
            }
            r = r.add(&w[i].bracket(&w[j], BracketConvention::NegativeCommutator));
            out.push(((i, j), r));
        }
    }
    out
}

/// Flatness verdict with the first nonvanishing curvature component.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FlatnessReport {
    pub flat: bool,
    pub witness: Option<((usize, usize), MatrixPolyMap)>,
}

pub fn is_flat(conn: &LogConnection) -> FlatnessReport {
    let witness = curvature(conn).into_iter().find(|(_, r)| !r.is_zero());
    FlatnessReport {
        flat: witness.is_none(),
        witness,
    }
}
