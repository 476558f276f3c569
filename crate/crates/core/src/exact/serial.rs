//! JSON shapes for polynomials and matrices.

use serde::{Deserialize, Serialize};

use super::rational::{format_rational, parse_rational};
use super::{ExactError, Monomial, RationalMatrix, WeightedPoly};

/// One term: `{"exponents": [..], "coeff": "p/q"}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermJson {
    pub exponents: Vec<u32>,
    pub coeff: String,
}

pub type PolyJson = Vec<TermJson>;
pub type MatrixJson = Vec<Vec<String>>;

pub fn poly_to_json(p: &WeightedPoly) -> PolyJson {
    p.terms()
        .map(|(m, c)| TermJson {
            exponents: m.exponents().to_vec(),
            coeff: format_rational(c),
        })
        .collect()
}

pub fn poly_from_json(weights: &[u32], terms: &[TermJson]) -> Result<WeightedPoly, ExactError> {
    let parsed = terms
        .iter()
        .map(|t| Ok((Monomial::new(t.exponents.clone()), parse_rational(&t.coeff)?)))
        .collect::<Result<Vec<_>, ExactError>>()?;
    WeightedPoly::from_terms(weights, parsed)
}

pub fn matrix_to_json(m: &RationalMatrix) -> MatrixJson {
    m.to_rows()
        .iter()
        .map(|r| r.iter().map(format_rational).collect())
        .collect()
}

pub fn matrix_from_json(rows: &MatrixJson) -> Result<RationalMatrix, ExactError> {
    let parsed = rows
        .iter()
        .map(|r| r.iter().map(|s| parse_rational(s)).collect::<Result<Vec<_>, _>>())
        .collect::<Result<Vec<_>, _>>()?;
    RationalMatrix::from_rows(parsed)
}
