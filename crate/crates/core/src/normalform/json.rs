//! File formats for residues, connections, candidate points and emitted systems.

use serde::{Deserialize, Serialize};

use super::{LogConnection, MatrixPolyMap, NormalFormError, PolySystem, XFPoint};
use crate::divisor::catalog;
use crate::divisor::json::DivisorJson;
use crate::divisor::FreeDivisor;
use crate::exact::rational::{format_rational, parse_rational};
use crate::exact::serial::{matrix_from_json, matrix_to_json, poly_from_json, poly_to_json, MatrixJson, PolyJson};
use crate::exact::{Rational, WeightedPoly};
use crate::liealg::ResidueData;

/// A rational written either as a JSON integer or as a `"p/q"` string.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum RationalJson {
    Int(i64),
    Str(String),
}

impl RationalJson {
    pub fn from_rational(r: &Rational) -> Self {
        if r.is_integer() {
            if let Ok(i) = i64::try_from(r.numer()) {
                return RationalJson::Int(i);
            }
        }
        RationalJson::Str(format_rational(r))
    }

    pub fn to_rational(&self) -> Result<Rational, NormalFormError> {
        match self {
            RationalJson::Int(i) => Ok(Rational::from_integer((*i).into())),
            RationalJson::Str(s) => Ok(parse_rational(s)?),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ResidueJson {
    pub k: usize,
    #[serde(rename = "S")]
    pub s: Vec<MatrixJson>,
    pub positive_combination: Vec<RationalJson>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub chi: Option<Vec<MatrixJson>>,
}

impl ResidueJson {
    pub fn from_residue(r: &ResidueData) -> Self {
        ResidueJson {
            k: r.k(),
            s: r.s_list.iter().map(matrix_to_json).collect(),
            positive_combination: r.positive_combination.iter().map(RationalJson::from_rational).collect(),
            chi: r.chi.as_ref().map(|c| c.iter().map(matrix_to_json).collect()),
        }
    }

    pub fn to_residue(&self) -> Result<ResidueData, NormalFormError> {
        if self.s.len() != self.k || self.positive_combination.len() != self.k {
            return Err(NormalFormError::Shape(format!(
                "k = {} but {} S matrices and {} combination coefficients",
                self.k,
                self.s.len(),
                self.positive_combination.len()
            )));
        }
        let s_list = self.s.iter().map(matrix_from_json).collect::<Result<Vec<_>, _>>()?;
        let comb = self
            .positive_combination
            .iter()
            .map(RationalJson::to_rational)
            .collect::<Result<Vec<_>, _>>()?;
        let mut r = ResidueData::new(s_list, comb);
        if let Some(chi) = &self.chi {
            r = r.with_chi(chi.iter().map(matrix_from_json).collect::<Result<Vec<_>, _>>()?);
        }
        Ok(r)
    }
}

/// Rows of polynomial entries.
pub type MatrixPolyJson = Vec<Vec<PolyJson>>;

pub fn mpm_to_json(a: &MatrixPolyMap) -> MatrixPolyJson {
    (0..a.m())
        .map(|r| (0..a.m()).map(|s| poly_to_json(a.entry(r, s))).collect())
        .collect()
}

pub fn mpm_from_json(weights: &[u32], rows: &MatrixPolyJson) -> Result<MatrixPolyMap, NormalFormError> {
    let m = rows.len();
    if m == 0 || rows.iter().any(|r| r.len() != m) {
        return Err(NormalFormError::Shape("matrix map must be a non-empty square grid".into()));
    }
    let entries = rows
        .iter()
        .flatten()
        .map(|p| poly_from_json(weights, p))
        .collect::<Result<Vec<WeightedPoly>, _>>()?;
    Ok(MatrixPolyMap::from_entries(m, entries))
}

/// A catalog name or an inline divisor description.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum DivisorRefJson {
    Catalog(String),
    Inline(Box<DivisorJson>),
}

impl DivisorRefJson {
    pub fn resolve(&self) -> Result<FreeDivisor, NormalFormError> {
        Ok(match self {
            DivisorRefJson::Catalog(name) => catalog(name)?,
            DivisorRefJson::Inline(d) => d.to_divisor()?,
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ConnectionJson {
    pub divisor: DivisorRefJson,
    pub components: Vec<MatrixPolyJson>,
}

impl ConnectionJson {
    pub fn from_connection(divisor: DivisorRefJson, c: &LogConnection) -> Self {
        ConnectionJson {
            divisor,
            components: c.components().iter().map(mpm_to_json).collect(),
        }
    }

    pub fn to_connection(&self) -> Result<LogConnection, NormalFormError> {
        let d = std::sync::Arc::new(self.divisor.resolve()?);
        let comps = self
            .components
            .iter()
            .map(|c| mpm_from_json(d.weights(), c))
            .collect::<Result<Vec<_>, _>>()?;
        LogConnection::new(d, comps)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PointJson {
    #[serde(rename = "B")]
    pub b: Vec<MatrixPolyJson>,
    #[serde(rename = "N")]
    pub n: Vec<MatrixPolyJson>,
}

impl PointJson {
    pub fn from_point(p: &XFPoint) -> Self {
        PointJson {
            b: p.b.iter().map(mpm_to_json).collect(),
            n: p.n.iter().map(mpm_to_json).collect(),
        }
    }

    pub fn to_point(&self, weights: &[u32]) -> Result<XFPoint, NormalFormError> {
        let conv = |v: &[MatrixPolyJson]| v.iter().map(|a| mpm_from_json(weights, a)).collect::<Result<Vec<_>, _>>();
        Ok(XFPoint {
            b: conv(&self.b)?,
            n: conv(&self.n)?,
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SystemSummaryJson {
    pub dim_u_f: usize,
    pub dim_w2: usize,
    pub aut_degree0: usize,
    pub aut_positive: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CoordinateJson {
    pub name: String,
    pub family: String,
    pub slot: usize,
    pub degree: u64,
    pub entry: [usize; 2],
    pub monomial: Vec<u32>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EquationJson {
    pub tag: String,
    pub label: String,
    pub slots: [usize; 2],
    pub entry: [usize; 2],
    pub z_monomial: Vec<u32>,
    pub terms: PolyJson,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PolySystemJson {
    pub summary: SystemSummaryJson,
    pub variables: Vec<String>,
    pub coordinates: Vec<CoordinateJson>,
    pub equations: Vec<EquationJson>,
}

impl PolySystemJson {
    pub fn from_system(s: &PolySystem) -> Self {
        PolySystemJson {
            summary: SystemSummaryJson {
                dim_u_f: s.dim_u_f(),
                dim_w2: s.dim_w2(),
                aut_degree0: s.aut_degree0,
                aut_positive: s.aut_positive,
            },
            variables: s.variables.clone(),
            coordinates: s
                .coordinates
                .iter()
                .map(|c| CoordinateJson {
                    name: c.name.clone(),
                    family: match c.family {
                        super::CoordinateFamily::B => "B".into(),
                        super::CoordinateFamily::N => "N".into(),
                    },
                    slot: c.slot,
                    degree: c.degree,
                    entry: [c.entry.0, c.entry.1],
                    monomial: c.monomial.exponents().to_vec(),
                })
                .collect(),
            equations: s
                .equations
                .iter()
                .map(|e| EquationJson {
                    tag: e.tag.as_str().into(),
                    label: s.label(e),
                    slots: [e.slots.0, e.slots.1],
                    entry: [e.entry.0, e.entry.1],
                    z_monomial: e.z_monomial.exponents().to_vec(),
                    terms: poly_to_json(&e.poly),
                })
                .collect(),
        }
    }
}
