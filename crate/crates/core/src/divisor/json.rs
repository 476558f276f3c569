use serde::{Deserialize, Serialize};

use super::{
    AlgebroidConstants, DivisorData, DivisorError, FrameElement, FrameElementKind, FreeDivisor, LogCharacter,
    StructureFunctions, VectorFieldPoly,
};
use crate::exact::rational::{format_rational, parse_rational};
use crate::exact::serial::{poly_from_json, poly_to_json, PolyJson};
use crate::exact::Rational;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FrameElementJson {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
    pub kind: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub grade: Option<i64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub distinguished: Option<bool>,
    pub coefficients: Vec<PolyJson>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct LogTermJson {
    pub coeff: String,
    pub poly: PolyJson,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct DivisorJson {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
    pub variables: Vec<String>,
    pub weights: Vec<u32>,
    pub f: PolyJson,
    pub degree: u64,
    pub frame: Vec<FrameElementJson>,
    /// `[a][b][c]`: coefficient of `f_c` in `[f_a, f_b]`.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub semisimple_constants: Option<Vec<Vec<Vec<String>>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub euler_combination: Option<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub log_characters: Option<Vec<Vec<LogTermJson>>>,
}

impl DivisorJson {
    pub fn from_divisor(d: &FreeDivisor) -> Self {
        let sf = StructureFunctions::compute(d).ok();
        let consts = sf.as_ref().and_then(|sf| AlgebroidConstants::extract(d, sf).ok());
        DivisorJson {
            name: Some(d.name().to_string()),
            variables: d.variables().to_vec(),
            weights: d.weights().to_vec(),
            f: poly_to_json(d.f()),
            degree: d.degree(),
            frame: d
                .frame()
                .iter()
                .map(|el| FrameElementJson {
                    name: Some(el.name.clone()),
                    kind: el.kind.label().to_string(),
                    grade: match el.kind {
                        FrameElementKind::WType { grade } => Some(grade),
                        _ => None,
                    },
                    distinguished: el.distinguished.then_some(true),
                    coefficients: el.field.coeffs().iter().map(poly_to_json).collect(),
                })
                .collect(),
            semisimple_constants: consts
                .filter(|c| !c.semisimple.is_empty())
                .map(|c| nested_strings(&c.s_constants)),
            euler_combination: Some(d.euler_combination().iter().map(format_rational).collect()),
            log_characters: Some(
                d.log_characters()
                    .iter()
                    .map(|ch| {
                        ch.terms
                            .iter()
                            .map(|(c, g)| LogTermJson {
                                coeff: format_rational(c),
                                poly: poly_to_json(g),
                            })
                            .collect()
                    })
                    .collect(),
            ),
        }
    }

    pub fn to_divisor(&self) -> Result<FreeDivisor, DivisorError> {
        let w = &self.weights;
        let mut frame = Vec::with_capacity(self.frame.len());
        for (i, el) in self.frame.iter().enumerate() {
            let kind = match (el.kind.as_str(), el.grade) {
                ("toral", None) => FrameElementKind::Toral,
                ("semisimple", None) => FrameElementKind::Semisimple,
                ("w", Some(grade)) => FrameElementKind::WType { grade },
                ("w", None) => return Err(DivisorError::Json(format!("frame element {i}: w needs a grade"))),
                (k, _) => return Err(DivisorError::Json(format!("frame element {i}: bad kind {k:?} or grade"))),
            };
            if el.coefficients.len() != w.len() {
                return Err(DivisorError::Json(format!(
                    "frame element {i} has {} coefficients, expected {}",
                    el.coefficients.len(),
                    w.len()
                )));
            }
            let coeffs = el
                .coefficients
                .iter()
                .map(|p| poly_from_json(w, p))
                .collect::<Result<Vec<_>, _>>()?;
            frame.push(FrameElement {
                name: el.name.clone().unwrap_or_else(|| format!("V{}", i + 1)),
                kind,
                distinguished: el.distinguished.unwrap_or(false),
                field: VectorFieldPoly::new(coeffs),
            });
        }
        let parse_list = |v: &Vec<String>| v.iter().map(|s| parse_rational(s)).collect::<Result<Vec<_>, _>>();
        let euler_combination = self.euler_combination.as_ref().map(parse_list).transpose()?;
        let log_characters = match &self.log_characters {
            None => None,
            Some(chars) => Some(
                chars
                    .iter()
                    .map(|terms| {
                        Ok(LogCharacter::new(
                            terms
                                .iter()
                                .map(|t| Ok((parse_rational(&t.coeff)?, poly_from_json(w, &t.poly)?)))
                                .collect::<Result<Vec<_>, crate::exact::ExactError>>()?,
                        ))
                    })
                    .collect::<Result<Vec<_>, DivisorError>>()?,
            ),
        };
        let d = FreeDivisor::new(DivisorData {
            name: self.name.clone().unwrap_or_else(|| "divisor".into()),
            variables: self.variables.clone(),
            weights: w.clone(),
            f: poly_from_json(w, &self.f)?,
            degree: self.degree,
            frame,
            euler_combination,
            log_characters,
        })?;
        if let Some(declared) = &self.semisimple_constants {
            let declared: Vec<Vec<Vec<Rational>>> = declared
                .iter()
                .map(|a| a.iter().map(parse_list).collect::<Result<Vec<_>, _>>())
                .collect::<Result<Vec<_>, _>>()?;
            let sf = StructureFunctions::compute(&d)?;
            let consts = AlgebroidConstants::extract(&d, &sf)?;
            if declared != consts.s_constants {
                return Err(DivisorError::Structure(
                    "declared semisimple constants disagree with the frame brackets".into(),
                ));
            }
        }
        Ok(d)
    }
}

fn nested_strings(v: &[Vec<Vec<Rational>>]) -> Vec<Vec<Vec<String>>> {
    v.iter()
        .map(|a| a.iter().map(|b| b.iter().map(format_rational).collect()).collect())
        .collect()
}
