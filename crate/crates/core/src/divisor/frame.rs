use num::{One, Zero};

use super::{DivisorError, VectorFieldPoly};
use crate::exact::{int, PolyMatrix, Rational, WeightedPoly};

/// Role of a frame element in the positive homogeneous splitting.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum FrameElementKind {
    Toral,
    Semisimple,
    WType { grade: i64 },
}

impl FrameElementKind {
    /// `m_j` for W-type elements, 0 otherwise.
    pub fn grade(&self) -> i64 {
        match self {
            FrameElementKind::WType { grade } => *grade,
            _ => 0,
        }
    }

    pub fn label(&self) -> &'static str {
        match self {
            FrameElementKind::Toral => "toral",
            FrameElementKind::Semisimple => "semisimple",
            FrameElementKind::WType { .. } => "w",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FrameElement {
    pub name: String,
    pub kind: FrameElementKind,
    pub distinguished: bool,
    pub field: VectorFieldPoly,
}

impl FrameElement {
    pub fn new(name: &str, kind: FrameElementKind, field: VectorFieldPoly) -> Self {
        FrameElement {
            name: name.to_string(),
            kind,
            distinguished: false,
            field,
        }
    }

    pub fn distinguished(mut self) -> Self {
        self.distinguished = true;
        self
    }
}

/// A rational combination `Σ cᵣ dlog gᵣ`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LogCharacter {
    pub terms: Vec<(Rational, WeightedPoly)>,
}

impl LogCharacter {
    pub fn new(terms: Vec<(Rational, WeightedPoly)>) -> Self {
        LogCharacter { terms }
    }

    /// The polynomial `Σ cᵣ V(gᵣ)/gᵣ`.
    pub fn evaluate(&self, v: &VectorFieldPoly) -> Result<WeightedPoly, DivisorError> {
        let mut acc = WeightedPoly::zero(v.weights());
        for (c, g) in &self.terms {
            let q = v.apply(g).exact_divide(g).map_err(|_| {
                DivisorError::LogCharacter(format!("a frame field is not logarithmic along {g}"))
            })?;
            acc = &acc + &q.scale(c);
        }
        Ok(acc)
    }
}

/// Weighted-homogeneous free divisor with an annotated logarithmic frame.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FreeDivisor {
    name: String,
    variables: Vec<String>,
    weights: Vec<u32>,
    f: WeightedPoly,
    degree: u64,
    frame: Vec<FrameElement>,
    euler_combination: Vec<Rational>,
    log_characters: Vec<LogCharacter>,
    dpi: Vec<Vec<WeightedPoly>>,
}

/// Unvalidated divisor data; turn into a [`FreeDivisor`] with [`FreeDivisor::new`].
#[derive(Clone, Debug)]
pub struct DivisorData {
    pub name: String,
    pub variables: Vec<String>,
    pub weights: Vec<u32>,
    pub f: WeightedPoly,
    pub degree: u64,
    pub frame: Vec<FrameElement>,
    /// Coefficients expressing the Euler field in the toral elements; derived
    /// from the distinguished flag when absent.
    pub euler_combination: Option<Vec<Rational>>,
    /// One log character per toral element; defaults to `(1/degree)·dlog f` when `k = 1`.
    pub log_characters: Option<Vec<LogCharacter>>,
}

impl FreeDivisor {
    pub fn new(data: DivisorData) -> Result<Self, DivisorError> {
        let DivisorData {
            name,
            variables,
            weights,
            f,
            degree,
            frame,
            euler_combination,
            log_characters,
        } = data;
        let n = weights.len();
        if n == 0 || variables.len() != n {
            return Err(DivisorError::Shape(format!(
                "{} variable names for {} weights",
                variables.len(),
                n
            )));
        }
        if weights.contains(&0) {
            return Err(DivisorError::Shape("weights must be positive".into()));
        }
        if f.weights() != weights.as_slice() {
            return Err(DivisorError::Shape("f does not use the divisor weights".into()));
        }
        if f.is_zero() || !f.is_homogeneous_of(degree) {
            return Err(DivisorError::NotHomogeneous(format!(
                "f is not weighted homogeneous of degree {degree}"
            )));
        }
        if frame.len() != n {
            return Err(DivisorError::Shape(format!(
                "frame has {} elements in dimension {}",
                frame.len(),
                n
            )));
        }
        for el in &frame {
            if el.field.weights() != weights.as_slice() {
                return Err(DivisorError::Shape(format!("frame element {} has wrong weights", el.name)));
            }
            if el.distinguished && el.kind != FrameElementKind::Toral {
                return Err(DivisorError::Euler(format!(
                    "distinguished element {} is not toral",
                    el.name
                )));
            }
        }
        let toral: Vec<usize> = (0..n).filter(|&i| frame[i].kind == FrameElementKind::Toral).collect();
        if toral.is_empty() {
            return Err(DivisorError::Euler("frame has no toral element".into()));
        }
        let k = toral.len();
        let flagged: Vec<usize> = (0..k).filter(|&t| frame[toral[t]].distinguished).collect();
        let euler_combination = match (euler_combination, flagged.as_slice()) {
            (Some(c), _) => c,
            (None, [t]) => (0..k).map(|s| if s == *t { Rational::one() } else { Rational::zero() }).collect(),
            (None, []) if k == 1 => vec![Rational::one()],
            (None, _) => {
                return Err(DivisorError::Euler(
                    "need exactly one distinguished toral element or an explicit euler combination".into(),
                ))
            }
        };
        if euler_combination.len() != k {
            return Err(DivisorError::Euler(format!(
                "euler combination has {} entries for {} toral elements",
                euler_combination.len(),
                k
            )));
        }
        let mut e = VectorFieldPoly::zero(&weights);
        for (c, &t) in euler_combination.iter().zip(&toral) {
            e = e.add(&frame[t].field.scale(c));
        }
        if e != VectorFieldPoly::euler(&weights) {
            return Err(DivisorError::Euler(
                "the euler combination of toral fields is not the weighted Euler field".into(),
            ));
        }
        let log_characters = match log_characters {
            Some(l) => l,
            None if k == 1 => vec![LogCharacter::new(vec![(
                Rational::new(1.into(), degree.into()),
                f.clone(),
            )])],
            None => {
                return Err(DivisorError::LogCharacter(
                    "several toral elements need explicit log characters".into(),
                ))
            }
        };
        if log_characters.len() != k {
            return Err(DivisorError::LogCharacter(format!(
                "{} log characters for {} toral elements",
                log_characters.len(),
                k
            )));
        }
        let mut dpi = Vec::with_capacity(k);
        for (t, ch) in log_characters.iter().enumerate() {
            let row = frame
                .iter()
                .map(|el| ch.evaluate(&el.field))
                .collect::<Result<Vec<_>, _>>()?;
            for (i, el) in frame.iter().enumerate() {
                if el.kind == FrameElementKind::Toral || el.kind == FrameElementKind::Semisimple {
                    let expected = if i == toral[t] { int(1) } else { int(0) };
                    if row[i].constant_value() != Some(expected.clone()) {
                        return Err(DivisorError::LogCharacter(format!(
                            "log character {t} takes value {} on {}, expected {}",
                            row[i], el.name, expected
                        )));
                    }
                }
            }
            dpi.push(row);
        }
        Ok(FreeDivisor {
            name,
            variables,
            weights,
            f,
            degree,
            frame,
            euler_combination,
            log_characters,
            dpi,
        })
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn variables(&self) -> &[String] {
        &self.variables
    }

    pub fn weights(&self) -> &[u32] {
        &self.weights
    }

    pub fn dim(&self) -> usize {
        self.weights.len()
    }

    pub fn f(&self) -> &WeightedPoly {
        &self.f
    }

    pub fn degree(&self) -> u64 {
        self.degree
    }

    pub fn frame(&self) -> &[FrameElement] {
        &self.frame
    }

    pub fn field(&self, i: usize) -> &VectorFieldPoly {
        &self.frame[i].field
    }

    pub fn euler_combination(&self) -> &[Rational] {
        &self.euler_combination
    }

    pub fn log_characters(&self) -> &[LogCharacter] {
        &self.log_characters
    }

    fn indices_of(&self, pred: impl Fn(&FrameElementKind) -> bool) -> Vec<usize> {
        (0..self.frame.len()).filter(|&i| pred(&self.frame[i].kind)).collect()
    }

    /// Frame positions of the toral elements `e_1..e_k`.
    pub fn toral_indices(&self) -> Vec<usize> {
        self.indices_of(|k| *k == FrameElementKind::Toral)
    }

    /// Frame positions of the semisimple elements `f_1..f_s`.
    pub fn semisimple_indices(&self) -> Vec<usize> {
        self.indices_of(|k| *k == FrameElementKind::Semisimple)
    }

    /// Frame positions of the W-type elements `w_1..w_d`.
    pub fn w_indices(&self) -> Vec<usize> {
        self.indices_of(|k| matches!(k, FrameElementKind::WType { .. }))
    }

    pub fn toral_rank(&self) -> usize {
        self.euler_combination.len()
    }

    pub fn grade(&self, i: usize) -> i64 {
        self.frame[i].kind.grade()
    }

    pub fn euler_field(&self) -> VectorFieldPoly {
        VectorFieldPoly::euler(&self.weights)
    }

    /// `dπ_t(V_i)` for toral direction `t` and frame position `i`.
    pub fn dpi(&self, t: usize, i: usize) -> &WeightedPoly {
        &self.dpi[t][i]
    }

    /// Row `i` holds the coefficients of `V_i`.
    pub fn frame_matrix(&self) -> PolyMatrix {
        PolyMatrix::from_rows(
            &self.weights,
            self.frame.iter().map(|el| el.field.coeffs().to_vec()).collect(),
        )
        .expect("frame shape checked at construction")
    }

    /// Same divisor with the frame replaced; used for degenerate-frame checks.
    pub fn with_frame(&self, frame: Vec<FrameElement>) -> Result<Self, DivisorError> {
        FreeDivisor::new(DivisorData {
            name: self.name.clone(),
            variables: self.variables.clone(),
            weights: self.weights.clone(),
            f: self.f.clone(),
            degree: self.degree,
            frame,
            euler_combination: Some(self.euler_combination.clone()),
            log_characters: Some(self.log_characters.clone()),
        })
    }
}
