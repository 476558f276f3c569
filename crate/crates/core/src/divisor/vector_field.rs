use std::fmt;

use crate::exact::{Rational, WeightedPoly};

/// Polynomial vector field `Σ aᵢ(z) ∂_{zᵢ}`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct VectorFieldPoly {
    coeffs: Vec<WeightedPoly>,
}

impl VectorFieldPoly {
    pub fn new(coeffs: Vec<WeightedPoly>) -> Self {
        assert!(!coeffs.is_empty(), "vector field on a zero-dimensional space");
        let w = coeffs[0].weights().to_vec();
        assert_eq!(w.len(), coeffs.len(), "coefficient count must equal variable count");
        assert!(coeffs.iter().all(|c| c.weights() == w.as_slice()), "weight mismatch");
        VectorFieldPoly { coeffs }
    }

    pub fn zero(weights: &[u32]) -> Self {
        Self::new(vec![WeightedPoly::zero(weights); weights.len()])
    }

    /// Builds `Σ c·m ∂_i` from `(coefficient, exponents, i)` triples.
    pub fn from_int_terms(weights: &[u32], terms: &[(i64, &[u32], usize)]) -> Self {
        let mut coeffs = vec![WeightedPoly::zero(weights); weights.len()];
        for &(c, e, i) in terms {
            coeffs[i] = &coeffs[i] + &WeightedPoly::from_int_terms(weights, &[(c, e)]);
        }
        Self::new(coeffs)
    }

    /// Euler field `Σ wᵢ zᵢ ∂ᵢ`.
    pub fn euler(weights: &[u32]) -> Self {
        let n = weights.len();
        Self::new(
            (0..n)
                .map(|i| WeightedPoly::var(weights, i).scale(&Rational::from_integer(weights[i].into())))
                .collect(),
        )
    }

    /// The same field on a larger ring whose first variables are ours; the
    /// extra variables are treated as constants.
    pub fn embed(&self, target_weights: &[u32]) -> Self {
        let mut coeffs: Vec<WeightedPoly> = self.coeffs.iter().map(|c| c.embed(target_weights)).collect();
        coeffs.resize(target_weights.len(), WeightedPoly::zero(target_weights));
        VectorFieldPoly { coeffs }
    }

    pub fn coeffs(&self) -> &[WeightedPoly] {
        &self.coeffs
    }

    pub fn weights(&self) -> &[u32] {
        self.coeffs[0].weights()
    }

    pub fn nvars(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(WeightedPoly::is_zero)
    }

    /// Derivative of `p` along the field.
    pub fn apply(&self, p: &WeightedPoly) -> WeightedPoly {
        let mut acc = WeightedPoly::zero(p.weights());
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            let d = p.partial_derivative(i);
            if !d.is_zero() {
                acc = &acc + &(a * &d);
            }
        }
        acc
    }

    /// `[v, w] = v(w) − w(v)` coefficientwise.
    pub fn bracket(&self, other: &Self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| &self.apply(b) - &other.apply(a))
                .collect(),
        )
    }

    pub fn add(&self, other: &Self) -> Self {
        Self::new(self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a + b).collect())
    }

    pub fn sub(&self, other: &Self) -> Self {
        Self::new(self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a - b).collect())
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Self::new(self.coeffs.iter().map(|a| a.scale(c)).collect())
    }

    /// Multiplication by a function.
    pub fn mul_poly(&self, p: &WeightedPoly) -> Self {
        Self::new(self.coeffs.iter().map(|a| a * p).collect())
    }

    pub fn fmt_with(&self, names: &[String]) -> String {
        let parts: Vec<String> = self
            .coeffs
            .iter()
            .enumerate()
            .filter(|(_, a)| !a.is_zero())
            .map(|(i, a)| format!("({})∂{}", a.fmt_with(names), names[i]))
            .collect();
        if parts.is_empty() {
            "0".into()
        } else {
            parts.join(" + ")
        }
    }
}

impl fmt::Debug for VectorFieldPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names: Vec<String> = (0..self.nvars()).map(|i| format!("z{i}")).collect();
        write!(f, "{}", self.fmt_with(&names))
    }
}
