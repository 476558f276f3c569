use std::fmt;

use num::Zero;

use crate::divisor::VectorFieldPoly;
use crate::exact::{Monomial, Rational, RationalMatrix, WeightedPoly};
use crate::liealg::BracketConvention;

/// Polynomial map `V → gl_m`, stored as an `m×m` grid of polynomials.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct MatrixPolyMap {
    m: usize,
    entries: Vec<WeightedPoly>,
}

impl MatrixPolyMap {
    pub fn zeros(m: usize, weights: &[u32]) -> Self {
        MatrixPolyMap {
            m,
            entries: vec![WeightedPoly::zero(weights); m * m],
        }
    }

    pub fn constant(a: &RationalMatrix, weights: &[u32]) -> Self {
        assert!(a.is_square());
        let m = a.rows();
        MatrixPolyMap {
            m,
            entries: a.data().iter().map(|c| WeightedPoly::constant(weights, c.clone())).collect(),
        }
    }

    /// `p · E_{rs}`.
    pub fn unit_times(m: usize, r: usize, s: usize, p: WeightedPoly) -> Self {
        let mut out = Self::zeros(m, p.weights());
        out.entries[r * m + s] = p;
        out
    }

    /// `p · A` for a constant matrix `A`.
    pub fn matrix_times(a: &RationalMatrix, p: &WeightedPoly) -> Self {
        let m = a.rows();
        MatrixPolyMap {
            m,
            entries: a.data().iter().map(|c| p.scale(c)).collect(),
        }
    }

    pub fn from_entries(m: usize, entries: Vec<WeightedPoly>) -> Self {
        assert_eq!(entries.len(), m * m);
        assert!(m > 0);
        let w = entries[0].weights().to_vec();
        assert!(entries.iter().all(|e| e.weights() == w.as_slice()), "weight mismatch");
        MatrixPolyMap { m, entries }
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn weights(&self) -> &[u32] {
        self.entries[0].weights()
    }

    pub fn entry(&self, r: usize, s: usize) -> &WeightedPoly {
        &self.entries[r * self.m + s]
    }

    pub fn entries(&self) -> &[WeightedPoly] {
        &self.entries
    }

    pub fn set(&mut self, r: usize, s: usize, p: WeightedPoly) {
        assert_eq!(p.weights(), self.weights());
        self.entries[r * self.m + s] = p;
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(WeightedPoly::is_zero)
    }

    fn zip(&self, other: &Self, f: impl Fn(&WeightedPoly, &WeightedPoly) -> WeightedPoly) -> Self {
        assert_eq!(self.m, other.m);
        MatrixPolyMap {
            m: self.m,
            entries: self.entries.iter().zip(&other.entries).map(|(a, b)| f(a, b)).collect(),
        }
    }

    fn map(&self, f: impl Fn(&WeightedPoly) -> WeightedPoly) -> Self {
        MatrixPolyMap {
            m: self.m,
            entries: self.entries.iter().map(f).collect(),
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        self.zip(other, |a, b| a + b)
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.zip(other, |a, b| a - b)
    }

    pub fn neg(&self) -> Self {
        self.map(|a| -a)
    }

    pub fn scale(&self, c: &Rational) -> Self {
        self.map(|a| a.scale(c))
    }

    pub fn mul_poly(&self, p: &WeightedPoly) -> Self {
        if p.is_zero() {
            return Self::zeros(self.m, self.weights());
        }
        self.map(|a| a * p)
    }

    pub fn matmul(&self, other: &Self) -> Self {
        let m = self.m;
        assert_eq!(m, other.m);
        let mut out = Self::zeros(m, self.weights());
        for i in 0..m {
            for j in 0..m {
                let mut acc = WeightedPoly::zero(self.weights());
                for k in 0..m {
                    let (a, b) = (self.entry(i, k), other.entry(k, j));
                    if !a.is_zero() && !b.is_zero() {
                        acc = &acc + &(a * b);
                    }
                }
                out.entries[i * m + j] = acc;
            }
        }
        out
    }

    pub fn pow(&self, e: u32) -> Self {
        let m = self.m;
        let mut out = Self::constant(&RationalMatrix::identity(m), self.weights());
        for _ in 0..e {
            out = out.matmul(self);
        }
        out
    }

    pub fn bracket(&self, other: &Self, conv: BracketConvention) -> Self {
        let xy = self.matmul(other);
        let yx = other.matmul(self);
        match conv {
            BracketConvention::Commutator => xy.sub(&yx),
            BracketConvention::NegativeCommutator => yx.sub(&xy),
        }
    }

    /// Derivative along a vector field, entry by entry.
    pub fn apply_field(&self, v: &VectorFieldPoly) -> Self {
        self.map(|a| v.apply(a))
    }

    /// Value at a point as a constant matrix.
    pub fn evaluate(&self, point: &[Rational]) -> RationalMatrix {
        RationalMatrix::from_vector(
            self.m,
            self.m,
            &self.entries.iter().map(|e| e.evaluate(point)).collect::<Vec<_>>(),
        )
    }

    /// Substitutes polynomials for variables in every entry.
    pub fn compose(&self, subs: &[WeightedPoly], target_weights: &[u32]) -> Self {
        self.map(|a| a.compose(subs, target_weights))
    }

    pub fn embed(&self, target_weights: &[u32]) -> Self {
        self.map(|a| a.embed(target_weights))
    }

    /// Constant matrix when every entry is constant.
    pub fn constant_value(&self) -> Option<RationalMatrix> {
        let vals: Option<Vec<Rational>> = self
            .entries
            .iter()
            .map(|e| if e.is_zero() { Some(Rational::zero()) } else { e.constant_value() })
            .collect();
        vals.map(|v| RationalMatrix::from_vector(self.m, self.m, &v))
    }

    /// Nonzero coefficients keyed by `(row, col, monomial)`.
    pub fn coefficients(&self) -> Vec<(usize, usize, Monomial, Rational)> {
        let mut out = Vec::new();
        for r in 0..self.m {
            for s in 0..self.m {
                for (mono, c) in self.entry(r, s).terms() {
                    out.push((r, s, mono.clone(), c.clone()));
                }
            }
        }
        out
    }

    /// Whether every entry is E-homogeneous of degree `d` (zero entries allowed).
    pub fn is_homogeneous_of(&self, d: u64) -> bool {
        self.entries.iter().all(|e| e.is_zero() || e.is_homogeneous_of(d))
    }

    pub fn fmt_with(&self, names: &[String]) -> String {
        let rows: Vec<String> = (0..self.m)
            .map(|r| {
                let cells: Vec<String> = (0..self.m).map(|s| self.entry(r, s).fmt_with(names)).collect();
                format!("[{}]", cells.join(", "))
            })
            .collect();
        format!("[{}]", rows.join(", "))
    }
}

impl fmt::Debug for MatrixPolyMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names: Vec<String> = (0..self.weights().len()).map(|i| format!("z{i}")).collect();
        write!(f, "{}", self.fmt_with(&names))
    }
}
