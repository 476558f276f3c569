use std::ops::{Index, IndexMut};



use super::{ExactError, WeightedPoly};

/// Dense matrix of polynomials sharing one weight vector.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolyMatrix {
    rows: usize,
    cols: usize,
    weights: Vec<u32>,
    entries: Vec<WeightedPoly>,
}

impl PolyMatrix {
    pub fn zeros(rows: usize, cols: usize, weights: &[u32]) -> Self {
        PolyMatrix {
            rows,
            cols,
            weights: weights.to_vec(),
            entries: vec![WeightedPoly::zero(weights); rows * cols],
        }
    }

    pub fn from_rows(weights: &[u32], rows: Vec<Vec<WeightedPoly>>) -> Result<Self, ExactError> {
        let r = rows.len();
        let c = rows.first().map_or(0, |x| x.len());
        if rows.iter().any(|x| x.len() != c) {
            return Err(ExactError::Shape("ragged polynomial matrix".into()));
        }
        let entries: Vec<WeightedPoly> = rows.into_iter().flatten().collect();
        if let Some(bad) = entries.iter().find(|p| p.weights() != weights) {
            return Err(ExactError::WeightMismatch {
                left: weights.to_vec(),
                right: bad.weights().to_vec(),
            });
        }
        Ok(PolyMatrix {
            rows: r,
            cols: c,
            weights: weights.to_vec(),
            entries,
        })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn weights(&self) -> &[u32] {
        &self.weights
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows, &self.weights);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t[(j, i)] = self[(i, j)].clone();
            }
        }
        t
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.cols, other.rows);
        let mut out = Self::zeros(self.rows, other.cols, &self.weights);
        for i in 0..self.rows {
            for j in 0..other.cols {
                let mut acc = WeightedPoly::zero(&self.weights);
                for k in 0..self.cols {
                    if self[(i, k)].is_zero() || other[(k, j)].is_zero() {
                        continue;
                    }
                    acc = &acc + &(&self[(i, k)] * &other[(k, j)]);
                }
                out[(i, j)] = acc;
            }
        }
        out
    }

    /// Fraction-free (Bareiss) determinant; every intermediate division is exact.
    pub fn det(&self) -> Result<WeightedPoly, ExactError> {
        if self.rows != self.cols {
            return Err(ExactError::Shape("determinant of a non-square matrix".into()));
        }
        let n = self.rows;
        if n == 0 {
            return Ok(WeightedPoly::one(&self.weights));
        }
        let mut m: Vec<Vec<WeightedPoly>> = (0..n)
            .map(|i| (0..n).map(|j| self[(i, j)].clone()).collect())
            .collect();
        let mut negate = false;
        let mut prev = WeightedPoly::one(&self.weights);
        for k in 0..n - 1 {
            if m[k][k].is_zero() {
                let Some(p) = (k + 1..n).find(|&i| !m[i][k].is_zero()) else {
                    return Ok(WeightedPoly::zero(&self.weights));
                };
                m.swap(k, p);
                negate = !negate;
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let num = &(&m[i][j] * &m[k][k]) - &(&m[i][k] * &m[k][j]);
                    m[i][j] = num.exact_divide(&prev)?;
                }
            }
            prev = m[k][k].clone();
        }
        let d = m[n - 1][n - 1].clone();
        Ok(if negate { -&d } else { d })
    }

    fn minor(&self, skip_r: usize, skip_c: usize) -> Self {
        let rows: Vec<Vec<WeightedPoly>> = (0..self.rows)
            .filter(|&i| i != skip_r)
            .map(|i| {
                (0..self.cols)
                    .filter(|&j| j != skip_c)
                    .map(|j| self[(i, j)].clone())
                    .collect()
            })
            .collect();
        if rows.is_empty() {
            return Self::zeros(0, 0, &self.weights);
        }
        Self::from_rows(&self.weights, rows).expect("minor shape")
    }

    /// Classical adjugate: `adj(A)·A = A·adj(A) = det(A)·I`.
    pub fn adjugate(&self) -> Result<Self, ExactError> {
        if self.rows != self.cols {
            return Err(ExactError::Shape("adjugate of a non-square matrix".into()));
        }
        let n = self.rows;
        let mut adj = Self::zeros(n, n, &self.weights);
        for i in 0..n {
            for j in 0..n {
                let d = self.minor(i, j).det()?;
                adj[(j, i)] = if (i + j) % 2 == 1 { -&d } else { d };
            }
        }
        if n == 1 {
            adj[(0, 0)] = WeightedPoly::one(&self.weights);
        }
        Ok(adj)
    }

    pub fn is_scalar_multiple_of_identity(&self, s: &WeightedPoly) -> bool {
        (0..self.rows).all(|i| {
            (0..self.cols).all(|j| {
                if i == j {
                    &self[(i, j)] == s
                } else {
                    self[(i, j)].is_zero()
                }
            })
        })
    }
}

impl Index<(usize, usize)> for PolyMatrix {
    type Output = WeightedPoly;
    fn index(&self, (i, j): (usize, usize)) -> &WeightedPoly {
        &self.entries[i * self.cols + j]
    }
}

impl IndexMut<(usize, usize)> for PolyMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut WeightedPoly {
        &mut self.entries[i * self.cols + j]
    }
}
