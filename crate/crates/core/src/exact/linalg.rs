//! Exact Gauss–Jordan elimination.

use num::{One, Zero};

use super::{Rational, RationalMatrix};

#[derive(Clone, Debug, PartialEq)]
pub enum SolveOutcome {
    /// A particular solution `X` with `A·X = rhs`.
    Solution(RationalMatrix),
    /// Row `row` of the reduced system reads `0 = nonzero`.
    Inconsistent { row: usize, residual: Vec<Rational> },
}

#[derive(Clone, Debug)]
pub struct RrefResult {
    /// Reduced row echelon form of the coefficient matrix.
    pub reduced: RationalMatrix,
    pub rank: usize,
    /// Pivot column of each nonzero row.
    pub pivots: Vec<usize>,
    /// Basis of the nullspace, one vector per free column.
    pub kernel: Vec<Vec<Rational>>,
    /// Present when a right-hand side was supplied.
    pub outcome: Option<SolveOutcome>,
}

impl RrefResult {
    pub fn solution(&self) -> Option<&RationalMatrix> {
        match &self.outcome {
            Some(SolveOutcome::Solution(x)) => Some(x),
            _ => None,
        }
    }

    pub fn is_inconsistent(&self) -> bool {
        matches!(self.outcome, Some(SolveOutcome::Inconsistent { .. }))
    }

    pub fn free_columns(&self) -> Vec<usize> {
        let ncols = self.reduced.cols();
        (0..ncols).filter(|c| !self.pivots.contains(c)).collect()
    }
}

/// Reduced row echelon form of `m`, optionally augmented by `rhs`.
pub fn rref(m: &RationalMatrix, rhs: Option<&RationalMatrix>) -> RrefResult {
    let rows = m.rows();
    let cols = m.cols();
    let extra = rhs.map_or(0, |r| {
        assert_eq!(r.rows(), rows, "rhs row count mismatch");
        r.cols()
    });
    let width = cols + extra;
    let mut a: Vec<Vec<Rational>> = (0..rows)
        .map(|i| {
            let mut row = m.row(i).to_vec();
            if let Some(r) = rhs {
                row.extend_from_slice(r.row(i));
            }
            row
        })
        .collect();

    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !a[i][c].is_zero()) else {
            continue;
        };
        a.swap(r, p);
        let inv = Rational::one() / &a[r][c];
        if !inv.is_one() {
            for x in a[r][c..width].iter_mut() {
                *x *= &inv;
            }
        }
        let pivot_row = a[r].clone();
        for (i, row) in a.iter_mut().enumerate() {
            if i == r || row[c].is_zero() {
                continue;
            }
            let f = row[c].clone();
            for (x, p) in row[c..width].iter_mut().zip(&pivot_row[c..width]) {
                if !p.is_zero() {
                    *x -= &f * p;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    let rank = pivots.len();

    let mut kernel = Vec::new();
    for f in (0..cols).filter(|c| !pivots.contains(c)) {
        let mut v = vec![Rational::zero(); cols];
        v[f] = Rational::one();
        for (i, &pc) in pivots.iter().enumerate() {
            v[pc] = -a[i][f].clone();
        }
        kernel.push(v);
    }

    let outcome = rhs.map(|_| {
        if let Some(row) = (rank..rows).find(|&i| a[i][cols..].iter().any(|x| !x.is_zero())) {
            return SolveOutcome::Inconsistent {
                row,
                residual: a[row][cols..].to_vec(),
            };
        }
        let mut x = RationalMatrix::zeros(cols, extra);
        for (i, &pc) in pivots.iter().enumerate() {
            for j in 0..extra {
                x[(pc, j)] = a[i][cols + j].clone();
            }
        }
        SolveOutcome::Solution(x)
    });

    let reduced = RationalMatrix::from_rows(a.into_iter().map(|row| row[..cols].to_vec()).collect())
        .unwrap_or_else(|_| RationalMatrix::zeros(rows, cols));
    let reduced = if rows == 0 { RationalMatrix::zeros(0, cols) } else { reduced };
    RrefResult {
        reduced,
        rank,
        pivots,
        kernel,
        outcome,
    }
}

/// Nullspace basis of `m`.
pub fn kernel(m: &RationalMatrix) -> Vec<Vec<Rational>> {
    rref(m, None).kernel
}

/// Solves `m·x = b` for a single column `b`.
pub fn solve_vector(m: &RationalMatrix, b: &[Rational]) -> Option<Vec<Rational>> {
    let rhs = RationalMatrix::from_columns(m.rows(), &[b.to_vec()]);
    rref(m, Some(&rhs)).solution().map(|x| x.column(0))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rational::int;

    #[test]
    fn identity_system() {
        let i3 = RationalMatrix::identity(3);
        let e1 = RationalMatrix::from_i64(&[&[1], &[0], &[0]]);
        let r = rref(&i3, Some(&e1));
        assert_eq!(r.rank, 3);
        assert_eq!(r.solution().unwrap(), &e1);
        assert!(r.kernel.is_empty());
    }

    #[test]
    fn inconsistent_system() {
        let a = RationalMatrix::from_i64(&[&[1, 1], &[2, 2]]);
        let b = RationalMatrix::from_i64(&[&[1], &[3]]);
        let r = rref(&a, Some(&b));
        assert!(r.is_inconsistent());
        assert_eq!(r.rank, 1);
        assert_eq!(r.kernel.len(), 1);
        if let Some(SolveOutcome::Inconsistent { row, residual }) = &r.outcome {
            assert_eq!(*row, 1);
            assert_eq!(residual, &vec![int(1)]);
        }
    }

    #[test]
    fn empty_rows() {
        let a = RationalMatrix::zeros(0, 3);
        let r = rref(&a, None);
        assert_eq!(r.rank, 0);
        assert_eq!(r.kernel.len(), 3);
    }
}
