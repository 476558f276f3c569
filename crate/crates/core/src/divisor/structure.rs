use num::Zero;

use super::{DivisorError, FreeDivisor, VectorFieldPoly};
use crate::exact::{PolyMatrix, Rational, WeightedPoly};

/// Expansion `[V_i, V_j] = Σ_k c_ij^k V_k` for every ordered frame pair.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StructureFunctions {
    n: usize,
    c: Vec<WeightedPoly>,
}

impl StructureFunctions {
    pub fn compute(d: &FreeDivisor) -> Result<Self, DivisorError> {
        let a = d.frame_matrix();
        let det = a.det()?;
        if det.is_zero() {
            return Err(DivisorError::DegenerateFrame);
        }
        let adj = a.adjugate()?;
        let n = d.dim();
        let w = d.weights();
        let mut c = vec![WeightedPoly::zero(w); n * n * n];
        for i in 0..n {
            for j in i + 1..n {
                let br = d.field(i).bracket(d.field(j));
                let cij = expand_in_frame(&br, &adj, &det).map_err(|_| DivisorError::NotClosed {
                    i: d.frame()[i].name.clone(),
                    j: d.frame()[j].name.clone(),
                })?;
                for (k, p) in cij.into_iter().enumerate() {
                    c[(j * n + i) * n + k] = -&p;
                    c[(i * n + j) * n + k] = p;
                }
            }
        }
        Ok(StructureFunctions { n, c })
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize, k: usize) -> &WeightedPoly {
        &self.c[(i * self.n + j) * self.n + k]
    }

    /// `Σ_k c_ij^k V_k` rebuilt from the table.
    pub fn recombine(&self, d: &FreeDivisor, i: usize, j: usize) -> VectorFieldPoly {
        let mut acc = VectorFieldPoly::zero(d.weights());
        for k in 0..self.n {
            let c = self.get(i, j, k);
            if !c.is_zero() {
                acc = acc.add(&d.field(k).mul_poly(c));
            }
        }
        acc
    }

    /// Nonzero cyclic sums `Σ_cyc (Σ_k c_ij^k c_kl^m − V_l(c_ij^m))`, reported as `(i, j, l, m, value)`.
    pub fn jacobi_defects(&self, d: &FreeDivisor) -> Vec<(usize, usize, usize, usize, WeightedPoly)> {
        let n = self.n;
        let mut out = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                for l in j + 1..n {
                    for m in 0..n {
                        let mut total = WeightedPoly::zero(d.weights());
                        for (a, b, c) in [(i, j, l), (j, l, i), (l, i, j)] {
                            for k in 0..n {
                                let x = self.get(a, b, k);
                                let y = self.get(k, c, m);
                                if !x.is_zero() && !y.is_zero() {
                                    total = &total + &(x * y);
                                }
                            }
                            total = &total - &d.field(c).apply(self.get(a, b, m));
                        }
                        if !total.is_zero() {
                            out.push((i, j, l, m, total));
                        }
                    }
                }
            }
        }
        out
    }

    /// Structure functions that are not E-homogeneous of degree `m_i + m_j − m_k`.
    pub fn homogeneity_violations(&self, d: &FreeDivisor) -> Vec<(usize, usize, usize)> {
        let n = self.n;
        let mut out = Vec::new();
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    let c = self.get(i, j, k);
                    if c.is_zero() {
                        continue;
                    }
                    let deg = d.grade(i) + d.grade(j) - d.grade(k);
                    if deg < 0 || !c.is_homogeneous_of(deg as u64) {
                        out.push((i, j, k));
                    }
                }
            }
        }
        out
    }
}

/// Coefficients of `v` in the frame whose matrix has adjugate `adj` and determinant `det`.
pub fn expand_in_frame(
    v: &VectorFieldPoly,
    adj: &PolyMatrix,
    det: &WeightedPoly,
) -> Result<Vec<WeightedPoly>, crate::exact::ExactError> {
    let n = v.nvars();
    (0..n)
        .map(|k| {
            let mut num = WeightedPoly::zero(v.weights());
            for (l, b) in v.coeffs().iter().enumerate() {
                if !b.is_zero() && !adj[(l, k)].is_zero() {
                    num = &num + &(b * &adj[(l, k)]);
                }
            }
            num.exact_divide(det)
        })
        .collect()
}

/// Constant parts of the bracket relations of a positive homogeneous frame.
///
/// `[e_t, w_j] = n_tj w_j`, `[f_s, w_j] = Σ_k λ_sj^k w_k`, `[f_a, f_b] = Σ_c s_ab^c f_c`,
/// toral elements commute with each other and with the `f_s`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlgebroidConstants {
    pub toral: Vec<usize>,
    pub semisimple: Vec<usize>,
    pub w: Vec<usize>,
    pub grades: Vec<i64>,
    /// `n[t][j]`
    pub toral_weights: Vec<Vec<Rational>>,
    /// `lambda[s][j][k]`
    pub lambda: Vec<Vec<Vec<Rational>>>,
    /// `s_constants[a][b][c]`
    pub s_constants: Vec<Vec<Vec<Rational>>>,
}

impl AlgebroidConstants {
    pub fn extract(d: &FreeDivisor, sf: &StructureFunctions) -> Result<Self, DivisorError> {
        let toral = d.toral_indices();
        let semisimple = d.semisimple_indices();
        let w = d.w_indices();
        let n = d.dim();
        let name = |i: usize| d.frame()[i].name.clone();
        let constant = |i: usize, j: usize, k: usize| -> Result<Rational, DivisorError> {
            let c = sf.get(i, j, k);
            if c.is_zero() {
                return Ok(Rational::zero());
            }
            c.constant_value().ok_or_else(|| {
                DivisorError::Structure(format!(
                    "[{}, {}] has non-constant coefficient {} on {}",
                    name(i),
                    name(j),
                    c,
                    name(k)
                ))
            })
        };
        let expect_zero = |i: usize, j: usize, k: usize| -> Result<(), DivisorError> {
            if sf.get(i, j, k).is_zero() {
                Ok(())
            } else {
                Err(DivisorError::Structure(format!(
                    "[{}, {}] has an unexpected component on {}",
                    name(i),
                    name(j),
                    name(k)
                )))
            }
        };
        for &a in &toral {
            for &b in toral.iter().chain(&semisimple) {
                for k in 0..n {
                    expect_zero(a, b, k)?;
                }
            }
        }
        let mut toral_weights = Vec::new();
        for &t in &toral {
            let mut row = Vec::new();
            for &j in &w {
                for k in 0..n {
                    if k != j {
                        expect_zero(t, j, k)?;
                    }
                }
                row.push(constant(t, j, j)?);
            }
            toral_weights.push(row);
        }
        let mut lambda = Vec::new();
        for &s in &semisimple {
            let mut block = Vec::new();
            for &j in &w {
                for &k in toral.iter().chain(&semisimple) {
                    expect_zero(s, j, k)?;
                }
                block.push(w.iter().map(|&k| constant(s, j, k)).collect::<Result<Vec<_>, _>>()?);
            }
            lambda.push(block);
        }
        let mut s_constants = Vec::new();
        for &a in &semisimple {
            let mut block = Vec::new();
            for &b in &semisimple {
                for &k in toral.iter().chain(&w) {
                    expect_zero(a, b, k)?;
                }
                block.push(semisimple.iter().map(|&c| constant(a, b, c)).collect::<Result<Vec<_>, _>>()?);
            }
            s_constants.push(block);
        }
        let grades: Vec<i64> = w.iter().map(|&j| d.grade(j)).collect();
        for (jj, &m) in grades.iter().enumerate() {
            let mut total = Rational::zero();
            for (t, a) in d.euler_combination().iter().enumerate() {
                total += a * &toral_weights[t][jj];
            }
            if total != Rational::from_integer(m.into()) {
                return Err(DivisorError::Structure(format!(
                    "{} is declared with grade {} but [E, {}] = {} {}",
                    name(w[jj]),
                    m,
                    name(w[jj]),
                    total,
                    name(w[jj])
                )));
            }
        }
        Ok(AlgebroidConstants {
            toral,
            semisimple,
            w,
            grades,
            toral_weights,
            lambda,
            s_constants,
        })
    }

    pub fn k(&self) -> usize {
        self.toral.len()
    }
}
