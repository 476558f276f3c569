//! Dimension oracle that does not use the graded solver: every matrix unit
//! times every monomial up to a degree cap is a column, residuals are
//! assembled by hand from constant-matrix commutators, and the kernel
//! dimension is `columns − rank`.

use std::collections::BTreeMap;

use logres::exact::{rref, Monomial, Rational, RationalMatrix, WeightedPoly};
use logres::normalform::NormalFormProblem;
use num::Zero;

type Key = (usize, usize, usize, usize, Monomial);

fn monomials_up_to(weights: &[u32], cap: u64) -> Vec<Monomial> {
    (0..=cap).flat_map(|d| Monomial::all_of_weighted_degree(weights, d)).collect()
}

fn add_matrix(col: &mut BTreeMap<Key, Rational>, eq: usize, slot: usize, m: &RationalMatrix, mono: &Monomial, c: &Rational) {
    for r in 0..m.rows() {
        for s in 0..m.cols() {
            let v = &m[(r, s)] * c;
            if !v.is_zero() {
                *col.entry((eq, slot, r, s, mono.clone())).or_insert_with(Rational::zero) += v;
            }
        }
    }
}

fn add_poly_times_unit(col: &mut BTreeMap<Key, Rational>, eq: usize, slot: usize, p: &WeightedPoly, r: usize, s: usize) {
    for (mono, c) in p.terms() {
        *col.entry((eq, slot, r, s, mono.clone())).or_insert_with(Rational::zero) += c.clone();
    }
}

fn kernel_dim(columns: Vec<BTreeMap<Key, Rational>>) -> usize {
    let mut rows: BTreeMap<Key, usize> = BTreeMap::new();
    for col in &columns {
        for k in col.keys() {
            let n = rows.len();
            rows.entry(k.clone()).or_insert(n);
        }
    }
    if rows.is_empty() {
        return columns.len();
    }
    let mut a = RationalMatrix::zeros(rows.len(), columns.len());
    for (j, col) in columns.iter().enumerate() {
        for (k, v) in col {
            a[(rows[k], j)] = v.clone();
        }
    }
    columns.len() - rref(&a, None).rank
}

/// `[X, Y]` in the negative-commutator convention, `YX − XY`.
fn pbracket(x: &RationalMatrix, y: &RationalMatrix) -> RationalMatrix {
    &(y * x) - &(x * y)
}

/// Brute-force `dim U_F` with monomials up to `cap`.
pub fn w1_dim(p: &NormalFormProblem, cap: u64) -> usize {
    let d = p.divisor();
    let c = p.constants();
    let m = p.m();
    let w = d.weights();
    let nw = c.w.len();
    let monos = monomials_up_to(w, cap);
    let mut columns = Vec::new();
    for j0 in 0..nw {
        for r in 0..m {
            for s in 0..m {
                let unit = RationalMatrix::unit(m, r, s);
                for mono in &monos {
                    let mu = WeightedPoly::term(w, mono.clone(), Rational::from_integer(1.into()));
                    let mut col = BTreeMap::new();
                    let mut eq = 0;
                    for (t, st) in p.residue().s_list.iter().enumerate() {
                        let e = d.field(c.toral[t]);
                        add_poly_times_unit(&mut col, eq, j0, &e.apply(&mu), r, s);
                        add_poly_times_unit(&mut col, eq, j0, &mu.scale(&-c.toral_weights[t][j0].clone()), r, s);
                        add_matrix(&mut col, eq, j0, &pbracket(&unit, st), mono, &Rational::from_integer((-1).into()));
                        eq += 1;
                    }
                    for (sidx, chi) in p.chi().iter().enumerate() {
                        let y = d.field(c.semisimple[sidx]);
                        add_poly_times_unit(&mut col, eq, j0, &y.apply(&mu), r, s);
                        add_matrix(&mut col, eq, j0, &pbracket(&unit, chi), mono, &Rational::from_integer((-1).into()));
                        // row j of the equation picks up −λ_sj^{j0} B_{j0}
                        for j in 0..nw {
                            let l = &c.lambda[sidx][j][j0];
                            if !l.is_zero() {
                                add_poly_times_unit(&mut col, eq, j, &mu.scale(&-l.clone()), r, s);
                            }
                        }
                        eq += 1;
                    }
                    columns.push(col);
                }
            }
        }
    }
    kernel_dim(columns)
}

/// Brute-force dimension of one N-slot (equivalently the symmetry algebra).
/// With `degree0_only` only constant candidates are used.
pub fn n_dim(p: &NormalFormProblem, cap: u64, degree0_only: bool) -> usize {
    let d = p.divisor();
    let c = p.constants();
    let m = p.m();
    let w = d.weights();
    let monos = if degree0_only { vec![Monomial::one(w.len())] } else { monomials_up_to(w, cap) };
    let mut columns = Vec::new();
    for r in 0..m {
        for s in 0..m {
            let unit = RationalMatrix::unit(m, r, s);
            for mono in &monos {
                let mu = WeightedPoly::term(w, mono.clone(), Rational::from_integer(1.into()));
                let mut col = BTreeMap::new();
                let mut eq = 0;
                let dirs: Vec<(usize, &RationalMatrix)> = c
                    .toral
                    .iter()
                    .copied()
                    .zip(p.residue().s_list.iter())
                    .chain(c.semisimple.iter().copied().zip(p.chi().iter()))
                    .collect();
                for (frame_idx, a) in dirs {
                    add_poly_times_unit(&mut col, eq, 0, &d.field(frame_idx).apply(&mu), r, s);
                    add_matrix(&mut col, eq, 0, &pbracket(&unit, a), mono, &Rational::from_integer((-1).into()));
                    eq += 1;
                }
                columns.push(col);
            }
        }
    }
    kernel_dim(columns)
}
