use std::collections::{BTreeMap, BTreeSet};
use std::sync::Arc;

use num::Zero;

use super::{MatrixPolyMap, NormalFormError};
use crate::divisor::{AlgebroidConstants, FreeDivisor, StructureFunctions, VectorFieldPoly};
use crate::exact::{integer_eigenvalues, kernel, Monomial, Rational, RationalMatrix, WeightedPoly};
use crate::liealg::{ad_operator, validate_residue, BracketConvention, ResidueData};

const BRACKET: BracketConvention = BracketConvention::NegativeCommutator;

/// A divisor together with a validated semisimple residue.
#[derive(Clone, Debug)]
pub struct NormalFormProblem {
    divisor: Arc<FreeDivisor>,
    structure: Arc<StructureFunctions>,
    constants: AlgebroidConstants,
    residue: ResidueData,
    chi: Vec<RationalMatrix>,
}

/// Which linear system a [`GradedSolutionSpace`] solves.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum SpaceFamily {
    /// `U_F`: the B-components, one slot per W-type frame element.
    W1,
    /// One N-slot; `W_F^(2)` is `k` copies of it and it equals the symmetry algebra.
    W2,
}

/// Position of the free unknown a basis element is normalized against.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Pivot {
    pub slot: usize,
    pub row: usize,
    pub col: usize,
    pub monomial: Monomial,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BasisElement {
    /// One matrix map per slot of the family.
    pub components: Vec<MatrixPolyMap>,
    pub degree: u64,
    pub pivot: Pivot,
}

/// Basis of a graded solution space, organized by E-degree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradedSolutionSpace {
    pub family: SpaceFamily,
    pub slots: usize,
    pub basis: Vec<BasisElement>,
    pub dims: BTreeMap<u64, usize>,
}

impl GradedSolutionSpace {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    /// Dimension table per slot, attributing each basis element to its pivot slot.
    pub fn slot_dims(&self) -> Vec<BTreeMap<u64, usize>> {
        let mut out = vec![BTreeMap::new(); self.slots];
        for b in &self.basis {
            *out[b.pivot.slot].entry(b.degree).or_insert(0) += 1;
        }
        out
    }

    /// `Σ c_a · basis_a`, with coefficients possibly polynomial in extra variables.
    pub fn combine(&self, coords: &[WeightedPoly], weights: &[u32]) -> Vec<MatrixPolyMap> {
        assert_eq!(coords.len(), self.basis.len());
        let m = self.basis.first().map(|b| b.components[0].m());
        let mut out: Vec<MatrixPolyMap> = match m {
            Some(m) => vec![MatrixPolyMap::zeros(m, weights); self.slots],
            None => return Vec::new(),
        };
        for (c, b) in coords.iter().zip(&self.basis) {
            if c.is_zero() {
                continue;
            }
            for (slot, comp) in b.components.iter().enumerate() {
                if !comp.is_zero() {
                    out[slot] = out[slot].add(&comp.embed(weights).mul_poly(c));
                }
            }
        }
        out
    }

    /// Coordinates of `value` (one map per slot) read off at the pivots, or
    /// `None` when `value` is not in the span.
    pub fn coordinates_of(&self, value: &[MatrixPolyMap]) -> Option<Vec<Rational>> {
        let nz = value.first()?.weights().len();
        let coords = self.coordinates_in(value, nz, &[])?;
        Some(coords.iter().map(|c| c.constant_value().unwrap_or_else(Rational::zero)).collect())
    }

    /// Coordinates of a family of maps whose entries live in a ring with the
    /// divisor variables first (`nz` of them) followed by parameters of weights
    /// `params`. Coordinates come back as polynomials in the parameters.
    pub fn coordinates_in(&self, value: &[MatrixPolyMap], nz: usize, params: &[u32]) -> Option<Vec<WeightedPoly>> {
        if value.len() != self.slots {
            return None;
        }
        let full = value.first()?.weights().to_vec();
        if full.len() != nz + params.len() || full[nz..] != *params {
            return None;
        }
        let coords: Vec<WeightedPoly> = self
            .basis
            .iter()
            .map(|b| {
                value[b.pivot.slot]
                    .entry(b.pivot.row, b.pivot.col)
                    .split_at(nz, params)
                    .remove(&b.pivot.monomial)
                    .unwrap_or_else(|| WeightedPoly::zero(params))
            })
            .collect();
        let lifted: Vec<WeightedPoly> = coords.iter().map(|c| c.lift_at(nz, &full)).collect();
        let matches = if self.basis.is_empty() {
            value.iter().all(MatrixPolyMap::is_zero)
        } else {
            self.combine(&lifted, &full).as_slice() == value
        };
        matches.then_some(coords)
    }
}

type Operator<'a> = dyn Fn(&[MatrixPolyMap]) -> Vec<MatrixPolyMap> + 'a;

impl NormalFormProblem {
    pub fn new(divisor: Arc<FreeDivisor>, residue: ResidueData) -> Result<Self, NormalFormError> {
        let structure = Arc::new(StructureFunctions::compute(&divisor)?);
        let constants = AlgebroidConstants::extract(&divisor, &structure)?;
        if residue.k() != divisor.toral_rank() {
            return Err(NormalFormError::Residue(format!(
                "residue has {} matrices but the divisor has {} toral elements",
                residue.k(),
                divisor.toral_rank()
            )));
        }
        if residue.positive_combination != divisor.euler_combination() {
            return Err(NormalFormError::Residue(
                "positive combination differs from the divisor's Euler combination".into(),
            ));
        }
        let ns = constants.semisimple.len();
        if let Some(chi) = &residue.chi {
            if chi.len() != ns {
                return Err(NormalFormError::Residue(format!(
                    "{} chi images for {} semisimple frame elements",
                    chi.len(),
                    ns
                )));
            }
        }
        validate_residue(&residue, Some(&constants.s_constants))
            .map_err(|v| NormalFormError::Residue(v.to_string()))?;
        let chi = residue.chi_or_zero(ns);
        Ok(NormalFormProblem {
            divisor,
            structure,
            constants,
            residue,
            chi,
        })
    }

    pub fn divisor(&self) -> &Arc<FreeDivisor> {
        &self.divisor
    }

    pub fn structure(&self) -> &Arc<StructureFunctions> {
        &self.structure
    }

    pub fn constants(&self) -> &AlgebroidConstants {
        &self.constants
    }

    pub fn residue(&self) -> &ResidueData {
        &self.residue
    }

    pub fn chi(&self) -> &[RationalMatrix] {
        &self.chi
    }

    pub fn m(&self) -> usize {
        self.residue.m()
    }

    pub fn k(&self) -> usize {
        self.constants.k()
    }

    pub fn d_matrix(&self) -> RationalMatrix {
        self.residue.distinguished()
    }

    /// Integer eigenvalues of `X ↦ DX − XD`.
    pub fn ad_d_eigenvalues(&self) -> Result<Vec<i64>, NormalFormError> {
        Ok(integer_eigenvalues(&ad_operator(&self.d_matrix())?)?)
    }

    fn toral_field(&self, t: usize) -> &VectorFieldPoly {
        self.divisor.field(self.constants.toral[t])
    }

    fn semisimple_field(&self, s: usize) -> &VectorFieldPoly {
        self.divisor.field(self.constants.semisimple[s])
    }

    /// W-type frame element fields `Z_j`.
    pub fn w_field(&self, j: usize) -> &VectorFieldPoly {
        self.divisor.field(self.constants.w[j])
    }

    /// Residuals of the B-equations for the slots in `class`:
    /// `E_t(B_j) − n_tj B_j − [B_j, S_t]` and `Y_s(B_j) − Σ_k λ_sj^k B_k − [B_j, χ_s]`.
    fn w1_operator(&self, class: &[usize], b: &[MatrixPolyMap]) -> Vec<MatrixPolyMap> {
        let c = &self.constants;
        let w = self.divisor.weights();
        let mut out = Vec::new();
        for (t, s_t) in self.residue.s_list.iter().enumerate() {
            let st = MatrixPolyMap::constant(s_t, w);
            for (pos, &j) in class.iter().enumerate() {
                let r = b[pos]
                    .apply_field(self.toral_field(t))
                    .sub(&b[pos].scale(&c.toral_weights[t][j]))
                    .sub(&b[pos].bracket(&st, BRACKET));
                out.push(r);
            }
        }
        for (s, chi_s) in self.chi.iter().enumerate() {
            let ch = MatrixPolyMap::constant(chi_s, w);
            for (pos, &j) in class.iter().enumerate() {
                let mut r = b[pos]
                    .apply_field(self.semisimple_field(s))
                    .sub(&b[pos].bracket(&ch, BRACKET));
                for (kpos, &k) in class.iter().enumerate() {
                    let l = &c.lambda[s][j][k];
                    if !l.is_zero() {
                        r = r.sub(&b[kpos].scale(l));
                    }
                }
                out.push(r);
            }
        }
        out
    }

    /// Residuals `E_t(N) − [N, S_t]` and `Y_s(N) − [N, χ_s]`.
    pub(crate) fn w2_operator(&self, n: &MatrixPolyMap) -> Vec<MatrixPolyMap> {
        let w = self.divisor.weights();
        let mut out = Vec::new();
        for (t, s_t) in self.residue.s_list.iter().enumerate() {
            let st = MatrixPolyMap::constant(s_t, w);
            out.push(n.apply_field(self.toral_field(t)).sub(&n.bracket(&st, BRACKET)));
        }
        for (s, chi_s) in self.chi.iter().enumerate() {
            let ch = MatrixPolyMap::constant(chi_s, w);
            out.push(n.apply_field(self.semisimple_field(s)).sub(&n.bracket(&ch, BRACKET)));
        }
        out
    }

    /// Residuals of the W1 equations for a full tuple `(B_1..B_d)`.
    pub fn w1_residuals(&self, b: &[MatrixPolyMap]) -> Vec<MatrixPolyMap> {
        let all: Vec<usize> = (0..self.constants.w.len()).collect();
        self.w1_operator(&all, b)
    }

    /// Slots linked by nonzero `λ` constants, in increasing order.
    fn coupling_classes(&self) -> Vec<Vec<usize>> {
        let d = self.constants.w.len();
        let mut parent: Vec<usize> = (0..d).collect();
        fn find(p: &mut [usize], x: usize) -> usize {
            let mut r = x;
            while p[r] != r {
                r = p[r];
            }
            p[x] = r;
            r
        }
        for block in &self.constants.lambda {
            for (j, row) in block.iter().enumerate() {
                for (k, l) in row.iter().enumerate() {
                    if !l.is_zero() {
                        let (a, b) = (find(&mut parent, j), find(&mut parent, k));
                        parent[a.max(b)] = a.min(b);
                    }
                }
            }
        }
        let mut classes: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
        for j in 0..d {
            let r = find(&mut parent, j);
            classes.entry(r).or_default().push(j);
        }
        classes.into_values().collect()
    }

    /// Candidate E-degrees `λ + shift` that are realized by some monomial.
    fn candidate_degrees(&self, shifts: &[i64]) -> Result<BTreeSet<u64>, NormalFormError> {
        let ev = self.ad_d_eigenvalues()?;
        let w = self.divisor.weights();
        let mut out = BTreeSet::new();
        for &s in shifts {
            for &l in &ev {
                let d = l + s;
                if d >= 0 && !Monomial::all_of_weighted_degree(w, d as u64).is_empty() {
                    out.insert(d as u64);
                }
            }
        }
        Ok(out)
    }

    /// Solutions of `op = 0` among tuples of maps homogeneous of degree `d`.
    fn solve_at_degree(&self, slots: usize, degree: u64, op: &Operator) -> Vec<(Vec<MatrixPolyMap>, Pivot)> {
        let m = self.m();
        let w = self.divisor.weights();
        let monos = Monomial::all_of_weighted_degree(w, degree);
        let mut columns = Vec::new();
        for slot in 0..slots {
            for row in 0..m {
                for col in 0..m {
                    for mono in &monos {
                        columns.push(Pivot {
                            slot,
                            row,
                            col,
                            monomial: mono.clone(),
                        });
                    }
                }
            }
        }
        let unit_tuple = |p: &Pivot| -> Vec<MatrixPolyMap> {
            let mut t = vec![MatrixPolyMap::zeros(m, w); slots];
            t[p.slot] = MatrixPolyMap::unit_times(
                m,
                p.row,
                p.col,
                WeightedPoly::term(w, p.monomial.clone(), Rational::from_integer(1.into())),
            );
            t
        };
        let mut row_index: BTreeMap<(usize, usize, usize, Monomial), usize> = BTreeMap::new();
        let mut images = Vec::with_capacity(columns.len());
        for p in &columns {
            let res = op(&unit_tuple(p));
            let mut img = Vec::new();
            for (e, r) in res.iter().enumerate() {
                for (a, b, mono, c) in r.coefficients() {
                    let key = (e, a, b, mono);
                    let next = row_index.len();
                    let idx = *row_index.entry(key).or_insert(next);
                    img.push((idx, c));
                }
            }
            images.push(img);
        }
        let kern: Vec<Vec<Rational>> = if row_index.is_empty() {
            (0..columns.len())
                .map(|i| {
                    let mut v = vec![Rational::zero(); columns.len()];
                    v[i] = Rational::from_integer(1.into());
                    v
                })
                .collect()
        } else {
            let mut a = RationalMatrix::zeros(row_index.len(), columns.len());
            for (j, img) in images.into_iter().enumerate() {
                for (i, c) in img {
                    a[(i, j)] += &c;
                }
            }
            kernel(&a)
        };
        kern.into_iter()
            .map(|v| {
                let mut t = vec![MatrixPolyMap::zeros(m, w); slots];
                let mut pivot = None;
                for (j, c) in v.iter().enumerate() {
                    if c.is_zero() {
                        continue;
                    }
                    let p = &columns[j];
                    if pivot.is_none() && *c == Rational::from_integer(1.into()) {
                        pivot = Some(p.clone());
                    }
                    let unit = unit_tuple(p);
                    t[p.slot] = t[p.slot].add(&unit[p.slot].scale(c));
                }
                (t, pivot.expect("kernel vectors carry a unit free entry"))
            })
            .collect()
    }

    /// The W1 solution space `U_F` at a single degree, for tests of the degree bound.
    pub fn w1_at_degree(&self, degree: u64) -> Vec<Vec<MatrixPolyMap>> {
        let d = self.constants.w.len();
        let mut out = Vec::new();
        for class in self.coupling_classes() {
            let op = |b: &[MatrixPolyMap]| self.w1_operator(&class, b);
            for (t, _) in self.solve_at_degree(class.len(), degree, &op) {
                let mut full = vec![MatrixPolyMap::zeros(self.m(), self.divisor.weights()); d];
                for (pos, &j) in class.iter().enumerate() {
                    full[j] = t[pos].clone();
                }
                out.push(full);
            }
        }
        out
    }

    /// Single-slot W2 solutions at one degree.
    pub fn w2_at_degree(&self, degree: u64) -> Vec<MatrixPolyMap> {
        let op = |n: &[MatrixPolyMap]| self.w2_operator(&n[0]);
        self.solve_at_degree(1, degree, &op).into_iter().map(|(t, _)| t[0].clone()).collect()
    }

    /// `U_F`, solved jointly over slots coupled by the semisimple action.
    pub fn solve_w1(&self) -> Result<GradedSolutionSpace, NormalFormError> {
        let d = self.constants.w.len();
        let mut basis = Vec::new();
        let mut dims = BTreeMap::new();
        for class in self.coupling_classes() {
            let shifts: Vec<i64> = class.iter().map(|&j| self.constants.grades[j]).collect();
            let op = |b: &[MatrixPolyMap]| self.w1_operator(&class, b);
            for degree in self.candidate_degrees(&shifts)? {
                for (t, pivot) in self.solve_at_degree(class.len(), degree, &op) {
                    let mut full = vec![MatrixPolyMap::zeros(self.m(), self.divisor.weights()); d];
                    for (pos, &j) in class.iter().enumerate() {
                        full[j] = t[pos].clone();
                    }
                    *dims.entry(degree).or_insert(0) += 1;
                    basis.push(BasisElement {
                        components: full,
                        degree,
                        pivot: Pivot {
                            slot: class[pivot.slot],
                            ..pivot
                        },
                    });
                }
            }
        }
        basis.sort_by(|a, b| (a.degree, &a.pivot).cmp(&(b.degree, &b.pivot)));
        Ok(GradedSolutionSpace {
            family: SpaceFamily::W1,
            slots: d,
            basis,
            dims,
        })
    }

    /// The single-slot N-space; `W_F^(2)` is one copy per toral element.
    pub fn solve_w2(&self) -> Result<GradedSolutionSpace, NormalFormError> {
        let op = |n: &[MatrixPolyMap]| self.w2_operator(&n[0]);
        let mut basis = Vec::new();
        let mut dims = BTreeMap::new();
        for degree in self.candidate_degrees(&[0])? {
            for (t, pivot) in self.solve_at_degree(1, degree, &op) {
                *dims.entry(degree).or_insert(0) += 1;
                basis.push(BasisElement {
                    components: t,
                    degree,
                    pivot,
                });
            }
        }
        Ok(GradedSolutionSpace {
            family: SpaceFamily::W2,
            slots: 1,
            basis,
            dims,
        })
    }

    /// Infinitesimal automorphisms of the trivial representation; the same
    /// equations as one N-slot.
    pub fn symmetry_algebra(&self) -> Result<SymmetryAlgebra, NormalFormError> {
        let space = self.solve_w2()?;
        let degree0 = space.dims.get(&0).copied().unwrap_or(0);
        let positive = space.dim() - degree0;
        Ok(SymmetryAlgebra {
            space,
            degree0,
            positive,
        })
    }

    /// Upper bound on solution degrees: `max eigenvalue + max shift`.
    pub fn degree_bound(&self) -> Result<i64, NormalFormError> {
        let ev = self.ad_d_eigenvalues()?;
        let max_shift = self.constants.grades.iter().copied().chain([0]).max().unwrap_or(0);
        Ok(ev.iter().copied().max().unwrap_or(0) + max_shift)
    }
}

/// Lie algebra of `Aut(p*F)`: degree-0 part (reductive) and positive part (unipotent).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SymmetryAlgebra {
    pub space: GradedSolutionSpace,
    pub degree0: usize,
    pub positive: usize,
}

impl SymmetryAlgebra {
    pub fn dim(&self) -> usize {
        self.space.dim()
    }
}
