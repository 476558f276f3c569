use std::collections::BTreeMap;
use std::fmt;

use num::{One, Zero};
use serde::Serialize;

use super::{GradedSolutionSpace, MatrixPolyMap, NormalFormError, NormalFormProblem};
use crate::divisor::FreeDivisor;
use crate::exact::{rref, Monomial, Rational, RationalMatrix, SolveOutcome, WeightedPoly};
use crate::liealg::BracketConvention;

const BRACKET: BracketConvention = BracketConvention::NegativeCommutator;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum CoordinateFamily {
    /// Coordinate on `U_F`.
    B,
    /// Coordinate on one copy of the N-space.
    N,
}

/// One affine coordinate of `U_F ⊕ W_F^(2)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Coordinate {
    pub name: String,
    pub family: CoordinateFamily,
    /// W-slot of the pivot for `B`, toral copy for `N`.
    pub slot: usize,
    pub degree: u64,
    pub entry: (usize, usize),
    pub monomial: Monomial,
    /// Index into the basis of the owning space.
    pub basis_index: usize,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum EquationTag {
    Curvature,
    #[serde(rename = "ZN")]
    Zn,
    NnCommute,
    Nilpotency,
}

impl EquationTag {
    pub fn as_str(self) -> &'static str {
        match self {
            EquationTag::Curvature => "curvature",
            EquationTag::Zn => "ZN",
            EquationTag::NnCommute => "nn-commute",
            EquationTag::Nilpotency => "nilpotency",
        }
    }
}

/// One scalar equation: the coefficient of `z_monomial` in entry `entry` of a
/// tagged matrix residual, as a polynomial in the coordinates.
///
/// `slots` is `(i, j)` for curvature (W-slots), `(j, l)` for ZN, `(l, l')` for
/// commutation and `(l, l)` for nilpotency.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolyEquation {
    pub tag: EquationTag,
    pub slots: (usize, usize),
    pub entry: (usize, usize),
    pub z_monomial: Monomial,
    pub poly: WeightedPoly,
}

/// The polynomial system cutting `X_F` out of `U_F ⊕ W_F^(2)`.
#[derive(Clone, Debug)]
pub struct PolySystem {
    pub m: usize,
    pub k: usize,
    pub variables: Vec<String>,
    pub w_names: Vec<String>,
    pub coordinates: Vec<Coordinate>,
    pub equations: Vec<PolyEquation>,
    pub u_f: GradedSolutionSpace,
    pub w2: GradedSolutionSpace,
    pub aut_degree0: usize,
    pub aut_positive: usize,
}

/// Residual matrices of a system evaluated at a point.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Residuals {
    /// `Q_ij` for W-slot pairs `i < j`.
    pub curvature: BTreeMap<(usize, usize), MatrixPolyMap>,
    /// `Y_jl = Z_j(N_l) − [N_l, B_j]`.
    pub zn: BTreeMap<(usize, usize), MatrixPolyMap>,
    /// `[N_l, N_l']` for `l < l'`.
    pub nn: BTreeMap<(usize, usize), MatrixPolyMap>,
    /// `N_l^m`.
    pub nilpotency: BTreeMap<usize, MatrixPolyMap>,
}

impl PolySystem {
    pub fn dim_u_f(&self) -> usize {
        self.u_f.dim()
    }

    /// Total dimension of the `k` copies of the N-space.
    pub fn dim_w2(&self) -> usize {
        self.k * self.w2.dim()
    }

    pub fn coordinate_names(&self) -> Vec<String> {
        self.coordinates.iter().map(|c| c.name.clone()).collect()
    }

    pub fn coordinate_weights(&self) -> Vec<u32> {
        vec![1; self.coordinates.len()]
    }

    pub fn label(&self, e: &PolyEquation) -> String {
        let (a, b) = e.slots;
        let z = e.z_monomial.fmt_with(&self.variables);
        let (r, s) = e.entry;
        match e.tag {
            EquationTag::Curvature => format!("R({},{})[{r},{s}] @ {z}", self.w_names[a], self.w_names[b]),
            EquationTag::Zn => format!("{}(N{b}) - [N{b},B{a}] [{r},{s}] @ {z}", self.w_names[a]),
            EquationTag::NnCommute => format!("[N{a},N{b}][{r},{s}] @ {z}"),
            EquationTag::Nilpotency => format!("N{a}^{}[{r},{s}] @ {z}", self.m),
        }
    }

    /// Values of every equation at a rational point.
    pub fn evaluate(&self, point: &[Rational]) -> Vec<Rational> {
        self.equations.iter().map(|e| e.poly.evaluate(point)).collect()
    }

    /// Indices of the equations that do not vanish at `point`.
    pub fn violated(&self, point: &[Rational]) -> Vec<usize> {
        self.evaluate(point)
            .iter()
            .enumerate()
            .filter(|(_, v)| !v.is_zero())
            .map(|(i, _)| i)
            .collect()
    }

    /// Reassembles the tagged residual matrices from equation values.
    pub fn residuals(&self, values: &[Rational], z_weights: &[u32]) -> Residuals {
        let mut out = Residuals {
            curvature: BTreeMap::new(),
            zn: BTreeMap::new(),
            nn: BTreeMap::new(),
            nilpotency: BTreeMap::new(),
        };
        let zero = MatrixPolyMap::zeros(self.m, z_weights);
        let d = self.w_names.len();
        for i in 0..d {
            for j in i + 1..d {
                out.curvature.insert((i, j), zero.clone());
            }
            for l in 0..self.k {
                out.zn.insert((i, l), zero.clone());
            }
        }
        for l in 0..self.k {
            for l2 in l + 1..self.k {
                out.nn.insert((l, l2), zero.clone());
            }
            out.nilpotency.insert(l, zero.clone());
        }
        for (e, v) in self.equations.iter().zip(values) {
            if v.is_zero() {
                continue;
            }
            let target = match e.tag {
                EquationTag::Curvature => out.curvature.get_mut(&e.slots),
                EquationTag::Zn => out.zn.get_mut(&e.slots),
                EquationTag::NnCommute => out.nn.get_mut(&e.slots),
                EquationTag::Nilpotency => out.nilpotency.get_mut(&e.slots.0),
            }
            .expect("equation slots are declared");
            let (r, s) = e.entry;
            let mut p = target.entry(r, s).clone();
            p.add_term(e.z_monomial.clone(), v.clone());
            target.set(r, s, p);
        }
        out
    }

    /// Substitutes `subs[c]` for coordinate `c`; all substitutes share a
    /// parameter ring. Returns the nonzero restricted equations with tags.
    pub fn restrict(&self, subs: &[WeightedPoly], params: &[u32]) -> Vec<(EquationTag, WeightedPoly)> {
        assert_eq!(subs.len(), self.coordinates.len());
        self.equations
            .iter()
            .map(|e| (e.tag, e.poly.compose(subs, params)))
            .filter(|(_, p)| !p.is_zero())
            .collect()
    }

    pub fn to_text(&self) -> String {
        use std::fmt::Write;
        let names = self.coordinate_names();
        let mut s = String::new();
        let _ = writeln!(s, "dim U_F = {}", self.dim_u_f());
        let _ = writeln!(s, "dim W_F^(2) = {}", self.dim_w2());
        let _ = writeln!(s, "dim aut = {} (degree 0) + {} (positive)", self.aut_degree0, self.aut_positive);
        let _ = writeln!(s, "coordinates ({}):", self.coordinates.len());
        for c in &self.coordinates {
            let slot = match c.family {
                CoordinateFamily::B => self.w_names[c.slot].clone(),
                CoordinateFamily::N => format!("N{}", c.slot),
            };
            let _ = writeln!(
                s,
                "  {} : {} degree {} entry [{},{}] {}",
                c.name,
                slot,
                c.degree,
                c.entry.0,
                c.entry.1,
                c.monomial.fmt_with(&self.variables)
            );
        }
        let _ = writeln!(s, "equations ({}):", self.equations.len());
        for e in &self.equations {
            let _ = writeln!(s, "  [{}] {} : {} = 0", e.tag.as_str(), self.label(e), e.poly.fmt_with(&names));
        }
        s
    }
}

impl fmt::Display for PolySystem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

/// General elements of `U_F` and each N-copy over the combined ring
/// `(z, coordinates)`.
pub(crate) struct GeneralElement {
    pub weights: Vec<u32>,
    pub b: Vec<MatrixPolyMap>,
    pub n: Vec<MatrixPolyMap>,
}

fn coordinates(u_f: &GradedSolutionSpace, w2: &GradedSolutionSpace, k: usize) -> Vec<Coordinate> {
    let mut out = Vec::new();
    for (idx, b) in u_f.basis.iter().enumerate() {
        out.push(Coordinate {
            name: format!("u{idx}"),
            family: CoordinateFamily::B,
            slot: b.pivot.slot,
            degree: b.degree,
            entry: (b.pivot.row, b.pivot.col),
            monomial: b.pivot.monomial.clone(),
            basis_index: idx,
        });
    }
    for l in 0..k {
        for (idx, b) in w2.basis.iter().enumerate() {
            out.push(Coordinate {
                name: format!("n{l}_{idx}"),
                family: CoordinateFamily::N,
                slot: l,
                degree: b.degree,
                entry: (b.pivot.row, b.pivot.col),
                monomial: b.pivot.monomial.clone(),
                basis_index: idx,
            });
        }
    }
    out
}

fn general_element(d: &FreeDivisor, u_f: &GradedSolutionSpace, w2: &GradedSolutionSpace, k: usize, m: usize) -> GeneralElement {
    let nz = d.dim();
    let ncoord = u_f.dim() + k * w2.dim();
    let mut weights = d.weights().to_vec();
    weights.extend(std::iter::repeat_n(1, ncoord));
    let var = |c: usize| WeightedPoly::var(&weights, nz + c);
    let b = if u_f.dim() == 0 {
        vec![MatrixPolyMap::zeros(m, &weights); u_f.slots]
    } else {
        let coords: Vec<WeightedPoly> = (0..u_f.dim()).map(var).collect();
        u_f.combine(&coords, &weights)
    };
    let n = (0..k)
        .map(|l| {
            if w2.dim() == 0 {
                return MatrixPolyMap::zeros(m, &weights);
            }
            let coords: Vec<WeightedPoly> =
                (0..w2.dim()).map(|idx| var(u_f.dim() + l * w2.dim() + idx)).collect();
            w2.combine(&coords, &weights).remove(0)
        })
        .collect();
    GeneralElement { weights, b, n }
}

/// Emits the `X_F` system: W–W curvature, `Z_j(N_l) = [N_l, B_j]`, pairwise
/// commutation of the `N_l`, and `N_l^m = 0`, each matched per z-monomial and
/// matrix entry.
pub fn emit_xf(problem: &NormalFormProblem) -> Result<PolySystem, NormalFormError> {
    let d = problem.divisor();
    let sf = problem.structure();
    let c = problem.constants();
    let m = problem.m();
    let k = problem.k();
    let u_f = problem.solve_w1()?;
    let aut = problem.symmetry_algebra()?;
    let w2 = aut.space.clone();
    let coords = coordinates(&u_f, &w2, k);
    let g = general_element(d, &u_f, &w2, k, m);
    let nz = d.dim();
    let cw = vec![1u32; coords.len()];
    let wts = &g.weights;

    // ω at the origin of the fibre: S_t on toral, χ_s on semisimple, B_j on W.
    let mut omega0: Vec<MatrixPolyMap> = vec![MatrixPolyMap::zeros(m, wts); d.dim()];
    for (t, &i) in c.toral.iter().enumerate() {
        omega0[i] = MatrixPolyMap::constant(&problem.residue().s_list[t], wts);
    }
    for (s, &i) in c.semisimple.iter().enumerate() {
        omega0[i] = MatrixPolyMap::constant(&problem.chi()[s], wts);
    }
    for (j, &i) in c.w.iter().enumerate() {
        omega0[i] = g.b[j].clone();
    }
    let fields: Vec<_> = c.w.iter().map(|&i| d.field(i).embed(wts)).collect();

    let mut equations = Vec::new();
    let mut push = |tag: EquationTag, slots: (usize, usize), r: &MatrixPolyMap| {
        for row in 0..m {
            for col in 0..m {
                for (z, poly) in r.entry(row, col).split_at(nz, &cw) {
                    equations.push(PolyEquation {
                        tag,
                        slots,
                        entry: (row, col),
                        z_monomial: z,
                        poly,
                    });
                }
            }
        }
    };

    let nw = c.w.len();
    for i in 0..nw {
        for j in i + 1..nw {
            let (a, b) = (c.w[i], c.w[j]);
            let mut q = g.b[j].apply_field(&fields[i]).sub(&g.b[i].apply_field(&fields[j]));
            for (kk, w0) in omega0.iter().enumerate() {
                let coef = sf.get(a, b, kk);
                if !coef.is_zero() {
                    q = q.sub(&w0.mul_poly(&coef.embed(wts)));
                }
            }
            q = q.add(&g.b[i].bracket(&g.b[j], BRACKET));
            push(EquationTag::Curvature, (i, j), &q);
        }
    }
    for (j, field) in fields.iter().enumerate().take(nw) {
        for l in 0..k {
            let y = g.n[l].apply_field(field).sub(&g.n[l].bracket(&g.b[j], BRACKET));
            push(EquationTag::Zn, (j, l), &y);
        }
    }
    for l in 0..k {
        for l2 in l + 1..k {
            push(EquationTag::NnCommute, (l, l2), &g.n[l].bracket(&g.n[l2], BRACKET));
        }
    }
    for l in 0..k {
        push(EquationTag::Nilpotency, (l, l), &g.n[l].pow(m as u32));
    }

    Ok(PolySystem {
        m,
        k,
        variables: d.variables().to_vec(),
        w_names: c.w.iter().map(|&i| d.frame()[i].name.clone()).collect(),
        coordinates: coords,
        equations,
        u_f,
        w2,
        aut_degree0: aut.degree0,
        aut_positive: aut.positive,
    })
}

/// Monic, deduplicated, nonzero versions of `eqs`, in first-seen order.
pub fn normalize_equations(eqs: &[WeightedPoly]) -> Vec<WeightedPoly> {
    let mut out: Vec<WeightedPoly> = Vec::new();
    for e in eqs {
        let Some((_, lc)) = e.leading_term() else {
            continue;
        };
        let monic = e.scale(&(Rational::one() / lc));
        if !out.contains(&monic) {
            out.push(monic);
        }
    }
    out
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CertificateOutcome {
    /// The linear consequences contradict each other.
    Inconsistent,
    /// Every equation vanishes identically once the fixed variables are
    /// substituted; unfixed variables are free.
    Consistent(Vec<Option<Rational>>),
    /// Propagation stalled with nonlinear equations left over.
    Undecided,
}

/// Record of a linear-propagation run: solve the linear equations, substitute
/// the variables they fix, repeat.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinearCertificate {
    pub outcome: CertificateOutcome,
    /// Variables fixed along the way, in the order they became known.
    pub fixed: Vec<(usize, Rational)>,
    pub rounds: usize,
}

fn linear_rows(eqs: &[WeightedPoly], n: usize) -> (RationalMatrix, RationalMatrix) {
    let lin: Vec<&WeightedPoly> = eqs.iter().filter(|e| e.total_degree().is_some_and(|d| d <= 1)).collect();
    let mut a = RationalMatrix::zeros(lin.len(), n);
    let mut b = RationalMatrix::zeros(lin.len(), 1);
    for (r, e) in lin.iter().enumerate() {
        for (mono, c) in e.terms() {
            match mono.exponents().iter().position(|&x| x > 0) {
                Some(v) => a[(r, v)] = c.clone(),
                None => b[(r, 0)] = -c.clone(),
            }
        }
    }
    (a, b)
}

/// Decides a polynomial system by linear propagation alone.
pub fn linear_certificate(eqs: &[WeightedPoly], weights: &[u32]) -> LinearCertificate {
    let n = weights.len();
    let mut current: Vec<WeightedPoly> = eqs.iter().filter(|e| !e.is_zero()).cloned().collect();
    let mut known: Vec<Option<Rational>> = vec![None; n];
    let mut fixed = Vec::new();
    let mut rounds = 0;
    loop {
        rounds += 1;
        if current.is_empty() {
            return LinearCertificate {
                outcome: CertificateOutcome::Consistent(known),
                fixed,
                rounds,
            };
        }
        if current.iter().any(|e| e.is_constant() && !e.is_zero()) {
            return LinearCertificate {
                outcome: CertificateOutcome::Inconsistent,
                fixed,
                rounds,
            };
        }
        let (a, b) = linear_rows(&current, n);
        let res = rref(&a, Some(&b));
        let Some(SolveOutcome::Solution(_)) = &res.outcome else {
            return LinearCertificate {
                outcome: CertificateOutcome::Inconsistent,
                fixed,
                rounds,
            };
        };
        // A reduced row with a single nonzero entry pins its pivot variable.
        let mut newly = Vec::new();
        let x = res.solution().expect("consistent");
        for (r, &pc) in res.pivots.iter().enumerate() {
            let lone = (0..n).all(|c| c == pc || res.reduced[(r, c)].is_zero());
            if lone && known[pc].is_none() {
                newly.push((pc, x[(pc, 0)].clone()));
            }
        }
        if newly.is_empty() {
            return LinearCertificate {
                outcome: CertificateOutcome::Undecided,
                fixed,
                rounds,
            };
        }
        for (v, val) in &newly {
            known[*v] = Some(val.clone());
            fixed.push((*v, val.clone()));
        }
        let subs: Vec<WeightedPoly> = (0..n)
            .map(|v| match &known[v] {
                Some(val) => WeightedPoly::constant(weights, val.clone()),
                None => WeightedPoly::var(weights, v),
            })
            .collect();
        current = current
            .iter()
            .map(|e| e.compose(&subs, weights))
            .filter(|e| !e.is_zero())
            .collect();
    }
}
