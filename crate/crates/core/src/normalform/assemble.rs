use num::Zero;

use super::system::Residuals;
use super::{curvature, LogConnection, MatrixPolyMap, NormalFormError, NormalFormProblem, PolySystem};
use crate::exact::{Rational, RationalMatrix, WeightedPoly};
use crate::liealg::{jordan_chevalley, log_unipotent, JCMode};

/// A candidate point of `X_F`: one `B_j` per W-slot and one `N_l` per toral slot.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct XFPoint {
    pub b: Vec<MatrixPolyMap>,
    pub n: Vec<MatrixPolyMap>,
}

impl XFPoint {
    /// The point with the given affine coordinates (`u` block then the `n` blocks).
    pub fn from_coordinates(system: &PolySystem, z_weights: &[u32], coords: &[Rational]) -> Self {
        let nu = system.dim_u_f();
        let nw = system.w2.dim();
        let lift = |c: &[Rational]| -> Vec<WeightedPoly> {
            c.iter().map(|x| WeightedPoly::constant(z_weights, x.clone())).collect()
        };
        let zero = MatrixPolyMap::zeros(system.m, z_weights);
        let b = if nu == 0 {
            vec![zero.clone(); system.w_names.len()]
        } else {
            system.u_f.combine(&lift(&coords[..nu]), z_weights)
        };
        let n = (0..system.k)
            .map(|l| {
                if nw == 0 {
                    zero.clone()
                } else {
                    let start = nu + l * nw;
                    system.w2.combine(&lift(&coords[start..start + nw]), z_weights).remove(0)
                }
            })
            .collect();
        XFPoint { b, n }
    }

    /// Affine coordinates of the point, or a membership error naming the
    /// offending component.
    pub fn coordinates(&self, system: &PolySystem) -> Result<Vec<Rational>, NormalFormError> {
        if self.b.len() != system.w_names.len() || self.n.len() != system.k {
            return Err(NormalFormError::Shape(format!(
                "point has {} B and {} N components, expected {} and {}",
                self.b.len(),
                self.n.len(),
                system.w_names.len(),
                system.k
            )));
        }
        if self.b.iter().chain(&self.n).any(|x| x.m() != system.m) {
            return Err(NormalFormError::Shape(format!("point components must be {0}x{0}", system.m)));
        }
        let mut out = if self.b.is_empty() {
            Vec::new()
        } else {
            system
                .u_f
                .coordinates_of(&self.b)
                .ok_or_else(|| NormalFormError::Membership("B components are not in U_F".into()))?
        };
        for (l, n) in self.n.iter().enumerate() {
            let c = system
                .w2
                .coordinates_of(std::slice::from_ref(n))
                .ok_or_else(|| NormalFormError::Membership(format!("N{l} is not in the N-space")))?;
            out.extend(c);
        }
        Ok(out)
    }
}

/// `ω(e_t) = S_t + N_t`, `ω(f_s) = χ_s`, `ω(w_j) = B_j + Σ_l dπ_l(w_j) N_l`.
pub fn assemble_connection(
    problem: &NormalFormProblem,
    system: &PolySystem,
    p: &XFPoint,
) -> Result<LogConnection, NormalFormError> {
    p.coordinates(system)?;
    Ok(assemble_unchecked(problem, p))
}

fn assemble_unchecked(problem: &NormalFormProblem, p: &XFPoint) -> LogConnection {
    let d = problem.divisor();
    let c = problem.constants();
    let w = d.weights();
    let mut comps = vec![MatrixPolyMap::zeros(problem.m(), w); d.dim()];
    for (t, &i) in c.toral.iter().enumerate() {
        comps[i] = MatrixPolyMap::constant(&problem.residue().s_list[t], w).add(&p.n[t]);
    }
    for (s, &i) in c.semisimple.iter().enumerate() {
        comps[i] = MatrixPolyMap::constant(&problem.chi()[s], w);
    }
    for (j, &i) in c.w.iter().enumerate() {
        let mut x = p.b[j].clone();
        for (l, n) in p.n.iter().enumerate() {
            let pi = d.dpi(l, i);
            if !pi.is_zero() {
                x = x.add(&n.mul_poly(pi));
            }
        }
        comps[i] = x;
    }
    LogConnection::with_structure(d.clone(), problem.structure().clone(), comps)
        .expect("assembled components match the frame")
}

/// Outcome of checking a candidate point against both the emitted system and
/// the curvature of the assembled connection.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PointCheck {
    pub coordinates: Vec<Rational>,
    /// Indices into the system's equations that fail at the point.
    pub violated: Vec<usize>,
    pub flat: bool,
    pub nilpotent: bool,
    /// First nonzero curvature component of the assembled connection.
    pub witness: Option<((usize, usize), MatrixPolyMap)>,
}

impl PointCheck {
    pub fn in_xf(&self) -> bool {
        self.flat && self.nilpotent
    }
}

#[derive(Clone, Copy)]
enum Slot {
    Toral(usize),
    Semisimple,
    W(usize),
}

/// Curvature predicted from the residuals of the emitted equations.
fn predicted(problem: &NormalFormProblem, res: &Residuals, a: usize, b: usize) -> MatrixPolyMap {
    let d = problem.divisor();
    let c = problem.constants();
    let zero = MatrixPolyMap::zeros(problem.m(), d.weights());
    let slot = |i: usize| {
        if let Some(t) = c.toral.iter().position(|&x| x == i) {
            Slot::Toral(t)
        } else if let Some(j) = c.w.iter().position(|&x| x == i) {
            Slot::W(j)
        } else {
            Slot::Semisimple
        }
    };
    let cc = |l: usize, l2: usize| -> MatrixPolyMap {
        match l.cmp(&l2) {
            std::cmp::Ordering::Less => res.nn[&(l, l2)].clone(),
            std::cmp::Ordering::Greater => res.nn[&(l2, l)].neg(),
            std::cmp::Ordering::Equal => zero.clone(),
        }
    };
    let pi = |j: usize, l: usize| d.dpi(l, c.w[j]);
    let k = problem.k();
    let tw = |t: usize, j: usize| -> MatrixPolyMap {
        let mut r = res.zn[&(j, t)].neg();
        for l in 0..k {
            r = r.add(&cc(t, l).mul_poly(pi(j, l)));
        }
        r
    };
    let ww = |i: usize, j: usize| -> MatrixPolyMap {
        let mut r = if i < j { res.curvature[&(i, j)].clone() } else { res.curvature[&(j, i)].neg() };
        for l in 0..k {
            r = r.add(&res.zn[&(i, l)].mul_poly(pi(j, l)));
            r = r.sub(&res.zn[&(j, l)].mul_poly(pi(i, l)));
            for l2 in 0..k {
                r = r.add(&cc(l, l2).mul_poly(&(pi(i, l) * pi(j, l2))));
            }
        }
        r
    };
    match (slot(a), slot(b)) {
        (Slot::Toral(t), Slot::Toral(u)) => cc(t, u),
        (Slot::Toral(t), Slot::W(j)) => tw(t, j),
        (Slot::W(j), Slot::Toral(t)) => tw(t, j).neg(),
        (Slot::W(i), Slot::W(j)) => ww(i, j),
        _ => zero,
    }
}

/// Evaluates the emitted system at `p` and, independently, the curvature of
/// the assembled connection. Every curvature component must equal the one
/// predicted from the equation residuals, and `N_l^m` must match the
/// nilpotency equations; a mismatch is an internal error.
pub fn check_xf_point(
    problem: &NormalFormProblem,
    system: &PolySystem,
    p: &XFPoint,
) -> Result<PointCheck, NormalFormError> {
    let coords = p.coordinates(system)?;
    let values = system.evaluate(&coords);
    let violated: Vec<usize> = values
        .iter()
        .enumerate()
        .filter(|(_, v)| !v.is_zero())
        .map(|(i, _)| i)
        .collect();
    let res = system.residuals(&values, problem.divisor().weights());
    let conn = assemble_unchecked(problem, p);
    let curv = curvature(&conn);
    for ((a, b), r) in &curv {
        let pred = predicted(problem, &res, *a, *b);
        if &pred != r {
            return Err(NormalFormError::Internal(format!(
                "curvature ({a},{b}) disagrees with the emitted equations: direct {r:?}, predicted {pred:?}"
            )));
        }
    }
    for (l, n) in p.n.iter().enumerate() {
        if n.pow(problem.m() as u32) != res.nilpotency[&l] {
            return Err(NormalFormError::Internal(format!("N{l}^m disagrees with the nilpotency equations")));
        }
    }
    let witness = curv.into_iter().find(|(_, r)| !r.is_zero());
    let flat = witness.is_none();
    let system_flat = violated
        .iter()
        .all(|&i| system.equations[i].tag == super::EquationTag::Nilpotency);
    if flat != system_flat {
        return Err(NormalFormError::Internal(
            "flatness verdict disagrees with the emitted system".into(),
        ));
    }
    let nilpotent = res.nilpotency.values().all(MatrixPolyMap::is_zero);
    Ok(PointCheck {
        coordinates: coords,
        violated,
        flat,
        nilpotent,
        witness,
    })
}

/// Multiplicative Jordan–Chevalley split of a monodromy matrix with the
/// logarithm of its unipotent part.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MonodromySplit {
    pub semisimple: RationalMatrix,
    pub unipotent: RationalMatrix,
    pub log_unipotent: RationalMatrix,
}

pub fn monodromy_split(m: &RationalMatrix) -> Result<MonodromySplit, NormalFormError> {
    let jc = jordan_chevalley(m, JCMode::Multiplicative)?;
    let log_u = log_unipotent(&jc.other)?;
    Ok(MonodromySplit {
        semisimple: jc.semisimple,
        unipotent: jc.other,
        log_unipotent: log_u,
    })
}
