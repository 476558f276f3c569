use std::fmt;

use num::Zero;

use super::{check_square, is_semisimple, BracketConvention, LieError};
use crate::exact::{Rational, RationalMatrix};

/// Semisimple residue: commuting semisimple `S_1..S_k`, the coefficients of the
/// Euler element in them, and optional images `χ(f_i)` of the semisimple basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ResidueData {
    pub s_list: Vec<RationalMatrix>,
    pub positive_combination: Vec<Rational>,
    pub chi: Option<Vec<RationalMatrix>>,
}

impl ResidueData {
    pub fn new(s_list: Vec<RationalMatrix>, positive_combination: Vec<Rational>) -> Self {
        ResidueData {
            s_list,
            positive_combination,
            chi: None,
        }
    }

    pub fn with_chi(mut self, chi: Vec<RationalMatrix>) -> Self {
        self.chi = Some(chi);
        self
    }

    pub fn k(&self) -> usize {
        self.s_list.len()
    }

    pub fn m(&self) -> usize {
        self.s_list.first().map_or(0, |s| s.rows())
    }

    /// `D = Σ aᵢ Sᵢ`.
    pub fn distinguished(&self) -> RationalMatrix {
        let m = self.m();
        let mut d = RationalMatrix::zeros(m, m);
        for (a, s) in self.positive_combination.iter().zip(&self.s_list) {
            d = &d + &s.scale(a);
        }
        d
    }

    /// `χ(f_i)` for `i < count`, zero matrices when no `χ` was supplied.
    pub fn chi_or_zero(&self, count: usize) -> Vec<RationalMatrix> {
        match &self.chi {
            Some(c) => c.clone(),
            None => vec![RationalMatrix::zeros(self.m(), self.m()); count],
        }
    }
}

/// First violated residue condition.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ResidueViolation {
    Shape(String),
    NotSemisimple { index: usize },
    NotCommuting { i: usize, j: usize },
    ChiNotCentralized { chi: usize, s: usize },
    NotHomomorphism { a: usize, b: usize },
}

impl fmt::Display for ResidueViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ResidueViolation::Shape(s) => write!(f, "{s}"),
            ResidueViolation::NotSemisimple { index } => write!(f, "S_{} is not semisimple", index + 1),
            ResidueViolation::NotCommuting { i, j } => write!(f, "S_{} and S_{} do not commute", i + 1, j + 1),
            ResidueViolation::ChiNotCentralized { chi, s } => {
                write!(f, "chi(f_{}) does not commute with S_{}", chi + 1, s + 1)
            }
            ResidueViolation::NotHomomorphism { a, b } => {
                write!(f, "chi violates the bracket relation for (f_{}, f_{})", a + 1, b + 1)
            }
        }
    }
}

impl std::error::Error for ResidueViolation {}

/// Checks every residue invariant. `s_constants[a][b][c]` is the coefficient of
/// `f_c` in `[f_a, f_b]`; `χ` must satisfy `[χ_a, χ_b] = Σ_c s_ab^c χ_c` in the
/// negative-commutator convention.
pub fn validate_residue(
    r: &ResidueData,
    s_constants: Option<&[Vec<Vec<Rational>>]>,
) -> Result<(), ResidueViolation> {
    let shape = |msg: String| Err(ResidueViolation::Shape(msg));
    if r.s_list.is_empty() {
        return shape("residue needs at least one S".into());
    }
    if r.positive_combination.len() != r.k() {
        return shape(format!(
            "positive combination has {} entries for {} matrices",
            r.positive_combination.len(),
            r.k()
        ));
    }
    let m = r.m();
    let square_of_size = |a: &RationalMatrix| matches!(check_square(a), Ok(n) if n == m);
    if m == 0 || !r.s_list.iter().all(square_of_size) {
        return shape("all S must be square of one size".into());
    }
    for (index, s) in r.s_list.iter().enumerate() {
        if !is_semisimple(s).map_err(|e: LieError| ResidueViolation::Shape(e.to_string()))? {
            return Err(ResidueViolation::NotSemisimple { index });
        }
    }
    for i in 0..r.k() {
        for j in i + 1..r.k() {
            if !r.s_list[i].commutes_with(&r.s_list[j]) {
                return Err(ResidueViolation::NotCommuting { i, j });
            }
        }
    }
    let Some(chi) = &r.chi else {
        return Ok(());
    };
    if !chi.iter().all(square_of_size) {
        return shape("chi images must match the size of S".into());
    }
    for (a, x) in chi.iter().enumerate() {
        for (s, sm) in r.s_list.iter().enumerate() {
            if !x.commutes_with(sm) {
                return Err(ResidueViolation::ChiNotCentralized { chi: a, s });
            }
        }
    }
    if let Some(c) = s_constants {
        if c.len() != chi.len() {
            return shape(format!("{} chi images for {} semisimple elements", chi.len(), c.len()));
        }
        let conv = BracketConvention::NegativeCommutator;
        for a in 0..chi.len() {
            for b in a + 1..chi.len() {
                let mut rhs = RationalMatrix::zeros(m, m);
                for (cc, coef) in c[a][b].iter().enumerate() {
                    if !coef.is_zero() {
                        rhs = &rhs + &chi[cc].scale(coef);
                    }
                }
                if conv.bracket(&chi[a], &chi[b]) != rhs {
                    return Err(ResidueViolation::NotHomomorphism { a, b });
                }
            }
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::int;

    #[test]
    fn commuting_diagonals() {
        let r = ResidueData::new(
            vec![RationalMatrix::diag(&[int(0), int(1)]), RationalMatrix::diag(&[int(1), int(0)])],
            vec![int(1), int(1)],
        );
        assert_eq!(validate_residue(&r, None), Ok(()));
        assert_eq!(r.distinguished(), RationalMatrix::identity(2));
    }

    #[test]
    fn nilpotent_s_rejected() {
        let r = ResidueData::new(
            vec![RationalMatrix::diag(&[int(0), int(1)]), RationalMatrix::from_i64(&[&[0, 1], &[0, 0]])],
            vec![int(1), int(0)],
        );
        assert_eq!(validate_residue(&r, None), Err(ResidueViolation::NotSemisimple { index: 1 }));
    }

    #[test]
    fn sl2_triple_for_binary_cubics() {
        // frame order (Vh, Vf, Ve): [Vh,Vf] = 2Vf, [Vh,Ve] = −2Ve, [Vf,Ve] = Vh
        let z = || int(0);
        let mut c = vec![vec![vec![z(), z(), z()]; 3]; 3];
        c[0][1][1] = int(2);
        c[1][0][1] = int(-2);
        c[0][2][2] = int(-2);
        c[2][0][2] = int(2);
        c[1][2][0] = int(1);
        c[2][1][0] = int(-1);
        let a = RationalMatrix::diag(&[int(-1), int(1)]);
        let b = RationalMatrix::unit(2, 0, 1);
        let cc = RationalMatrix::unit(2, 1, 0);
        let r = ResidueData::new(vec![RationalMatrix::identity(2).scale(&int(5))], vec![int(1)])
            .with_chi(vec![a.clone(), b.clone(), cc.clone()]);
        assert_eq!(validate_residue(&r, Some(&c)), Ok(()));
        let wrong = ResidueData::new(vec![RationalMatrix::identity(2)], vec![int(1)]).with_chi(vec![-&a, b, cc]);
        assert!(matches!(validate_residue(&wrong, Some(&c)), Err(ResidueViolation::NotHomomorphism { .. })));
    }
}
