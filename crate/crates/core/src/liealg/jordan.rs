use num::One;
use serde::Serialize;

use super::{check_square, LieError};
use crate::exact::{char_poly, minimal_poly, Rational, RationalMatrix};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum JCMode {
    Additive,
    Multiplicative,
}

/// `A = S + N` (additive) or `A = S·U` (multiplicative) with commuting parts.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct JCDecomposition {
    pub mode: JCMode,
    pub semisimple: RationalMatrix,
    /// `N` in additive mode, `U` in multiplicative mode.
    pub other: RationalMatrix,
}

pub fn is_semisimple(a: &RationalMatrix) -> Result<bool, LieError> {
    check_square(a)?;
    let mp = minimal_poly(a)?;
    Ok(mp.gcd(&mp.derivative()).degree() == Some(0))
}

pub fn is_nilpotent(a: &RationalMatrix) -> Result<bool, LieError> {
    let m = check_square(a)?;
    Ok(a.pow(m as u32).is_zero())
}

pub fn is_unipotent(a: &RationalMatrix) -> Result<bool, LieError> {
    let m = check_square(a)?;
    is_nilpotent(&(a - &RationalMatrix::identity(m)))
}

/// Chevalley's Newton iteration `x ← x − g(x)·g′(x)⁻¹` with `g` the squarefree
/// part of the characteristic polynomial; the limit is the semisimple part.
fn semisimple_part(a: &RationalMatrix) -> Result<RationalMatrix, LieError> {
    let g = char_poly(a)?.squarefree_part();
    let dg = g.derivative();
    let mut x = a.clone();
    loop {
        let gx = g.eval_matrix(&x);
        if gx.is_zero() {
            return Ok(x);
        }
        let inv = dg
            .eval_matrix(&x)
            .inverse()
            .ok_or_else(|| LieError::Internal("g′(x) singular during Newton iteration".into()))?;
        x = &x - &(&gx * &inv);
    }
}

pub fn jordan_chevalley(a: &RationalMatrix, mode: JCMode) -> Result<JCDecomposition, LieError> {
    check_square(a)?;
    let s = semisimple_part(a)?;
    let other = match mode {
        JCMode::Additive => a - &s,
        JCMode::Multiplicative => {
            let inv = s.inverse().ok_or(LieError::NotInvertible)?;
            &inv * a
        }
    };
    let out = JCDecomposition {
        mode,
        semisimple: s,
        other,
    };
    out.check(a)?;
    Ok(out)
}

impl JCDecomposition {
    fn check(&self, a: &RationalMatrix) -> Result<(), LieError> {
        let s = &self.semisimple;
        let o = &self.other;
        let (recombined, ok_other) = match self.mode {
            JCMode::Additive => (s + o, is_nilpotent(o)?),
            JCMode::Multiplicative => (s * o, is_unipotent(o)?),
        };
        if &recombined != a {
            return Err(LieError::Internal("parts do not recombine to the input".into()));
        }
        if !s.commutes_with(o) {
            return Err(LieError::Internal("parts do not commute".into()));
        }
        if !ok_other {
            return Err(LieError::Internal("second part is not nilpotent/unipotent".into()));
        }
        if !is_semisimple(s)? {
            return Err(LieError::Internal("first part is not semisimple".into()));
        }
        Ok(())
    }
}

/// `log U = Σ_{k≥1} (−1)^{k+1} (U − I)^k / k`, a finite sum for unipotent `U`.
pub fn log_unipotent(u: &RationalMatrix) -> Result<RationalMatrix, LieError> {
    let m = check_square(u)?;
    if !is_unipotent(u)? {
        return Err(LieError::Internal("log of a non-unipotent matrix".into()));
    }
    let n = u - &RationalMatrix::identity(m);
    let mut acc = RationalMatrix::zeros(m, m);
    let mut power = n.clone();
    for k in 1..=m {
        if power.is_zero() {
            break;
        }
        let mut c = Rational::one() / Rational::from_integer(k.into());
        if k % 2 == 0 {
            c = -c;
        }
        acc = &acc + &power.scale(&c);
        power = &power * &n;
    }
    Ok(acc)
}

/// `exp N = Σ N^k / k!`, a finite sum for nilpotent `N`.
pub fn exp_nilpotent(n: &RationalMatrix) -> Result<RationalMatrix, LieError> {
    let m = check_square(n)?;
    if !is_nilpotent(n)? {
        return Err(LieError::Internal("exp of a non-nilpotent matrix".into()));
    }
    let mut acc = RationalMatrix::identity(m);
    let mut term = RationalMatrix::identity(m);
    for k in 1..=m {
        term = (&term * n).scale(&(Rational::one() / Rational::from_integer(k.into())));
        if term.is_zero() {
            break;
        }
        acc = &acc + &term;
    }
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::int;

    fn m(rows: &[&[i64]]) -> RationalMatrix {
        RationalMatrix::from_i64(rows)
    }

    #[test]
    fn jordan_block() {
        let a = m(&[&[1, 1], &[0, 1]]);
        let jc = jordan_chevalley(&a, JCMode::Additive).unwrap();
        assert_eq!(jc.semisimple, RationalMatrix::identity(2));
        assert_eq!(jc.other, m(&[&[0, 1], &[0, 0]]));
        let mc = jordan_chevalley(&a, JCMode::Multiplicative).unwrap();
        assert_eq!(mc.semisimple, RationalMatrix::identity(2));
        assert_eq!(mc.other, a);
    }

    #[test]
    fn semisimple_inputs() {
        for a in [m(&[&[0, 1], &[1, 0]]), m(&[&[1, 1], &[0, 2]])] {
            let jc = jordan_chevalley(&a, JCMode::Additive).unwrap();
            assert_eq!(jc.semisimple, a);
            assert!(jc.other.is_zero());
        }
        // (A − I)(A − 2I) = 0
        let a = m(&[&[1, 1], &[0, 2]]);
        let i = RationalMatrix::identity(2);
        assert!((&(&a - &i) * &(&a - &i.scale(&int(2)))).is_zero());
    }

    #[test]
    fn predicates() {
        assert!(is_nilpotent(&m(&[&[0, 1], &[0, 0]])).unwrap());
        assert!(is_semisimple(&RationalMatrix::diag(&[int(0), int(1)])).unwrap());
        assert!(is_unipotent(&m(&[&[1, 1], &[0, 1]])).unwrap());
        assert!(!is_semisimple(&m(&[&[1, 1], &[0, 1]])).unwrap());
    }

    #[test]
    fn irrational_eigenvalues() {
        // characteristic polynomial (t² − 2)² with a nontrivial nilpotent part
        let a = m(&[&[0, 2, 1, 0], &[1, 0, 0, 1], &[0, 0, 0, 2], &[0, 0, 1, 0]]);
        let jc = jordan_chevalley(&a, JCMode::Additive).unwrap();
        assert!(!jc.other.is_zero());
    }

    #[test]
    fn log_exp() {
        let u = m(&[&[1, 2, 3], &[0, 1, 4], &[0, 0, 1]]);
        let l = log_unipotent(&u).unwrap();
        assert_eq!(exp_nilpotent(&l).unwrap(), u);
        assert!(log_unipotent(&RationalMatrix::identity(2)).unwrap().is_zero());
    }
}
