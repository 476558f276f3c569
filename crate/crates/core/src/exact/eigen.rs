//! Characteristic and minimal polynomials, integer eigenvalues.

use num::{BigInt, Integer, One, Signed, ToPrimitive, Zero};

use super::{kernel, ExactError, Rational, RationalMatrix, UniPoly};

/// Largest matrix dimension accepted by the exact eigenvalue routines.
pub const MAX_EXACT_DIM: usize = 400;

fn check_square(m: &RationalMatrix) -> Result<(), ExactError> {
    if !m.is_square() {
        return Err(ExactError::Shape(format!(
            "expected a square matrix, got {}x{}",
            m.rows(),
            m.cols()
        )));
    }
    if m.rows() > MAX_EXACT_DIM {
        return Err(ExactError::TooLarge {
            dim: m.rows(),
            max: MAX_EXACT_DIM,
        });
    }
    Ok(())
}

/// Monic characteristic polynomial `det(t·I − M)`, via reduction to upper
/// Hessenberg form by exact similarity transforms.
pub fn char_poly(m: &RationalMatrix) -> Result<UniPoly, ExactError> {
    check_square(m)?;
    let n = m.rows();
    let mut h = m.clone();
    for col in 1..n.saturating_sub(1) {
        let Some(piv) = (col..n).find(|&i| !h[(i, col - 1)].is_zero()) else {
            continue;
        };
        if piv != col {
            for j in 0..n {
                let t = h[(piv, j)].clone();
                h[(piv, j)] = h[(col, j)].clone();
                h[(col, j)] = t;
            }
            for i in 0..n {
                let t = h[(i, piv)].clone();
                h[(i, piv)] = h[(i, col)].clone();
                h[(i, col)] = t;
            }
        }
        let p = h[(col, col - 1)].clone();
        for j in col + 1..n {
            let u = &h[(j, col - 1)] / &p;
            if u.is_zero() {
                continue;
            }
            for c in 0..n {
                let v = &u * &h[(col, c)];
                h[(j, c)] -= v;
            }
            for r in 0..n {
                let v = &u * &h[(r, j)];
                h[(r, col)] += v;
            }
        }
    }

    let mut polys: Vec<UniPoly> = vec![UniPoly::constant(Rational::one())];
    for k in 1..=n {
        let lin = UniPoly::new(vec![-h[(k - 1, k - 1)].clone(), Rational::one()]);
        let mut pk = &lin * &polys[k - 1];
        let mut prod = Rational::one();
        for i in 1..k {
            prod *= &h[(k - i, k - i - 1)];
            if prod.is_zero() {
                break;
            }
            let coef = &h[(k - i - 1, k - 1)] * &prod;
            if !coef.is_zero() {
                pk = &pk - &polys[k - i - 1].scale(&coef);
            }
        }
        polys.push(pk);
    }
    Ok(polys.pop().unwrap())
}

/// Monic minimal polynomial, from the first linear dependency among `I, M, M², …`.
pub fn minimal_poly(m: &RationalMatrix) -> Result<UniPoly, ExactError> {
    check_square(m)?;
    let n = m.rows();
    let mut powers = vec![RationalMatrix::identity(n).vectorize()];
    let mut cur = RationalMatrix::identity(n);
    for d in 1..=n {
        cur = &cur * m;
        powers.push(cur.vectorize());
        let a = RationalMatrix::from_columns(n * n, &powers);
        let ker = kernel(&a);
        if let Some(v) = ker.into_iter().next() {
            // A single free column appears first at degree d; it is the last one.
            debug_assert!(!v[d].is_zero());
            return Ok(UniPoly::new(v).monic());
        }
    }
    unreachable!("Cayley–Hamilton bounds the minimal polynomial degree by n")
}

/// Integer roots of a nonzero rational polynomial, ascending.
pub fn integer_roots(p: &UniPoly) -> Vec<BigInt> {
    if p.is_zero() {
        return Vec::new();
    }
    let sf = p.squarefree_part();
    // clear denominators
    let lcm = sf
        .coeffs()
        .iter()
        .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    let ints: Vec<BigInt> = sf
        .coeffs()
        .iter()
        .map(|c| (c * Rational::from_integer(lcm.clone())).to_integer())
        .collect();
    let mut roots = Vec::new();
    let shift = ints.iter().position(|c| !c.is_zero()).unwrap_or(0);
    if shift > 0 {
        roots.push(BigInt::zero());
    }
    let ints = &ints[shift..];
    if ints.len() > 1 {
        let lead = ints.last().unwrap().abs();
        let c0 = ints[0].abs();
        // Cauchy bound on root magnitudes.
        let bound = ints[..ints.len() - 1]
            .iter()
            .map(|c| c.abs().div_ceil(&lead))
            .max()
            .unwrap_or_else(BigInt::zero)
            + BigInt::one();
        let eval = |r: &BigInt| {
            let mut acc = BigInt::zero();
            for c in ints.iter().rev() {
                acc = acc * r + c;
            }
            acc.is_zero()
        };
        let mut i = BigInt::one();
        while i <= bound && &i * &i <= c0 {
            if (&c0 % &i).is_zero() {
                for d in [i.clone(), &c0 / &i] {
                    if d <= bound {
                        for r in [d.clone(), -d.clone()] {
                            if eval(&r) && !roots.contains(&r) {
                                roots.push(r);
                            }
                        }
                    }
                }
            }
            i += 1;
        }
    }
    roots.sort();
    roots
}

/// All integer eigenvalues of a square rational matrix, ascending.
pub fn integer_eigenvalues(m: &RationalMatrix) -> Result<Vec<i64>, ExactError> {
    let cp = char_poly(m)?;
    integer_roots(&cp)
        .into_iter()
        .map(|r| {
            r.to_i64()
                .ok_or_else(|| ExactError::Shape(format!("eigenvalue {r} exceeds i64")))
        })
        .collect()
}
