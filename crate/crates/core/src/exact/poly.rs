//! Sparse multivariate polynomials over the rationals, graded by a weight vector.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num::{One, Signed, Zero};

use super::rational::{format_rational, Rational};
use super::{ExactError, Monomial, UniPoly};

/// Polynomial with a positive integer weight per variable.
///
/// The weighted degree of a monomial is its E-degree; terms are stored in a
/// `BTreeMap` so iteration (and every serialized form) follows graded-lex order.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct WeightedPoly {
    weights: Vec<u32>,
    terms: BTreeMap<Monomial, Rational>,
}

impl WeightedPoly {
    pub fn zero(weights: &[u32]) -> Self {
        WeightedPoly {
            weights: weights.to_vec(),
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(weights: &[u32], c: Rational) -> Self {
        let mut p = Self::zero(weights);
        p.add_term(Monomial::one(weights.len()), c);
        p
    }

    pub fn one(weights: &[u32]) -> Self {
        Self::constant(weights, Rational::one())
    }

    pub fn var(weights: &[u32], i: usize) -> Self {
        Self::term(weights, Monomial::var(weights.len(), i), Rational::one())
    }

    pub fn term(weights: &[u32], m: Monomial, c: Rational) -> Self {
        assert_eq!(m.nvars(), weights.len(), "monomial length mismatch");
        let mut p = Self::zero(weights);
        p.add_term(m, c);
        p
    }

    pub fn from_terms<I>(weights: &[u32], terms: I) -> Result<Self, ExactError>
    where
        I: IntoIterator<Item = (Monomial, Rational)>,
    {
        let mut p = Self::zero(weights);
        for (m, c) in terms {
            if m.nvars() != weights.len() {
                return Err(ExactError::Shape(format!(
                    "monomial has {} exponents, expected {}",
                    m.nvars(),
                    weights.len()
                )));
            }
            p.add_term(m, c);
        }
        Ok(p)
    }

    /// Convenience constructor from `(coeff, exponents)` pairs with integer coefficients.
    pub fn from_int_terms(weights: &[u32], terms: &[(i64, &[u32])]) -> Self {
        let mut p = Self::zero(weights);
        for (c, e) in terms {
            p.add_term(Monomial::new(e.to_vec()), Rational::from_integer((*c).into()));
        }
        p
    }

    pub fn add_term(&mut self, m: Monomial, c: Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn weights(&self) -> &[u32] {
        &self.weights
    }

    pub fn nvars(&self) -> usize {
        self.weights.len()
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &Rational)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, m: &Monomial) -> Rational {
        self.terms.get(m).cloned().unwrap_or_else(Rational::zero)
    }

    /// Largest term in graded-lex order.
    pub fn leading_term(&self) -> Option<(&Monomial, &Rational)> {
        self.terms.iter().next_back()
    }

    pub fn total_degree(&self) -> Option<u64> {
        self.terms.keys().map(|m| m.total_degree()).max()
    }

    pub fn constant_value(&self) -> Option<Rational> {
        match self.terms.len() {
            0 => Some(Rational::zero()),
            1 => {
                let (m, c) = self.terms.iter().next().unwrap();
                m.is_one().then(|| c.clone())
            }
            _ => None,
        }
    }

    pub fn is_constant(&self) -> bool {
        self.constant_value().is_some()
    }

    pub fn e_degree(&self, m: &Monomial) -> u64 {
        m.weighted_degree(&self.weights)
    }

    /// The common E-degree of all terms, if the polynomial is nonzero and homogeneous.
    pub fn homogeneous_degree(&self) -> Option<u64> {
        let mut it = self.terms.keys().map(|m| m.weighted_degree(&self.weights));
        let first = it.next()?;
        it.all(|d| d == first).then_some(first)
    }

    /// Homogeneous of E-degree `d`; the zero polynomial counts as homogeneous of every degree.
    pub fn is_homogeneous_of(&self, d: u64) -> bool {
        self.terms
            .keys()
            .all(|m| m.weighted_degree(&self.weights) == d)
    }

    /// Partition of the terms by E-degree.
    pub fn graded_components(&self) -> BTreeMap<u64, WeightedPoly> {
        let mut out: BTreeMap<u64, WeightedPoly> = BTreeMap::new();
        for (m, c) in &self.terms {
            let d = m.weighted_degree(&self.weights);
            out.entry(d)
                .or_insert_with(|| WeightedPoly::zero(&self.weights))
                .terms
                .insert(m.clone(), c.clone());
        }
        out
    }

    fn check_same(&self, other: &Self) -> Result<(), ExactError> {
        if self.weights != other.weights {
            return Err(ExactError::WeightMismatch {
                left: self.weights.clone(),
                right: other.weights.clone(),
            });
        }
        Ok(())
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self, ExactError> {
        self.check_same(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self, ExactError> {
        self.check_same(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), -c.clone());
        }
        Ok(out)
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self, ExactError> {
        self.check_same(other)?;
        let mut out = Self::zero(&self.weights);
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                out.add_term(ma.mul(mb), ca * cb);
            }
        }
        Ok(out)
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero(&self.weights);
        }
        WeightedPoly {
            weights: self.weights.clone(),
            terms: self.terms.iter().map(|(m, v)| (m.clone(), v * c)).collect(),
        }
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one(&self.weights);
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    pub fn partial_derivative(&self, var: usize) -> Self {
        assert!(var < self.nvars(), "variable index out of range");
        let mut out = Self::zero(&self.weights);
        for (m, c) in &self.terms {
            let e = m.exponents()[var];
            if e == 0 {
                continue;
            }
            let mut ex = m.exponents().to_vec();
            ex[var] -= 1;
            out.add_term(Monomial::new(ex), c * Rational::from_integer(e.into()));
        }
        out
    }

    /// Exact quotient `self / den`; fails if `den` does not divide `self`.
    ///
    /// Division by a single polynomial under a monomial order leaves remainder
    /// zero exactly when the division is exact, so the first leading term that
    /// `lt(den)` does not divide proves inexactness.
    pub fn exact_divide(&self, den: &Self) -> Result<Self, ExactError> {
        self.check_same(den)?;
        let (lm, lc) = match den.leading_term() {
            Some((m, c)) => (m.clone(), c.clone()),
            None => return Err(ExactError::DivisionByZero),
        };
        let mut rem = self.clone();
        let mut quot = Self::zero(&self.weights);
        while let Some((m, c)) = rem.leading_term() {
            if !lm.divides(m) {
                return Err(ExactError::InexactDivision);
            }
            let qm = lm.quotient_of(m);
            let qc = c / &lc;
            for (dm, dc) in &den.terms {
                rem.add_term(dm.mul(&qm), -(dc * &qc));
            }
            quot.add_term(qm, qc);
        }
        Ok(quot)
    }

    pub fn evaluate(&self, point: &[Rational]) -> Rational {
        assert_eq!(point.len(), self.nvars(), "point dimension mismatch");
        let mut acc = Rational::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (x, &e) in point.iter().zip(m.exponents()) {
                for _ in 0..e {
                    t *= x;
                }
            }
            acc += t;
        }
        acc
    }

    /// Substitutes `subs[i]` for variable `i`; all substitutes share the target ring.
    pub fn compose(&self, subs: &[WeightedPoly], target_weights: &[u32]) -> WeightedPoly {
        assert_eq!(subs.len(), self.nvars(), "substitution length mismatch");
        let mut out = WeightedPoly::zero(target_weights);
        for (m, c) in &self.terms {
            let mut t = WeightedPoly::constant(target_weights, c.clone());
            for (s, &e) in subs.iter().zip(m.exponents()) {
                if e > 0 {
                    t = &t * &s.pow(e);
                }
            }
            for (tm, tc) in t.terms {
                out.add_term(tm, tc);
            }
        }
        out
    }

    /// Restriction to the affine line `a + t·b`.
    pub fn restrict_to_line(&self, a: &[Rational], b: &[Rational]) -> UniPoly {
        let n = self.nvars();
        assert!(a.len() == n && b.len() == n);
        let lines: Vec<UniPoly> = (0..n)
            .map(|i| UniPoly::new(vec![a[i].clone(), b[i].clone()]))
            .collect();
        let mut acc = UniPoly::zero();
        for (m, c) in &self.terms {
            let mut t = UniPoly::constant(c.clone());
            for (l, &e) in lines.iter().zip(m.exponents()) {
                for _ in 0..e {
                    t = &t * l;
                }
            }
            acc = &acc + &t;
        }
        acc
    }

    /// Re-grades the same terms under new weights.
    pub fn with_weights(&self, weights: &[u32]) -> WeightedPoly {
        assert_eq!(weights.len(), self.nvars());
        WeightedPoly {
            weights: weights.to_vec(),
            terms: self.terms.clone(),
        }
    }

    /// Embeds into a larger ring whose first `self.nvars()` variables are ours.
    pub fn embed(&self, target_weights: &[u32]) -> WeightedPoly {
        let n = self.nvars();
        assert!(target_weights.len() >= n && target_weights[..n] == self.weights[..]);
        let pad = target_weights.len() - n;
        WeightedPoly {
            weights: target_weights.to_vec(),
            terms: self
                .terms
                .iter()
                .map(|(m, c)| {
                    let mut e = m.exponents().to_vec();
                    e.extend(std::iter::repeat_n(0, pad));
                    (Monomial::new(e), c.clone())
                })
                .collect(),
        }
    }

    /// Places our variables at positions `offset..offset + nvars` of a larger ring.
    pub fn lift_at(&self, offset: usize, target_weights: &[u32]) -> WeightedPoly {
        let n = self.nvars();
        assert!(offset + n <= target_weights.len() && target_weights[offset..offset + n] == self.weights[..]);
        WeightedPoly {
            weights: target_weights.to_vec(),
            terms: self
                .terms
                .iter()
                .map(|(m, c)| {
                    let mut e = vec![0; target_weights.len()];
                    e[offset..offset + n].copy_from_slice(m.exponents());
                    (Monomial::new(e), c.clone())
                })
                .collect(),
        }
    }

    /// Groups terms by the exponents of the first `at` variables; each group's
    /// coefficient is a polynomial in the remaining variables.
    pub fn split_at(&self, at: usize, rest_weights: &[u32]) -> BTreeMap<Monomial, WeightedPoly> {
        let mut out: BTreeMap<Monomial, WeightedPoly> = BTreeMap::new();
        for (m, c) in &self.terms {
            let (head, tail) = m.split(at);
            out.entry(head)
                .or_insert_with(|| WeightedPoly::zero(rest_weights))
                .add_term(tail, c.clone());
        }
        out.retain(|_, p| !p.is_zero());
        out
    }

    /// Human-readable form, highest terms first.
    pub fn fmt_with(&self, names: &[String]) -> String {
        if self.terms.is_empty() {
            return "0".to_string();
        }
        let mut s = String::new();
        for (i, (m, c)) in self.terms.iter().rev().enumerate() {
            let neg = c.is_negative();
            let abs = c.abs();
            if i == 0 {
                if neg {
                    s.push('-');
                }
            } else {
                s.push_str(if neg { " - " } else { " + " });
            }
            if m.is_one() {
                s.push_str(&format_rational(&abs));
            } else {
                if !abs.is_one() {
                    s.push_str(&format_rational(&abs));
                    s.push('*');
                }
                s.push_str(&m.fmt_with(names));
            }
        }
        s
    }
}

impl fmt::Debug for WeightedPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.fmt_with(&[]))
    }
}

impl fmt::Display for WeightedPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.fmt_with(&[]))
    }
}

// Operator forms panic on mismatched weight vectors; use the `checked_*`
// methods where the inputs are not already known to share a ring.
impl Add for &WeightedPoly {
    type Output = WeightedPoly;
    fn add(self, rhs: &WeightedPoly) -> WeightedPoly {
        self.checked_add(rhs).expect("weight vectors differ")
    }
}

impl Sub for &WeightedPoly {
    type Output = WeightedPoly;
    fn sub(self, rhs: &WeightedPoly) -> WeightedPoly {
        self.checked_sub(rhs).expect("weight vectors differ")
    }
}

impl Mul for &WeightedPoly {
    type Output = WeightedPoly;
    fn mul(self, rhs: &WeightedPoly) -> WeightedPoly {
        self.checked_mul(rhs).expect("weight vectors differ")
    }
}

impl Neg for &WeightedPoly {
    type Output = WeightedPoly;
    fn neg(self) -> WeightedPoly {
        self.scale(&-Rational::one())
    }
}
