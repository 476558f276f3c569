use std::cmp::Ordering;
use std::fmt;

/// Exponent vector over a fixed set of base variables.
///
/// Ordered graded-lexicographically: total degree first, then exponents
/// compared left to right.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Monomial(Vec<u32>);

impl Monomial {
    pub fn new(exponents: Vec<u32>) -> Self {
        Monomial(exponents)
    }

    pub fn one(nvars: usize) -> Self {
        Monomial(vec![0; nvars])
    }

    pub fn var(nvars: usize, i: usize) -> Self {
        let mut e = vec![0; nvars];
        e[i] = 1;
        Monomial(e)
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    pub fn nvars(&self) -> usize {
        self.0.len()
    }

    pub fn total_degree(&self) -> u64 {
        self.0.iter().map(|&e| e as u64).sum()
    }

    pub fn weighted_degree(&self, weights: &[u32]) -> u64 {
        self.0
            .iter()
            .zip(weights)
            .map(|(&e, &w)| e as u64 * w as u64)
            .sum()
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    /// `other / self`, assuming `self.divides(other)`.
    pub fn quotient_of(&self, other: &Monomial) -> Monomial {
        Monomial(other.0.iter().zip(&self.0).map(|(a, b)| a - b).collect())
    }

    /// Splits the exponent vector at `at`.
    pub fn split(&self, at: usize) -> (Monomial, Monomial) {
        (
            Monomial(self.0[..at].to_vec()),
            Monomial(self.0[at..].to_vec()),
        )
    }

    /// All monomials in `weights.len()` variables with weighted degree exactly `degree`,
    /// in ascending monomial order.
    pub fn all_of_weighted_degree(weights: &[u32], degree: u64) -> Vec<Monomial> {
        fn rec(weights: &[u32], i: usize, left: u64, cur: &mut Vec<u32>, out: &mut Vec<Monomial>) {
            if i == weights.len() {
                if left == 0 {
                    out.push(Monomial(cur.clone()));
                }
                return;
            }
            let w = weights[i] as u64;
            let mut e = 0u64;
            while e * w <= left {
                cur[i] = e as u32;
                rec(weights, i + 1, left - e * w, cur, out);
                e += 1;
            }
            cur[i] = 0;
        }
        let mut out = Vec::new();
        let mut cur = vec![0; weights.len()];
        rec(weights, 0, degree, &mut cur, &mut out);
        out.sort();
        out
    }

    pub fn fmt_with(&self, names: &[String]) -> String {
        let mut parts = Vec::new();
        for (i, &e) in self.0.iter().enumerate() {
            let name = names.get(i).cloned().unwrap_or_else(|| format!("z{i}"));
            match e {
                0 => {}
                1 => parts.push(name),
                _ => parts.push(format!("{name}^{e}")),
            }
        }
        if parts.is_empty() {
            "1".to_string()
        } else {
            parts.join("*")
        }
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.total_degree()
            .cmp(&other.total_degree())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.0)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn graded_order() {
        let a = Monomial::new(vec![2, 0]);
        let b = Monomial::new(vec![0, 3]);
        let c = Monomial::new(vec![1, 1]);
        assert!(a < b);
        assert!(c < a);
    }

    #[test]
    fn weighted_enumeration() {
        // weights (1,2,3), degree 3: x^3, xy, z
        let ms = Monomial::all_of_weighted_degree(&[1, 2, 3], 3);
        assert_eq!(ms.len(), 3);
        assert!(ms.iter().all(|m| m.weighted_degree(&[1, 2, 3]) == 3));
        assert!(Monomial::all_of_weighted_degree(&[3, 2], 1).is_empty());
        assert_eq!(Monomial::all_of_weighted_degree(&[3, 2], 0).len(), 1);
    }
}
