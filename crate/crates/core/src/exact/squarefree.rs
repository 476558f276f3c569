//! Monte Carlo reducedness test by restriction to random lines.

use num::BigInt;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use super::{Rational, WeightedPoly};

pub const DEFAULT_TRIALS: usize = 8;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum SquarefreeVerdict {
    ProbablySquarefree,
    NotSquarefree,
    Inconclusive,
}

/// Restricts `f` to `trials` random lines `a + t·b` and inspects
/// `gcd(f|ℓ, (f|ℓ)′)`.
///
/// Only restrictions keeping the full total degree of `f` count; others are
/// resampled. A full-degree restriction with trivial gcd rules out a repeated
/// factor of `f`; a repeated factor shows up on every full-degree line.
pub fn squarefree_probable(f: &WeightedPoly, trials: usize, seed: u64) -> SquarefreeVerdict {
    assert!(!f.is_zero(), "squarefree test on the zero polynomial");
    let deg = f.total_degree().unwrap_or(0) as usize;
    if deg == 0 {
        return SquarefreeVerdict::ProbablySquarefree;
    }
    let n = f.nvars();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let sample = |rng: &mut ChaCha8Rng| -> Vec<Rational> {
        (0..n)
            .map(|_| Rational::from_integer(BigInt::from(rng.gen_range(-9i64..=9))))
            .collect()
    };
    let mut repeated = 0;
    let mut counted = 0;
    let max_attempts = trials.max(1) * 16;
    for _ in 0..max_attempts {
        if counted == trials {
            break;
        }
        let a = sample(&mut rng);
        let b = sample(&mut rng);
        let g = f.restrict_to_line(&a, &b);
        if g.degree() != Some(deg) {
            continue;
        }
        counted += 1;
        let d = g.gcd(&g.derivative());
        if d.degree().unwrap_or(0) == 0 {
            return SquarefreeVerdict::ProbablySquarefree;
        }
        repeated += 1;
    }
    if counted > 0 && repeated == counted {
        SquarefreeVerdict::NotSquarefree
    } else {
        SquarefreeVerdict::Inconclusive
    }
}
