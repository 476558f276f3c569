#![allow(dead_code)]

pub mod brute;

use std::sync::Arc;

use logres::divisor::catalog;
use logres::exact::{Rational, RationalMatrix};
use logres::liealg::ResidueData;
use logres::normalform::{check_xf_point, emit_xf, NormalFormError, NormalFormProblem, XFPoint};
use num::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub const ORACLE_DIVISORS: &[&str] = &[
    "cusp",
    "plane_curve(3,4)",
    "normal_crossing(1)",
    "normal_crossing(2)",
    "normal_crossing(3)",
    "normal_crossing(4)",
    "d4",
    "g2",
    "borel2",
    "sekiguchi_b5",
];

pub fn diag01() -> RationalMatrix {
    RationalMatrix::from_i64(&[&[0, 0], &[0, 1]])
}

/// `S_1 = s`, remaining toral residues zero, `χ = 0`.
pub fn problem(name: &str, s: RationalMatrix) -> NormalFormProblem {
    let d = Arc::new(catalog(name).unwrap());
    let k = d.toral_rank();
    let m = s.rows();
    let mut s_list = vec![s];
    s_list.extend(std::iter::repeat_n(RationalMatrix::zeros(m, m), k - 1));
    NormalFormProblem::new(d.clone(), ResidueData::new(s_list, d.euler_combination().to_vec())).unwrap()
}

#[derive(Debug, Default)]
pub struct OracleStats {
    pub samples: usize,
    pub flat: usize,
    pub in_xf: usize,
}

/// Samples seeded points of `U_F ⊕ W_F^(2)` and cross-checks the emitted system
/// against direct curvature. Sparse coordinates make flat points common.
pub fn oracle_sweep(p: &NormalFormProblem, samples: usize, seed: u64) -> Result<OracleStats, NormalFormError> {
    let sys = emit_xf(p)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let n = sys.coordinates.len();
    let mut stats = OracleStats::default();
    for s in 0..samples {
        let density = [0.0, 0.2, 0.5, 1.0][s % 4];
        let coords: Vec<Rational> = (0..n)
            .map(|_| {
                if rng.gen_bool(density) {
                    Rational::from_integer(rng.gen_range(-3i64..=3).into())
                } else {
                    Rational::from_integer(0.into())
                }
            })
            .collect();
        let pt = XFPoint::from_coordinates(&sys, p.divisor().weights(), &coords);
        let chk = check_xf_point(p, &sys, &pt)?;
        assert_eq!(chk.coordinates, coords);
        stats.samples += 1;
        stats.flat += chk.flat as usize;
        stats.in_xf += chk.in_xf() as usize;
    }
    Ok(stats)
}

use logres::liealg::{exp_nilpotent, is_nilpotent, is_semisimple, is_unipotent, log_unipotent};

fn random_matrix(rng: &mut ChaCha8Rng, n: usize) -> RationalMatrix {
    fn ri(rng: &mut ChaCha8Rng, lo: i64, hi: i64) -> Rational {
        Rational::from_integer(rng.gen_range(lo..=hi).into())
    }
    let kind = rng.gen_range(0..3);
    if kind == 0 {
        let rows = (0..n).map(|_| (0..n).map(|_| ri(rng, -3, 3)).collect()).collect();
        return RationalMatrix::from_rows(rows).unwrap();
    }
    // P·J·P⁻¹ with a Jordan-type J, so non-semisimple inputs are common.
    let mut j = RationalMatrix::zeros(n, n);
    for i in 0..n {
        j[(i, i)] = ri(rng, -2, 2);
        if i + 1 < n && kind == 2 && rng.gen_bool(0.7) {
            j[(i, i + 1)] = Rational::from_integer(1.into());
            j[(i + 1, i + 1)] = j[(i, i)].clone();
        }
    }
    if kind == 2 {
        for i in 1..n {
            if j[(i - 1, i)].is_zero() {
                j[(i, i)] = ri(rng, -2, 2);
            } else {
                j[(i, i)] = j[(i - 1, i - 1)].clone();
            }
        }
    }
    loop {
        let rows = (0..n).map(|_| (0..n).map(|_| ri(rng, -2, 2)).collect()).collect();
        let p = RationalMatrix::from_rows(rows).unwrap();
        if let Some(pinv) = p.inverse() {
            return &(&p * &j) * &pinv;
        }
    }
}

/// Seeded Jordan–Chevalley checks; returns how many matrices were invertible.
pub fn jc_suite(count: usize, seed: u64) -> Result<usize, String> {
    use logres::liealg::{jordan_chevalley, JCMode};
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut invertible = 0;
    for i in 0..count {
        let n = if i % 2 == 0 { 2 } else { 3 };
        let a = random_matrix(&mut rng, n);
        let id = RationalMatrix::identity(n);
        let add = jordan_chevalley(&a, JCMode::Additive).map_err(|e| format!("#{i}: {e}"))?;
        let (s, nn) = (&add.semisimple, &add.other);
        let ok = (s + nn) == a
            && s.commutes_with(nn)
            && is_semisimple(s).unwrap()
            && is_nilpotent(nn).unwrap();
        if !ok {
            return Err(format!("#{i}: additive invariants fail for {a:?}"));
        }
        let again = jordan_chevalley(s, JCMode::Additive).unwrap();
        let again_n = jordan_chevalley(nn, JCMode::Additive).unwrap();
        if &again.semisimple != s || !again.other.is_zero() || !again_n.semisimple.is_zero() || &again_n.other != nn {
            return Err(format!("#{i}: additive decomposition is not idempotent"));
        }
        if exp_nilpotent(&log_unipotent(&(&id + nn)).unwrap()).unwrap() != &id + nn {
            return Err(format!("#{i}: exp(log(I + N)) differs"));
        }
        if a.inverse().is_none() {
            continue;
        }
        invertible += 1;
        let mul = jordan_chevalley(&a, JCMode::Multiplicative).map_err(|e| format!("#{i}: {e}"))?;
        let (s, u) = (&mul.semisimple, &mul.other);
        let ok = (s * u) == a && s.commutes_with(u) && is_semisimple(s).unwrap() && is_unipotent(u).unwrap();
        if !ok {
            return Err(format!("#{i}: multiplicative invariants fail for {a:?}"));
        }
        let us = jordan_chevalley(u, JCMode::Multiplicative).unwrap();
        let ss = jordan_chevalley(s, JCMode::Multiplicative).unwrap();
        if us.semisimple != id || &us.other != u || &ss.semisimple != s || ss.other != id {
            return Err(format!("#{i}: multiplicative decomposition is not idempotent"));
        }
        let l = log_unipotent(u).unwrap();
        if &exp_nilpotent(&l).unwrap() != u || !is_nilpotent(&l).unwrap() {
            return Err(format!("#{i}: exp(log U) differs from U"));
        }
    }
    Ok(invertible)
}

pub fn fixture(name: &str) -> String {
    format!("{}/fixtures/{name}", env!("CARGO_MANIFEST_DIR"))
}

/// Invocations covering every subcommand, each with `--format json`.
pub fn cli_suite() -> Vec<Vec<String>> {
    let f = fixture;
    let raw: Vec<Vec<String>> = vec![
        vec!["catalog".into()],
        vec!["catalog".into(), "--catalog".into(), "g2".into()],
        vec!["verify-divisor".into(), "--catalog".into(), "sekiguchi_b5".into()],
        vec!["verify-divisor".into(), "--catalog".into(), "d4".into(), "--seed".into(), "3".into()],
        vec!["frame-info".into(), "--catalog".into(), "sekiguchi_b5".into()],
        vec!["frame-info".into(), "--catalog".into(), "borel2".into()],
        vec!["residue-space".into(), "--catalog".into(), "sekiguchi_b5".into(), "--residue".into(), f("residue_s01.json")],
        vec!["residue-space".into(), "--catalog".into(), "g2".into(), "--residue".into(), f("residue_g2_sl2.json")],
        vec!["emit-moduli".into(), "--catalog".into(), "cusp".into(), "--residue".into(), f("residue_s01.json")],
        vec!["emit-moduli".into(), "--catalog".into(), "sekiguchi_b5".into(), "--residue".into(), f("residue_s01.json")],
        vec!["emit-moduli".into(), "--catalog".into(), "normal_crossing(2)".into(), "--residue".into(), f("residue_nc2.json")],
        vec!["check-flat".into(), "--connection".into(), f("connection_sekiguchi_residue_only.json")],
        vec!["check-flat".into(), "--connection".into(), f("connection_nc2_commuting.json")],
        vec![
            "check-point".into(), "--catalog".into(), "sekiguchi_b5".into(),
            "--residue".into(), f("residue_s01.json"), "--point".into(), f("point_sekiguchi_zero.json"),
        ],
        vec![
            "check-point".into(), "--catalog".into(), "cusp".into(),
            "--residue".into(), f("residue_s01.json"), "--point".into(), f("point_cusp_flat.json"),
        ],
        vec!["jordan".into(), "--matrix".into(), f("matrix_jordan_block.json")],
        vec!["jordan".into(), "--mode".into(), "multiplicative".into(), "--matrix".into(), f("matrix_scaled_block.json")],
    ];
    raw.into_iter()
        .map(|mut a| {
            a.push("--format".into());
            a.push("json".into());
            a
        })
        .collect()
}

/// Runs the built binary and returns `(exit code, stdout)`.
pub fn run_bin(args: &[String]) -> (i32, Vec<u8>) {
    let out = std::process::Command::new(env!("CARGO_BIN_EXE_logres"))
        .args(args)
        .output()
        .expect("binary runs");
    (out.status.code().unwrap_or(-1), out.stdout)
}
