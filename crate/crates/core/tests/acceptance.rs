//! One line per acceptance criterion; exits nonzero if any fails.

mod common;

use std::panic::{catch_unwind, AssertUnwindSafe};

use common::*;
use logres::divisor::*;
use logres::exact::{int, rat, Rational, RationalMatrix, WeightedPoly};
use logres::normalform::*;

type Outcome = Result<String, String>;

fn ensure(ok: bool, msg: impl Into<String>) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg.into())
    }
}

fn catalog_fidelity() -> Outcome {
    let names = [
        "cusp", "d4", "g2", "borel2", "sekiguchi_b5", "plane_curve(3,4)", "normal_crossing(1)",
        "normal_crossing(2)", "normal_crossing(3)", "normal_crossing(4)",
    ];
    for n in names {
        let d = catalog(n).map_err(|e| format!("{n}: {e}"))?;
        ensure(verify_saito(&d, 0).is_ok(), format!("{n}: saito criterion fails"))?;
        let sf = StructureFunctions::compute(&d).map_err(|e| e.to_string())?;
        ensure(sf.jacobi_defects(&d).is_empty(), format!("{n}: jacobi"))?;
        ensure(dual_log_forms(&d).map_err(|e| e.to_string())?.pairing_holds(&d), format!("{n}: pairing"))?;
    }
    let d = catalog("sekiguchi_b5").map_err(|e| e.to_string())?;
    ensure(verify_saito(&d, 0).constant() == Some(&int(-18)), "sekiguchi determinant constant")?;
    let w = d.weights();
    let c = |k: i64| WeightedPoly::constant(w, int(k));
    let v = |i| WeightedPoly::var(w, i);
    let sf = StructureFunctions::compute(&d).map_err(|e| e.to_string())?;
    ensure(
        *sf.get(1, 2, 0) == &c(24) * &v(2) && *sf.get(1, 2, 1) == &c(6) * &v(1) && *sf.get(1, 2, 2) == &c(-40) * &v(0),
        "[V,W] coefficients",
    )?;
    let dl = dlog_f_expansion(&d).map_err(|e| e.to_string())?;
    ensure(dl == vec![c(9), &c(-96) * &v(0), &c(-36) * &v(1)], "dF/F expansion")?;
    let fs = form_structure_equations(&sf);
    ensure(fs.rows[0] == vec![(1, 2, &c(-24) * &v(2))], "d alpha")?;
    let g = catalog("g2").map_err(|e| e.to_string())?;
    let gfs = form_structure_equations(&StructureFunctions::compute(&g).map_err(|e| e.to_string())?);
    let gc = |k: i64| WeightedPoly::constant(g.weights(), int(k));
    ensure(
        gfs.rows[0].is_empty()
            && gfs.rows[1] == vec![(2, 3, gc(-1))]
            && gfs.rows[2] == vec![(1, 2, gc(-2))]
            && gfs.rows[3] == vec![(1, 3, gc(2))],
        "g2 form relations",
    )?;
    Ok(format!("{} divisors verified", names.len()))
}

fn sekiguchi_certificate() -> Outcome {
    let p = problem("sekiguchi_b5", diag01());
    let sys = emit_xf(&p).map_err(|e| e.to_string())?;
    let w = [1u32, 2, 3, 1, 1, 1, 1];
    let v = |i| WeightedPoly::var(&w, i);
    let zero = WeightedPoly::zero(&w);
    let (x, y) = (v(0), v(1));
    let b = MatrixPolyMap::from_entries(2, vec![zero.clone(), WeightedPoly::one(&w), zero.clone(), &v(3) * &x]);
    let cm = MatrixPolyMap::from_entries(2, vec![zero.clone(), &v(4) * &x, zero, &(&v(5) * &x.pow(2)) + &(&v(6) * &y)]);
    let params = [1u32; 4];
    let mut subs = sys.u_f.coordinates_in(&[b, cm], 3, &params).ok_or("ansatz not in U_F")?;
    subs.extend(std::iter::repeat_n(WeightedPoly::zero(&params), sys.dim_w2()));
    let restricted: Vec<WeightedPoly> = sys.restrict(&subs, &params).into_iter().map(|(_, p)| p).collect();
    let eqs = normalize_equations(&restricted);
    ensure(eqs.len() == 5, format!("{} reduced equations, expected 5", eqs.len()))?;
    let cert = linear_certificate(&eqs, &params);
    ensure(cert.outcome == CertificateOutcome::Inconsistent, format!("outcome {:?}", cert.outcome))?;
    ensure(cert.fixed.contains(&(0, rat(-32, 3))), "a = -32/3 not forced")?;
    Ok("5 equations, inconsistent after a = -32/3".into())
}

fn oracle_equivalence() -> Outcome {
    let mut total = 0;
    for name in ORACLE_DIVISORS {
        for s in [RationalMatrix::zeros(2, 2), diag01()] {
            let st = oracle_sweep(&problem(name, s), 50, 7).map_err(|e| format!("{name}: {e}"))?;
            total += st.samples;
        }
    }
    Ok(format!("{total} points agree"))
}

fn jordan_suite() -> Outcome {
    let inv = jc_suite(200, 2024)?;
    ensure(inv > 100, format!("only {inv} invertible samples"))?;
    Ok(format!("200 additive, {inv} multiplicative"))
}

fn brute_dimensions() -> Outcome {
    let mut out = Vec::new();
    for name in ["cusp", "sekiguchi_b5", "normal_crossing(2)"] {
        let p = problem(name, diag01());
        let cap = (p.degree_bound().map_err(|e| e.to_string())? + 2) as u64;
        let u = p.solve_w1().map_err(|e| e.to_string())?.dim();
        let a = p.symmetry_algebra().map_err(|e| e.to_string())?;
        ensure(u == brute::w1_dim(&p, cap), format!("{name}: U_F {u}"))?;
        ensure(a.dim() == brute::n_dim(&p, cap, false), format!("{name}: N-space {}", a.dim()))?;
        ensure(a.degree0 == brute::n_dim(&p, cap, true), format!("{name}: degree 0"))?;
        out.push(format!("{name} {u}/{}", a.dim()));
    }
    let sek = problem("sekiguchi_b5", diag01());
    ensure(sek.solve_w1().map_err(|e| e.to_string())?.dim() == 13, "sekiguchi U_F must be 13")?;
    Ok(out.join(", "))
}

fn sign_fixtures() -> Outcome {
    let p = problem("normal_crossing(1)", diag01());
    let w = p.divisor().weights();
    let s = MatrixPolyMap::constant(&diag01(), w);
    let n = p.solve_w2().map_err(|e| e.to_string())?;
    ensure(n.basis.iter().any(|b| b.degree == 1), "no degree-1 N")?;
    for b in &n.basis {
        let x = &b.components[0];
        let comm = s.matmul(x).sub(&x.matmul(&s));
        ensure(comm == x.scale(&Rational::from_integer((b.degree as i64).into())), "[S,N] = iN fails")?;
    }
    let p = problem("sekiguchi_b5", diag01());
    let sys = emit_xf(&p).map_err(|e| e.to_string())?;
    let w = p.divisor().weights();
    let coords: Vec<Rational> = (0..sys.coordinates.len()).map(|i| int((i % 3) as i64 - 1)).collect();
    let pt = XFPoint::from_coordinates(&sys, w, &coords);
    let conn = assemble_connection(&p, &sys, &pt).map_err(|e| e.to_string())?;
    let c = conn.components();
    let (x, y) = (WeightedPoly::var(w, 0), WeightedPoly::var(w, 1));
    let nn = &pt.n[0];
    ensure(c[1] == pt.b[0].sub(&nn.mul_poly(&x.scale(&rat(32, 3)))), "omega(V) correction")?;
    ensure(c[2] == pt.b[1].sub(&nn.mul_poly(&y.scale(&int(4)))), "omega(W) correction")?;
    Ok("[S,N] = iN and B - 32/3 xN, C - 4yN".into())
}

fn cli_determinism() -> Outcome {
    let suite = cli_suite();
    for a in &suite {
        let (c1, o1) = run_bin(a);
        let (c2, o2) = run_bin(a);
        ensure(c1 == 0, format!("{a:?} exited {c1}"))?;
        ensure(c1 == c2 && o1 == o2, format!("{a:?} differs between runs"))?;
        serde_json::from_slice::<serde_json::Value>(&o1).map_err(|e| format!("{a:?}: {e}"))?;
    }
    Ok(format!("{} invocations byte-identical", suite.len()))
}

fn main() {
    let criteria: [(&str, fn() -> Outcome); 7] = [
        ("catalog fidelity", catalog_fidelity),
        ("reduced Sekiguchi certificate", sekiguchi_certificate),
        ("emitted system matches curvature", oracle_equivalence),
        ("Jordan-Chevalley suite", jordan_suite),
        ("graded dimensions vs brute force", brute_dimensions),
        ("bracket sign and assembly", sign_fixtures),
        ("CLI determinism", cli_determinism),
    ];
    let mut failed = 0;
    for (i, (name, f)) in criteria.iter().enumerate() {
        let r = catch_unwind(AssertUnwindSafe(f)).unwrap_or_else(|_| Err("panicked".into()));
        match r {
            Ok(detail) => println!("PASS {} {name}: {detail}", i + 1),
            Err(e) => {
                failed += 1;
                println!("FAIL {} {name}: {e}", i + 1);
            }
        }
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed > 0 {
        std::process::exit(1);
    }
}
