mod common;

use common::*;
use logres::cli::run;
use logres::normalform::json::{PolySystemJson, ResidueJson};
use serde_json::Value;

fn args(a: &[&str]) -> Vec<String> {
    std::iter::once("logres").chain(a.iter().copied()).map(String::from).collect()
}

#[test]
fn suite_is_deterministic_and_succeeds() {
    for a in cli_suite() {
        let (c1, o1) = run_bin(&a);
        let (c2, o2) = run_bin(&a);
        assert_eq!(c1, 0, "{a:?}: {}", String::from_utf8_lossy(&o1));
        assert_eq!((c1, &o1), (c2, &o2), "{a:?}");
        let v: Value = serde_json::from_slice(&o1).unwrap();
        assert!(v.get("error").is_none(), "{a:?}");
    }
}

#[test]
fn verify_reports_the_saito_constant() {
    let (r, _) = run(args(&["verify-divisor", "--catalog", "sekiguchi_b5"]));
    assert_eq!(r.exit_code, 0);
    assert_eq!(r.machine["saito"]["constant"], "-18");
    assert_eq!(r.machine["degree"], 9);
    assert_eq!(r.machine["ok"], true);
}

#[test]
fn emit_moduli_summary_and_round_trip() {
    let res = fixture("residue_s01.json");
    let (r, _) = run(args(&["emit-moduli", "--catalog", "cusp", "--residue", &res]));
    assert_eq!(r.exit_code, 0);
    assert_eq!(r.machine["summary"]["dim_u_f"], 2);
    let parsed: PolySystemJson = serde_json::from_value(r.machine.clone()).unwrap();
    assert_eq!(serde_json::to_value(&parsed).unwrap(), r.machine);
    let raw = std::fs::read_to_string(&res).unwrap();
    let rj: ResidueJson = serde_json::from_str(&raw).unwrap();
    let back = ResidueJson::from_residue(&rj.to_residue().unwrap());
    assert_eq!(back, rj);
}

#[test]
fn jordan_multiplicative_on_a_block() {
    let m = fixture("matrix_jordan_block.json");
    let (r, _) = run(args(&["jordan", "--mode", "multiplicative", "--matrix", &m]));
    assert_eq!(r.machine["S"], serde_json::json!([["1", "0"], ["0", "1"]]));
    assert_eq!(r.machine["U"], serde_json::json!([["1", "1"], ["0", "1"]]));
    assert_eq!(r.machine["log_U"], serde_json::json!([["0", "1"], ["0", "0"]]));
}

#[test]
fn exit_codes() {
    let conn = fixture("connection_sekiguchi_residue_only.json");
    let (r, _) = run(args(&["check-flat", "--connection", &conn]));
    assert_eq!((r.exit_code, &r.machine["flat"]), (0, &Value::Bool(false)));
    let (r, _) = run(args(&["check-flat", "--connection", &conn, "--strict"]));
    assert_eq!(r.exit_code, 1);
    let (r, _) = run(args(&["emit-moduli", "--catalog", "cusp", "--residue", &fixture("malformed.json")]));
    assert_eq!(r.exit_code, 2);
    assert!(r.text.contains("line 2"), "{}", r.text);
    let (r, _) = run(args(&["residue-space", "--catalog", "cusp", "--residue", &fixture("residue_bad.json")]));
    assert_eq!(r.exit_code, 2);
    let (r, _) = run(args(&["verify-divisor", "--catalog", "no_such_divisor"]));
    assert_eq!(r.exit_code, 2);
    let (r, _) = run(args(&["bogus"]));
    assert_eq!(r.exit_code, 2);
    let (r, _) = run(args(&["--help"]));
    assert_eq!(r.exit_code, 0);
}

#[test]
fn check_point_findings() {
    let res = fixture("residue_s01.json");
    let (r, _) = run(args(&[
        "check-point", "--catalog", "sekiguchi_b5", "--residue", &res, "--point", &fixture("point_sekiguchi_zero.json"),
    ]));
    assert_eq!(r.machine["flat"], false);
    assert_eq!(r.machine["violated"].as_array().unwrap().len(), 1);
    let (r, _) = run(args(&[
        "check-point", "--catalog", "cusp", "--residue", &res, "--point", &fixture("point_cusp_flat.json"), "--strict",
    ]));
    assert_eq!((r.exit_code, &r.machine["in_xf"]), (0, &Value::Bool(true)));
}
