//! Emits the polynomial system cutting out the moduli of normal forms.
//!
//! Usage: `cargo run --example moduli_emission -- [catalog name] [--json]`

use std::sync::Arc;

use logres::divisor::catalog;
use logres::exact::RationalMatrix;
use logres::liealg::ResidueData;
use logres::normalform::json::PolySystemJson;
use logres::normalform::{emit_xf, NormalFormProblem};

fn main() {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let json = args.iter().any(|a| a == "--json");
    let name = args.iter().find(|a| !a.starts_with("--")).cloned().unwrap_or_else(|| "cusp".into());
    let d = Arc::new(catalog(&name).expect("catalog entry"));
    let mut s_list = vec![RationalMatrix::from_i64(&[&[0, 0], &[0, 1]])];
    s_list.resize(d.toral_rank(), RationalMatrix::zeros(2, 2));
    let p = NormalFormProblem::new(d.clone(), ResidueData::new(s_list, d.euler_combination().to_vec()))
        .expect("valid residue");
    let sys = emit_xf(&p).expect("emission");
    if json {
        println!("{}", serde_json::to_string_pretty(&PolySystemJson::from_system(&sys)).unwrap());
    } else {
        print!("{}", sys.to_text());
    }
}
