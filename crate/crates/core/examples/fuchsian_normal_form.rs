//! One-variable Fuchsian normal forms: N in degree i satisfies [S, N] = iN,
//! and every constant-coefficient point assembles to a flat connection.

use std::sync::Arc;

use logres::divisor::catalog;
use logres::exact::{int, RationalMatrix};
use logres::liealg::ResidueData;
use logres::normalform::*;

fn main() {
    let d = Arc::new(catalog("normal_crossing(1)").expect("catalog entry"));
    let s = RationalMatrix::from_i64(&[&[0, 0], &[0, 2]]);
    let p = NormalFormProblem::new(d.clone(), ResidueData::new(vec![s], vec![int(1)])).expect("valid residue");
    let sys = emit_xf(&p).expect("emission");
    let names = d.variables().to_vec();
    for b in &p.solve_w2().expect("N-space").basis {
        println!("degree {}: N = {}", b.degree, b.components[0].fmt_with(&names));
    }
    // degree-0 N coordinates would break nilpotency; populate only positive degrees
    let coords: Vec<_> = sys.coordinates.iter().map(|c| if c.degree > 0 { int(3) } else { int(0) }).collect();
    let pt = XFPoint::from_coordinates(&sys, d.weights(), &coords);
    let conn = assemble_connection(&p, &sys, &pt).expect("point in X_F");
    println!("omega(E) = {}", conn.components()[0].fmt_with(&names));
    let chk = check_xf_point(&p, &sys, &pt).expect("consistent");
    println!("flat: {}, nilpotent: {}", chk.flat, chk.nilpotent);
}
