mod common;

use common::*;
use logres::exact::RationalMatrix;

#[test]
fn emitted_system_agrees_with_curvature() {
    for name in ORACLE_DIVISORS {
        for (label, s) in [("S=0", RationalMatrix::zeros(2, 2)), ("S=diag(0,1)", diag01())] {
            let p = problem(name, s);
            let st = oracle_sweep(&p, 50, 7).unwrap_or_else(|e| panic!("{name} {label}: {e}"));
            println!("{name} {label}: {st:?}");
            assert_eq!(st.samples, 50);
        }
    }
}
