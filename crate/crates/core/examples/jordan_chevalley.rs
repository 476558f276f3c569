//! Additive and multiplicative Jordan–Chevalley decompositions.

use logres::exact::RationalMatrix;
use logres::liealg::{jordan_chevalley, log_unipotent, JCMode};
use logres::normalform::monodromy_split;

fn main() {
    let a = RationalMatrix::from_i64(&[&[3, 1, 0], &[0, 3, 0], &[0, 0, -2]]);
    let p = RationalMatrix::from_i64(&[&[1, 1, 0], &[0, 1, 1], &[1, 0, 1]]);
    let conj = &(&p * &a) * &p.inverse().expect("invertible");
    println!("A =\n{conj}");
    let add = jordan_chevalley(&conj, JCMode::Additive).expect("decomposition");
    println!("S =\n{}\nN =\n{}", add.semisimple, add.other);
    let mul = jordan_chevalley(&conj, JCMode::Multiplicative).expect("invertible");
    println!("U =\n{}\nlog U =\n{}", mul.other, log_unipotent(&mul.other).expect("unipotent"));
    let m = monodromy_split(&RationalMatrix::from_i64(&[&[2, 2], &[0, 2]])).expect("split");
    println!("monodromy [[2,2],[0,2]]: log of unipotent part =\n{}", m.log_unipotent);
}
