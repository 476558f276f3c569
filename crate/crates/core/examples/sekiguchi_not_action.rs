//! Restricts the Sekiguchi system to a small ansatz and shows that the
//! resulting linear equations are inconsistent.

use std::sync::Arc;

use logres::divisor::catalog;
use logres::exact::{RationalMatrix, WeightedPoly};
use logres::liealg::ResidueData;
use logres::normalform::*;

fn main() {
    let d = Arc::new(catalog("sekiguchi_b5").expect("catalog entry"));
    let residue = ResidueData::new(vec![RationalMatrix::from_i64(&[&[0, 0], &[0, 1]])], d.euler_combination().to_vec());
    let p = NormalFormProblem::new(d, residue).expect("valid residue");
    let sys = emit_xf(&p).expect("emission");
    println!("dim U_F = {}, dim N-space = {}", sys.dim_u_f(), sys.dim_w2());

    // ring (x, y, z | a, d, c, f): B = [[0,1],[0,a x]], C = [[0,d x],[0,c x² + f y]]
    let w = [1u32, 2, 3, 1, 1, 1, 1];
    let v = |i| WeightedPoly::var(&w, i);
    let zero = WeightedPoly::zero(&w);
    let x = v(0);
    let b = MatrixPolyMap::from_entries(2, vec![zero.clone(), WeightedPoly::one(&w), zero.clone(), &v(3) * &x]);
    let c = MatrixPolyMap::from_entries(2, vec![zero.clone(), &v(4) * &x, zero, &(&v(5) * &x.pow(2)) + &(&v(6) * &v(1))]);
    let params = [1u32; 4];
    let mut subs = sys.u_f.coordinates_in(&[b, c], 3, &params).expect("ansatz lies in U_F");
    subs.extend(std::iter::repeat_n(WeightedPoly::zero(&params), sys.dim_w2()));
    let restricted: Vec<WeightedPoly> = sys.restrict(&subs, &params).into_iter().map(|(_, p)| p).collect();
    let eqs = normalize_equations(&restricted);
    let names: Vec<String> = ["a", "d", "c", "f"].iter().map(|s| s.to_string()).collect();
    for e in &eqs {
        println!("  {} = 0", e.fmt_with(&names));
    }
    let cert = linear_certificate(&eqs, &params);
    for (i, val) in &cert.fixed {
        println!("forced: {} = {val}", names[*i]);
    }
    println!("outcome: {:?}", cert.outcome);
}
