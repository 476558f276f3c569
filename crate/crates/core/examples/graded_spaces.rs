//! Graded solution spaces for a constant residue on several divisors.

use std::sync::Arc;

use logres::divisor::catalog;
use logres::exact::RationalMatrix;
use logres::liealg::ResidueData;
use logres::normalform::NormalFormProblem;

fn main() {
    let s = RationalMatrix::from_i64(&[&[0, 0], &[0, 1]]);
    for name in ["cusp", "plane_curve(3,4)", "sekiguchi_b5", "d4", "normal_crossing(2)"] {
        let d = Arc::new(catalog(name).expect("catalog entry"));
        let mut s_list = vec![s.clone()];
        s_list.resize(d.toral_rank(), RationalMatrix::zeros(2, 2));
        let residue = ResidueData::new(s_list, d.euler_combination().to_vec());
        let p = NormalFormProblem::new(d, residue).expect("valid residue");
        let u = p.solve_w1().expect("W1");
        let aut = p.symmetry_algebra().expect("symmetries");
        let degs: Vec<u64> = u.basis.iter().map(|b| b.degree).collect();
        println!(
            "{name:<20} ad_D eigenvalues {:?}  dim U_F = {} (degrees {degs:?})  dim aut = {} ({} in degree 0)",
            p.ad_d_eigenvalues().expect("eigenvalues"),
            u.dim(),
            aut.dim(),
            aut.degree0
        );
    }
}
