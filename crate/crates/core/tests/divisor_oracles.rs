use logres::divisor::*;
use logres::exact::{int, RationalMatrix, WeightedPoly};

/// Infinitesimal generator of `p ↦ exp(tX)·p` acting on the copies listed in
/// `copies` of `C²` inside `C⁶`: the coefficient of `∂(c, i)` is `Σ_j X_ij p_(c, j)`.
fn generator(x: &RationalMatrix, copies: &[usize]) -> VectorFieldPoly {
    let w = [1u32; 6];
    let mut coeffs = vec![WeightedPoly::zero(&w); 6];
    for &c in copies {
        for i in 0..2 {
            for j in 0..2 {
                let xij = &x[(i, j)];
                if *xij != int(0) {
                    coeffs[2 * c + i] = &coeffs[2 * c + i] + &WeightedPoly::var(&w, 2 * c + j).scale(xij);
                }
            }
        }
    }
    VectorFieldPoly::new(coeffs)
}

#[test]
fn d4_frame_is_the_differentiated_action() {
    let d = catalog("d4").unwrap();
    let id = RationalMatrix::identity(2);
    let h = RationalMatrix::from_i64(&[&[1, 0], &[0, -1]]);
    let e = RationalMatrix::from_i64(&[&[0, 1], &[0, 0]]);
    let f = RationalMatrix::from_i64(&[&[0, 0], &[1, 0]]);
    let expected = [
        generator(&id, &[0]),
        generator(&id, &[1]),
        generator(&id, &[2]),
        generator(&h, &[0, 1, 2]),
        generator(&e, &[0, 1, 2]),
        generator(&f, &[0, 1, 2]),
    ];
    let names: Vec<&str> = d.frame().iter().map(|el| el.name.as_str()).collect();
    assert_eq!(names, ["Eu", "Ev", "Ew", "Vh", "Ve", "Vf"]);
    for (i, v) in expected.iter().enumerate() {
        assert_eq!(d.field(i), v, "{}", names[i]);
        // every generator is tangent: V(f) is a multiple of f
        assert!(v.apply(d.f()).exact_divide(d.f()).is_ok());
    }
}

/// `dξ(V, W)` computed from partial derivatives of the form coefficients,
/// cleared of the denominator `κ f²`.
fn d_form_pairing(a: &[WeightedPoly], f: &WeightedPoly, v: &VectorFieldPoly, w: &VectorFieldPoly) -> WeightedPoly {
    let n = a.len();
    let mut acc = WeightedPoly::zero(f.weights());
    for l in 0..n {
        for m in 0..n {
            let dl = &(&a[m].partial_derivative(l) * f) - &(&a[m] * &f.partial_derivative(l));
            let alt = &(&v.coeffs()[l] * &w.coeffs()[m]) - &(&w.coeffs()[l] * &v.coeffs()[m]);
            acc = &acc + &(&dl * &alt);
        }
    }
    acc
}

#[test]
fn form_structure_matches_exterior_derivative() {
    for name in ["cusp", "sekiguchi_b5", "g2", "borel2", "d4", "normal_crossing(3)"] {
        let d = catalog(name).unwrap();
        let sf = StructureFunctions::compute(&d).unwrap();
        let forms = dual_log_forms(&d).unwrap();
        let fs = form_structure_equations(&sf);
        let n = d.dim();
        let f2 = &(d.f() * d.f()).scale(&forms.constant);
        for k in 0..n {
            let a: Vec<WeightedPoly> = (0..n).map(|j| forms.numerator[(k, j)].clone()).collect();
            for i in 0..n {
                for j in i + 1..n {
                    let lhs = d_form_pairing(&a, d.f(), d.field(i), d.field(j));
                    let coef = fs.coefficient(k, i, j).cloned().unwrap_or_else(|| WeightedPoly::zero(d.weights()));
                    assert_eq!(lhs, &coef * f2, "{name}: d{k}({i},{j})");
                }
            }
        }
    }
}
