use logres::divisor::catalog::normal_crossing;
use logres::divisor::*;
use logres::exact::{int, rat, Rational, WeightedPoly};

fn all() -> Vec<FreeDivisor> {
    let mut v: Vec<FreeDivisor> = ["cusp", "d4", "g2", "borel2", "sekiguchi_b5", "plane_curve(3,4)", "plane_curve(2,5)"]
        .iter()
        .map(|n| catalog(n).unwrap())
        .collect();
    for k in 1..=4 {
        v.push(normal_crossing(k).unwrap());
    }
    v
}

fn c(d: &FreeDivisor, k: i64) -> WeightedPoly {
    WeightedPoly::constant(d.weights(), int(k))
}

fn var(d: &FreeDivisor, i: usize) -> WeightedPoly {
    WeightedPoly::var(d.weights(), i)
}

#[test]
fn saito_constants() {
    let expected: &[(&str, Rational)] = &[
        ("cusp", int(6)),
        ("sekiguchi_b5", int(-18)),
        ("normal_crossing(3)", int(1)),
    ];
    for (name, k) in expected {
        let d = catalog(name).unwrap();
        assert_eq!(verify_saito(&d, 0).constant(), Some(k), "{name}");
    }
    for d in all() {
        let v = verify_saito(&d, 0);
        assert!(v.is_ok(), "{}: {v:?}", d.name());
    }
}

#[test]
fn degenerate_cusp_frame_fails() {
    let d = catalog("cusp").unwrap();
    let mut frame = d.frame().to_vec();
    frame[1].field = frame[0].field.clone();
    let bad = d.with_frame(frame).unwrap();
    assert!(matches!(verify_saito(&bad, 0), SaitoVerdict::DeterminantMismatch { .. }));
    assert!(matches!(StructureFunctions::compute(&bad), Err(DivisorError::DegenerateFrame)));
}

#[test]
fn structure_is_consistent_everywhere() {
    for d in all() {
        let sf = StructureFunctions::compute(&d).unwrap();
        for i in 0..d.dim() {
            for j in 0..d.dim() {
                assert_eq!(sf.recombine(&d, i, j), d.field(i).bracket(d.field(j)), "{}", d.name());
            }
        }
        assert!(sf.jacobi_defects(&d).is_empty(), "{}", d.name());
        assert!(sf.homogeneity_violations(&d).is_empty(), "{}", d.name());
        AlgebroidConstants::extract(&d, &sf).unwrap();
        let forms = dual_log_forms(&d).unwrap();
        assert!(forms.pairing_holds(&d), "{}", d.name());
    }
}

#[test]
fn sekiguchi_brackets() {
    let d = catalog("sekiguchi_b5").unwrap();
    let (e, v, w) = (d.field(0), d.field(1), d.field(2));
    assert_eq!(e.bracket(v), *v);
    assert_eq!(e.bracket(w), w.scale(&int(2)));
    let sf = StructureFunctions::compute(&d).unwrap();
    assert_eq!(*sf.get(1, 2, 0), &c(&d, 24) * &var(&d, 2));
    assert_eq!(*sf.get(1, 2, 1), &c(&d, 6) * &var(&d, 1));
    assert_eq!(*sf.get(1, 2, 2), &c(&d, -40) * &var(&d, 0));
    let dl = dlog_f_expansion(&d).unwrap();
    assert_eq!(dl, vec![c(&d, 9), &c(&d, -96) * &var(&d, 0), &c(&d, -36) * &var(&d, 1)]);
}

#[test]
fn sekiguchi_form_display() {
    let d = catalog("sekiguchi_b5").unwrap();
    let fs = form_structure_equations(&StructureFunctions::compute(&d).unwrap());
    // dα = −24z β∧γ
    assert_eq!(fs.rows[0], vec![(1, 2, &c(&d, -24) * &var(&d, 2))]);
    // dβ = −α∧β − 6y β∧γ
    assert_eq!(fs.rows[1], vec![(0, 1, c(&d, -1)), (1, 2, &c(&d, -6) * &var(&d, 1))]);
    // dγ = −2α∧γ + 40x β∧γ
    assert_eq!(fs.rows[2], vec![(0, 2, c(&d, -2)), (1, 2, &c(&d, 40) * &var(&d, 0))]);
}

#[test]
fn sekiguchi_dual_form_numerators() {
    let d = catalog("sekiguchi_b5").unwrap();
    let forms = dual_log_forms(&d).unwrap();
    assert_eq!(forms.constant, int(-18));
    let w = d.weights();
    let p = |t: &[(i64, &[u32])]| WeightedPoly::from_int_terms(w, t);
    // α = (y(3y³+4z²) dx + z(16xz−3y²) dy + (z²+3y³−12xyz) dz) / (3F)
    let alpha = [
        p(&[(3, &[0, 4, 0]), (4, &[0, 1, 2])]),
        p(&[(16, &[1, 0, 2]), (-3, &[0, 2, 1])]),
        p(&[(1, &[0, 0, 2]), (3, &[0, 3, 0]), (-12, &[1, 1, 1])]),
    ];
    // β = (y²z dx + z(4xy+3z) dy − y(3xy+2z) dz) / (6F)
    let beta = [
        p(&[(1, &[0, 2, 1])]),
        p(&[(4, &[1, 1, 1]), (3, &[0, 0, 2])]),
        p(&[(-3, &[1, 2, 0]), (-2, &[0, 1, 1])]),
    ];
    // γ = ((2y³+3z²−4xyz) dx − (3yz+xy²+16x²z) dy + (12x²y+2y²−xz) dz) / (9F)
    let gamma = [
        p(&[(2, &[0, 3, 0]), (3, &[0, 0, 2]), (-4, &[1, 1, 1])]),
        p(&[(-3, &[0, 1, 1]), (-1, &[1, 2, 0]), (-16, &[2, 0, 1])]),
        p(&[(12, &[2, 1, 0]), (2, &[0, 2, 0]), (-1, &[1, 0, 1])]),
    ];
    for (row, (expected, den)) in [(alpha, 3), (beta, 6), (gamma, 9)].into_iter().enumerate() {
        for j in 0..3 {
            // numerator/(κF) = expected/(den F)  ⇔  den·numerator = κ·expected
            assert_eq!(
                forms.numerator[(row, j)].scale(&int(den)),
                expected[j].scale(&forms.constant),
                "row {row} col {j}"
            );
        }
    }
}

#[test]
fn cusp_forms_and_brackets() {
    let d = catalog("cusp").unwrap();
    assert_eq!(d.field(0).bracket(d.field(1)), *d.field(1));
    assert_eq!(dlog_f_expansion(&d).unwrap(), vec![c(&d, 6), c(&d, 0)]);
    let forms = dual_log_forms(&d).unwrap();
    // α = (1/6) dlog f: numerator row 0 = (f_x, f_y) with denominator 6f
    assert_eq!(forms.numerator[(0, 0)], d.f().partial_derivative(0));
    assert_eq!(forms.numerator[(0, 1)], d.f().partial_derivative(1));
    // β = (3x dy − 2y dx)/(6f)
    assert_eq!(forms.numerator[(1, 0)], &c(&d, -2) * &var(&d, 1));
    assert_eq!(forms.numerator[(1, 1)], &c(&d, 3) * &var(&d, 0));
    let fs = form_structure_equations(&StructureFunctions::compute(&d).unwrap());
    assert!(fs.rows[0].is_empty());
    // dβ = β∧α, i.e. −α∧β
    assert_eq!(fs.rows[1], vec![(0, 1, c(&d, -1))]);
}

#[test]
fn normal_crossing_forms() {
    let d = normal_crossing(3).unwrap();
    let forms = dual_log_forms(&d).unwrap();
    assert_eq!(forms.constant, int(1));
    for i in 0..3 {
        for j in 0..3 {
            let expected = if i == j {
                forms.f.exact_divide(&var(&d, i)).unwrap()
            } else {
                c(&d, 0)
            };
            assert_eq!(forms.numerator[(i, j)], expected);
        }
    }
    assert_eq!(dlog_f_expansion(&d).unwrap(), vec![c(&d, 1); 3]);
}

#[test]
fn g2_relations() {
    let d = catalog("g2").unwrap();
    let sf = StructureFunctions::compute(&d).unwrap();
    let fs = form_structure_equations(&sf);
    // frame order E, Vh, Vf, Ve
    // dα_E = 0, dα_h = α_e∧α_f, dα_e = 2α_h∧α_e, dα_f = −2α_h∧α_f
    assert!(fs.rows[0].is_empty());
    assert_eq!(fs.rows[1], vec![(2, 3, c(&d, -1))]);
    assert_eq!(fs.rows[3], vec![(1, 3, c(&d, 2))]);
    assert_eq!(fs.rows[2], vec![(1, 2, c(&d, -2))]);
    assert_eq!(dlog_f_expansion(&d).unwrap(), vec![c(&d, 12), c(&d, 0), c(&d, 0), c(&d, 0)]);
    let forms = dual_log_forms(&d).unwrap();
    // α_h = (1/(2f))((9w²x − 7wyz + 2z³) dx + ...)
    let w = d.weights();
    let p = |t: &[(i64, &[u32])]| WeightedPoly::from_int_terms(w, t);
    let alpha_h = [
        p(&[(9, &[1, 0, 0, 2]), (-7, &[0, 1, 1, 1]), (2, &[0, 0, 3, 0])]),
        p(&[(2, &[0, 2, 0, 1]), (-1, &[0, 1, 2, 0]), (3, &[1, 0, 1, 1])]),
        p(&[(1, &[0, 2, 1, 0]), (-3, &[1, 1, 0, 1]), (-2, &[1, 0, 2, 0])]),
        p(&[(-2, &[0, 3, 0, 0]), (7, &[1, 1, 1, 0]), (-9, &[2, 0, 0, 1])]),
    ];
    for j in 0..4 {
        // numerator/(κ f) = alpha_h/(2f)
        assert_eq!(
            forms.numerator[(1, j)].scale(&int(2)),
            alpha_h[j].scale(&forms.constant),
            "col {j}"
        );
    }
}

#[test]
fn borel_relations() {
    let d = catalog("borel2").unwrap();
    let sf = StructureFunctions::compute(&d).unwrap();
    let consts = AlgebroidConstants::extract(&d, &sf).unwrap();
    assert_eq!(consts.toral_weights, vec![vec![int(1)], vec![int(-1)]]);
    let fs = form_structure_equations(&sf);
    // dβ = (α2 − α1)∧β = −α1∧β + α2∧β
    assert_eq!(fs.rows[2], vec![(0, 2, c(&d, -1)), (1, 2, c(&d, 1))]);
    // dπ on V vanishes for both toral directions
    assert!(d.dpi(0, 2).is_zero() && d.dpi(1, 2).is_zero());
    let _ = rat(1, 2);
}
