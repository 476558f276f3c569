use logres::divisor::VectorFieldPoly;
use logres::exact::{integer_eigenvalues, kernel, rref, Monomial, Rational, RationalMatrix, WeightedPoly};
use logres::liealg::ad_operator;
use num::Zero;
use proptest::prelude::*;

const W: [u32; 3] = [1, 2, 3];

fn poly() -> impl Strategy<Value = WeightedPoly> {
    prop::collection::vec((-5i64..=5, 0u32..3, 0u32..3, 0u32..2), 0..5).prop_map(|terms| {
        let mut p = WeightedPoly::zero(&W);
        for (c, a, b, d) in terms {
            p.add_term(Monomial::new(vec![a, b, d]), Rational::from_integer(c.into()));
        }
        p
    })
}

fn field() -> impl Strategy<Value = VectorFieldPoly> {
    (poly(), poly(), poly()).prop_map(|(a, b, c)| VectorFieldPoly::new(vec![a, b, c]))
}

fn matrix(n: usize) -> impl Strategy<Value = RationalMatrix> {
    prop::collection::vec(-4i64..=4, n * n).prop_map(move |v| {
        let rows = v.chunks(n).map(|r| r.iter().map(|&x| Rational::from_integer(x.into())).collect()).collect();
        RationalMatrix::from_rows(rows).unwrap()
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn ring_axioms(a in poly(), b in poly(), c in poly()) {
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert!((&a - &a).is_zero());
    }

    #[test]
    fn graded_components_decompose(a in poly()) {
        let comps = a.graded_components();
        let mut sum = WeightedPoly::zero(&W);
        for (d, p) in &comps {
            prop_assert!(p.is_homogeneous_of(*d));
            sum = &sum + p;
        }
        prop_assert_eq!(sum, a);
    }

    #[test]
    fn exact_divide_inverts_multiplication(a in poly(), b in poly()) {
        prop_assume!(!b.is_zero());
        prop_assert_eq!((&a * &b).exact_divide(&b).unwrap(), a);
    }

    #[test]
    fn rref_solutions_and_kernels(a in matrix(3), rhs in prop::collection::vec(-4i64..=4, 3)) {
        let b = RationalMatrix::from_columns(3, &[rhs.iter().map(|&x| Rational::from_integer(x.into())).collect()]);
        let r = rref(&a, Some(&b));
        if let Some(x) = r.solution() {
            prop_assert_eq!(&a * x, b);
        }
        for v in &r.kernel {
            let col = RationalMatrix::from_columns(3, std::slice::from_ref(v));
            prop_assert!((&a * &col).is_zero());
        }
        prop_assert_eq!(r.rank + r.kernel.len(), 3);
    }

    #[test]
    fn integer_eigenvalues_match_kernels(a in matrix(3)) {
        let ev = integer_eigenvalues(&a).unwrap();
        for lambda in -12i64..=12 {
            let shifted = &a - &RationalMatrix::identity(3).scale(&Rational::from_integer(lambda.into()));
            prop_assert_eq!(!kernel(&shifted).is_empty(), ev.contains(&lambda), "lambda {}", lambda);
        }
    }

    #[test]
    fn bracket_is_a_lie_bracket(x in field(), y in field(), z in field(), c in -3i64..=3) {
        let c = Rational::from_integer(c.into());
        prop_assert_eq!(x.bracket(&y).scale(&Rational::from_integer((-1).into())), y.bracket(&x));
        prop_assert_eq!(x.add(&y.scale(&c)).bracket(&z), x.bracket(&z).add(&y.bracket(&z).scale(&c)));
        let jac = x.bracket(&y.bracket(&z)).add(&y.bracket(&z.bracket(&x))).add(&z.bracket(&x.bracket(&y)));
        prop_assert!(jac.is_zero());
    }

    #[test]
    fn ad_is_traceless(a in matrix(3)) {
        prop_assert!(ad_operator(&a).unwrap().trace().is_zero());
    }
}
