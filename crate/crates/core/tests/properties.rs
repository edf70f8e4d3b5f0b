use hankelcf::algebra::{Frac, MPoly, Rat, Series};
use hankelcf::hankel::{
    condensation_check, det_cofactor, det_exact, hankel_det, hankel_matrix, kernel_matrix, HankelSpec, KernelVariant,
    SquareMatrix,
};
use proptest::prelude::*;

fn rat() -> impl Strategy<Value = Rat> {
    (-6i64..=6, 1i64..=4).prop_map(|(n, d)| Rat::new(n.into(), d.into()).unwrap())
}

fn poly() -> impl Strategy<Value = MPoly> {
    prop::collection::vec((0u32..3, 0u32..3, rat()), 0..4)
        .prop_map(|terms| MPoly::from_terms(2, terms.into_iter().map(|(i, j, c)| (vec![i, j], c))))
}

fn nonzero_poly() -> impl Strategy<Value = MPoly> {
    poly().prop_filter("nonzero", |p| !p.is_zero())
}

fn frac() -> impl Strategy<Value = Frac> {
    (poly(), nonzero_poly()).prop_map(|(n, d)| Frac::new(n, d).unwrap())
}

/// Series over one parameter with small polynomial coefficients.
fn series(order: usize) -> impl Strategy<Value = Series> {
    prop::collection::vec(prop::collection::vec((0u32..3, -3i64..=3), 1..3), order + 1).prop_map(|cs| {
        Series::from_polys(
            cs.into_iter()
                .map(|terms| MPoly::from_terms(1, terms.into_iter().map(|(e, c)| (vec![e], Rat::from(c)))))
                .collect(),
        )
    })
}

fn poly_matrix(n: usize) -> impl Strategy<Value = SquareMatrix> {
    prop::collection::vec(poly().prop_map(Frac::from_poly), n * n).prop_map(move |e| SquareMatrix::from_fn(2, n, |i, j| e[i * n + j].clone()))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn polynomial_ring_axioms(a in poly(), b in poly(), c in poly()) {
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert!((&a - &a).is_zero());
    }

    #[test]
    fn exact_division_inverts_multiplication(a in poly(), b in nonzero_poly()) {
        prop_assert_eq!((&a * &b).div_exact(&b), Some(a));
    }

    #[test]
    fn fraction_field_axioms(a in frac(), b in frac(), c in frac()) {
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        if !b.is_zero() {
            prop_assert_eq!(&(&a / &b) * &b, a.clone());
            prop_assert!((&b * &b.recip().unwrap()).is_one());
        }
    }

    #[test]
    fn series_inverse(s in series(6)) {
        prop_assume!(!s.coeffs()[0].is_zero());
        let inv = s.inverse().unwrap();
        prop_assert!(s.mul(&inv).equal_upto(&Series::one(1, 6), 6).unwrap());
    }

    #[test]
    fn series_product_commutes(s in series(5), t in series(5)) {
        prop_assert_eq!(s.mul(&t), t.mul(&s));
    }

    #[test]
    fn elimination_matches_cofactor_expansion(m in poly_matrix(4)) {
        prop_assert_eq!(det_exact(&m), det_cofactor(&m));
    }

    #[test]
    fn repeated_row_gives_zero(rows in prop::collection::vec(frac(), 6)) {
        let m = SquareMatrix::from_fn(2, 3, |i, j| rows[(i % 2) * 3 + j].clone());
        let m = SquareMatrix::from_rows(2, vec![m.rows()[0].clone(), m.rows()[1].clone(), m.rows()[0].clone()]).unwrap();
        prop_assert!(det_exact(&m).is_zero());
    }

    #[test]
    fn kernel_matrix_is_the_hankel_matrix(s in series(12), n in 0usize..=6) {
        let ordinary = kernel_matrix(&s, n, KernelVariant::Ordinary).unwrap();
        prop_assert_eq!(ordinary, hankel_matrix(&HankelSpec::new(s.clone(), n, 0).unwrap()).unwrap());
        let shifted = kernel_matrix(&s, n, KernelVariant::Shifted).unwrap();
        prop_assert_eq!(shifted, hankel_matrix(&HankelSpec::new(s.clone(), n, 1).unwrap()).unwrap());
    }

    #[test]
    fn condensation_on_random_series(s in series(10), n in 2usize..=4, k in 0usize..=2) {
        prop_assert!(condensation_check(&s, n, k).unwrap());
    }

    #[test]
    fn hankel_det_of_scaled_series(s in series(8), c in -4i64..=4, n in 0usize..=4) {
        prop_assume!(c != 0);
        let scaled = s.scale(&Frac::from_int(1, c));
        let lhs = hankel_det(&scaled, n, 0).unwrap();
        let rhs = &Frac::from_int(1, c).pow(n as i64).unwrap() * &hankel_det(&s, n, 0).unwrap();
        prop_assert_eq!(lhs, rhs);
    }
}
