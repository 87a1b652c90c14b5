use num_complex::Complex64;
use proptest::prelude::*;
use qpoincare_core::coeff::{
    eval_at, specialize, star, AtomValues, GaussianRational, LaurentPoly, Mono, Regime, Scalar,
};

fn gauss() -> impl Strategy<Value = GaussianRational> {
    (-4i64..=4, -3i64..=3, 1i64..=3).prop_map(|(a, b, d)| {
        &GaussianRational::ratio(a, d) + &(&GaussianRational::ratio(b, d) * &GaussianRational::i())
    })
}

fn poly() -> impl Strategy<Value = LaurentPoly> {
    prop::collection::vec((gauss(), -3i32..=3, -3i32..=3, -2i32..=2), 0..4)
        .prop_map(|ts| LaurentPoly::from_terms(ts.into_iter().map(|(c, a, b, t)| (Mono::new(a, b, t), c))))
}

fn scalar() -> impl Strategy<Value = Scalar> {
    (poly(), poly()).prop_map(|(n, d)| if d.is_zero() { Scalar::from_poly(n) } else { Scalar::from_parts(n, d) })
}

fn regime() -> impl Strategy<Value = Regime> {
    prop::sample::select(Regime::ALL.to_vec())
}

/// Independent atom values, not tied by any reality condition.
fn point() -> AtomValues {
    AtomValues {
        q_half: Complex64::new(0.83, 0.31),
        qb_half: Complex64::new(-0.47, 1.12),
        t_half: Complex64::new(1.21, -0.17),
    }
}

fn close(a: Complex64, b: Complex64) -> bool {
    (a - b).norm() <= 1e-8 * (1.0 + a.norm().max(b.norm()))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn field_axioms(a in scalar(), b in scalar(), c in scalar()) {
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert!((&a - &a).is_zero());
        if let Some(ai) = a.inv() {
            prop_assert!((&a * &ai).is_one());
        }
    }

    #[test]
    fn generic_star_is_an_involutive_ring_map(a in scalar(), b in scalar()) {
        prop_assert_eq!(a.star_generic().star_generic(), a.clone());
        prop_assert_eq!((&a * &b).star_generic(), &a.star_generic() * &b.star_generic());
        prop_assert_eq!((&a + &b).star_generic(), &a.star_generic() + &b.star_generic());
    }

    #[test]
    fn regime_star_is_involutive(a in poly().prop_map(Scalar::from_poly), r in regime()) {
        let s = specialize(&a, r);
        prop_assert_eq!(star(&star(&s, r), r), s);
    }

    #[test]
    fn specialisation_is_a_ring_map(a in poly(), b in poly(), r in regime()) {
        let (a, b) = (Scalar::from_poly(a), Scalar::from_poly(b));
        prop_assert_eq!(specialize(&(&a * &b), r), &specialize(&a, r) * &specialize(&b, r));
        prop_assert_eq!(specialize(&(&a + &b), r), &specialize(&a, r) + &specialize(&b, r));
    }

    #[test]
    fn evaluation_is_multiplicative(a in scalar(), b in scalar()) {
        let v = point();
        if let (Ok(x), Ok(y)) = (eval_at(&a, &v), eval_at(&b, &v)) {
            let xy = eval_at(&(&a * &b), &v).unwrap();
            prop_assert!(close(xy, x * y), "{} vs {}", xy, x * y);
            let s = eval_at(&(&a + &b), &v).unwrap();
            prop_assert!(close(s, x + y));
        }
    }

    #[test]
    fn exact_square_roots_square_back(a in scalar()) {
        let sq = &a * &a;
        let r = sq.sqrt_exact();
        prop_assert!(r.is_some());
        let r = r.unwrap();
        prop_assert_eq!(&r * &r, sq);
    }
}
