use proptest::prelude::*;
use qpoincare::cli::parse_in;
use qpoincare_core::algebras::minkowski::x_alphabet;
use qpoincare_core::coeff::{Regime, Scalar};
use qpoincare_core::rewrite::{Gen, NCPoly, Word};

fn monomial() -> impl Strategy<Value = Scalar> {
    (-3i64..=3, 1i64..=4, -3i32..=3, -3i32..=3, -3i32..=3, any::<bool>()).prop_map(|(n, d, a, b, c, im)| {
        let base = &(&(&Scalar::ratio(n, d) * &Scalar::q_half_pow(a)) * &Scalar::qb_half_pow(b)) * &Scalar::t_half_pow(c);
        if im {
            &base * &Scalar::i()
        } else {
            base
        }
    })
}

fn scalar() -> impl Strategy<Value = Scalar> {
    (monomial(), monomial(), 0u8..3).prop_map(|(a, b, shape)| match shape {
        0 => a,
        1 => &a + &b,
        _ => &a * &(&Scalar::q().pow(2) + &Scalar::one()).inv().unwrap(),
    })
}

fn poly() -> impl Strategy<Value = NCPoly> {
    prop::collection::vec((scalar(), prop::collection::vec(0u16..4, 0..4)), 0..4)
        .prop_map(|ts| NCPoly::from_terms(ts.into_iter().map(|(c, w)| (c, Word(w.into_iter().map(Gen).collect())))))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn print_then_parse_is_identity(p in poly()) {
        let al = x_alphabet([0, 1, 2, 3]);
        let printed = p.display(&al);
        let back = parse_in(&printed, &al, Regime::Generic).unwrap();
        prop_assert!(back.sub(&p).is_zero(), "{} reparsed as {}", printed, back.display(&al));
    }

    #[test]
    fn product_order_is_preserved(a in 0u16..4, b in 0u16..4) {
        let al = x_alphabet([0, 1, 2, 3]);
        let s = format!("{}*{}", al.symbol(Gen(a)), al.symbol(Gen(b)));
        let p = parse_in(&s, &al, Regime::Generic).unwrap();
        prop_assert_eq!(p, NCPoly::word(Word(vec![Gen(a), Gen(b)])));
    }
}
