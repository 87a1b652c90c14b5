use num_complex::Complex64;
use proptest::prelude::*;
use qpoincare_core::coeff::{eval_at, AtomValues, Regime, Scalar};
use qpoincare_core::rewrite::{Alphabet, Gen, Generator, NCPoly, RewriteRule, RewriteSystem, Word};

fn alphabet() -> Alphabet {
    Alphabet::new(vec![
        Generator::new("a", 0, "d"),
        Generator::new("b", 0, "c"),
        Generator::new("c", 0, "b"),
        Generator::new("d", 0, "a"),
    ])
    .unwrap()
}

/// The quantum 2×2 matrix algebra `a<b<c<d`: `ab = q ba`, `ac = q ca`, `bd = q db`,
/// `cd = q dc`, `bc = cb`, `ad − da = (q − q⁻¹) bc`; a known PBW algebra.
fn system() -> RewriteSystem {
    let qi = Scalar::q().inv().unwrap();
    let w = |a: u16, b: u16| Word(vec![Gen(a), Gen(b)]);
    let rule = |l: (u16, u16), rhs: NCPoly| RewriteRule { lhs: [Gen(l.0), Gen(l.1)], rhs };
    let rules = vec![
        rule((1, 0), NCPoly::term(qi.clone(), w(0, 1))),
        rule((2, 0), NCPoly::term(qi.clone(), w(0, 2))),
        rule((3, 1), NCPoly::term(qi.clone(), w(1, 3))),
        rule((3, 2), NCPoly::term(qi.clone(), w(2, 3))),
        rule((2, 1), NCPoly::word(w(1, 2))),
        rule((3, 0), NCPoly::word(w(0, 3)).sub(&NCPoly::term(&Scalar::q() - &qi, w(1, 2)))),
    ];
    RewriteSystem::new(alphabet(), rules, Regime::Generic).unwrap()
}

fn word() -> impl Strategy<Value = Word> {
    prop::collection::vec(0u16..4, 0..4).prop_map(|v| Word(v.into_iter().map(Gen).collect()))
}

fn poly() -> impl Strategy<Value = NCPoly> {
    prop::collection::vec((-3i64..=3, word()), 0..4)
        .prop_map(|ts| NCPoly::from_terms(ts.into_iter().map(|(c, w)| (Scalar::from_int(c), w))))
}

fn point() -> AtomValues {
    AtomValues { q_half: Complex64::new(0.9, 0.4), qb_half: Complex64::new(1.1, -0.2), t_half: Complex64::new(1.3, 0.1) }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn normal_form_is_idempotent_and_normal(p in poly()) {
        let s = system();
        let n = s.normal_form(&p);
        prop_assert_eq!(s.normal_form(&n), n.clone());
        for (w, _) in n.terms() {
            prop_assert!(s.is_normal(w));
        }
    }

    #[test]
    fn normal_form_is_linear(p in poly(), r in poly()) {
        let s = system();
        prop_assert_eq!(s.normal_form(&p.add(&r)), s.normal_form(&p).add(&s.normal_form(&r)));
    }

    #[test]
    fn normal_form_respects_products(p in poly(), r in poly()) {
        let s = system();
        let direct = s.normal_form(&p.mul(&r));
        let staged = s.normal_form(&s.normal_form(&p).mul(&s.normal_form(&r)));
        prop_assert_eq!(direct, staged);
    }

    #[test]
    fn star_is_an_anti_automorphism(p in poly(), r in poly()) {
        let al = alphabet();
        let id = |c: &Scalar| c.clone();
        prop_assert_eq!(p.mul(&r).star(&al, &id), r.star(&al, &id).mul(&p.star(&al, &id)));
        prop_assert_eq!(p.star(&al, &id).star(&al, &id), p);
    }

    #[test]
    fn numeric_reduction_matches_exact(p in poly()) {
        let s = system();
        let v = point();
        let ev = |c: &Scalar| eval_at(c, &v).unwrap();
        let exact = s.normal_form(&p).map_coeffs(ev);
        let numeric = s.map_coeffs(ev).normal_form(&p.map_coeffs(ev));
        for w in exact.words().into_iter().chain(numeric.words()) {
            prop_assert!((exact.coeff(&w) - numeric.coeff(&w)).norm() < 1e-9);
        }
    }
}

#[test]
fn system_is_confluent_with_cubic_growth() {
    let s = system();
    assert!(s.check_confluence().is_empty());
    assert_eq!(s.normal_word_counts(4), vec![1, 4, 10, 20, 35]);
}
