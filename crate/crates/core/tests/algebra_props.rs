use proptest::prelude::*;
use qpoincare_core::algebras::crossed::crossed_product;
use qpoincare_core::algebras::{minkowski_system, Source};
use qpoincare_core::coeff::Regime;
use qpoincare_core::intertwiners::Variant;
use qpoincare_core::rewrite::{Gen, NCPoly, Word};

fn regimes() -> impl Strategy<Value = Regime> {
    prop::sample::select(Regime::ALL.into_iter().filter(|&r| r != Regime::Generic).collect::<Vec<_>>())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn crossed_words_reduce_to_u_then_x(regime in regimes(), first in any::<bool>(), w in prop::collection::vec(0u16..12, 1..5)) {
        let v = if first { Variant::First } else { Variant::Second };
        let cp = crossed_product(regime, v).unwrap();
        let r = cp.reduce(&NCPoly::word(Word(w.into_iter().map(Gen).collect())));
        for (w, _) in r.terms() {
            prop_assert!(cp.is_u_then_x(w), "{}", cp.alphabet().fmt_word(w));
        }
    }

    #[test]
    fn star_respects_the_relations(regime in regimes(), w in prop::collection::vec(0u16..4, 1..5)) {
        let m = minkowski_system(regime, Source::Derived).unwrap();
        let p = NCPoly::word(Word(w.into_iter().map(Gen).collect()));
        let a = m.normal_form(&m.star(&p));
        let b = m.normal_form(&m.star(&m.normal_form(&p)));
        prop_assert!(a.sub(&b).is_zero());
    }

    #[test]
    fn minkowski_normal_form_is_multiplicative(regime in regimes(),
        a in prop::collection::vec(0u16..4, 1..4), b in prop::collection::vec(0u16..4, 1..4)) {
        let m = minkowski_system(regime, Source::Derived).unwrap();
        let pa = NCPoly::word(Word(a.into_iter().map(Gen).collect()));
        let pb = NCPoly::word(Word(b.into_iter().map(Gen).collect()));
        let lhs = m.normal_form(&pa.mul(&pb));
        let rhs = m.normal_form(&m.normal_form(&pa).mul(&m.normal_form(&pb)));
        prop_assert!(lhs.sub(&rhs).is_zero());
    }
}
