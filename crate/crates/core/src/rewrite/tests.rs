use alloc::vec;
use alloc::vec::Vec;

use super::*;
use crate::coeff::{Regime, Scalar};

fn abcd() -> Alphabet {
    Alphabet::new(["a", "b", "c", "d"].iter().map(|n| Generator::new(n, 0, n)).collect()).unwrap()
}

fn w(al: &Alphabet, s: &str) -> Word {
    al.word(s).unwrap()
}

/// `x_j x_i → c·x_i x_j` for `j > i`.
fn skew(al: &Alphabet, c: Scalar) -> RewriteSystem {
    let mut rules = Vec::new();
    for i in 0..4u16 {
        for j in i + 1..4 {
            rules.push(RewriteRule { lhs: [Gen(j), Gen(i)], rhs: NCPoly::term(c.clone(), Word(vec![Gen(i), Gen(j)])) });
        }
    }
    RewriteSystem::new(al.clone(), rules, Regime::Generic).unwrap()
}

#[test]
fn degree_lex_order() {
    let al = abcd();
    assert!(w(&al, "d") < w(&al, "a*a"));
    assert!(w(&al, "a*d") < w(&al, "b*a"));
    assert!(Word::unit() < w(&al, "a"));
}

#[test]
fn alphabet_rejects_non_involutive_star() {
    let g = vec![Generator::new("x", 0, "y"), Generator::new("y", 0, "y")];
    assert!(matches!(Alphabet::new(g), Err(RewriteError::StarNotInvolution(_))));
    let g = vec![Generator::new("x", 0, "z")];
    assert!(matches!(Alphabet::new(g), Err(RewriteError::UnknownGenerator(_))));
    let g = vec![Generator::new("x", 0, "x'"), Generator::new("x", 1, "x")];
    let al = Alphabet::new(g).unwrap();
    assert_eq!(al.star(Gen(0)), Gen(1));
    assert_eq!(al.fmt_word(&Word(vec![Gen(0), Gen(1)])), "x*x'");
}

#[test]
fn commuting_normal_words_count_monomials() {
    let s = skew(&abcd(), Scalar::one());
    assert_eq!(s.normal_word_counts(4), vec![1, 4, 10, 20, 35]);
    assert!(s.check_confluence().is_empty());
    assert_eq!(s.overlaps().len(), 4);
}

#[test]
fn skew_polynomial_rules_are_confluent() {
    let al = abcd();
    let s = skew(&al, Scalar::q());
    assert!(s.check_confluence().is_empty());
    // d·c·b·a → q^6 a·b·c·d (six transpositions).
    let nf = s.normal_form(&NCPoly::word(w(&al, "d*c*b*a")));
    assert_eq!(nf, NCPoly::term(Scalar::q().pow(6), w(&al, "a*b*c*d")));
}

#[test]
fn overlap_obstruction_is_reported() {
    let al = abcd();
    let rules = vec![
        RewriteRule { lhs: [Gen(1), Gen(0)], rhs: NCPoly::<Scalar>::word(w(&al, "a*a")) },
        RewriteRule { lhs: [Gen(2), Gen(1)], rhs: NCPoly::word(w(&al, "b*b")) },
    ];
    let s = RewriteSystem::new(al.clone(), rules, Regime::Generic).unwrap();
    let obs = s.check_confluence();
    assert_eq!(obs.len(), 1);
    assert_eq!(obs[0].word, w(&al, "c*b*a"));
    // (cb)a → bba → baa → aaa; c(ba) → caa.
    let expect = NCPoly::word(w(&al, "a*a*a")).sub(&NCPoly::word(w(&al, "c*a*a")));
    assert_eq!(obs[0].diff, expect);
}

#[test]
fn invalid_systems_are_rejected() {
    let al = abcd();
    let up = RewriteRule { lhs: [Gen(0), Gen(1)], rhs: NCPoly::<Scalar>::word(w(&al, "b*a")) };
    assert!(matches!(RewriteSystem::new(al.clone(), vec![up], Regime::Generic), Err(RewriteError::NonDecreasing(_))));
    let r = RewriteRule { lhs: [Gen(1), Gen(0)], rhs: NCPoly::<Scalar>::zero() };
    assert!(matches!(
        RewriteSystem::new(al, vec![r.clone(), r], Regime::Generic),
        Err(RewriteError::DuplicateLeading(_))
    ));
}

#[test]
fn orient_recovers_rules_from_scrambled_relations() {
    let al = abcd();
    let s = skew(&al, Scalar::q());
    // Mix the relations: sums of pairs plus a redundant copy.
    let rels: Vec<NCPoly> = s.rules().iter().map(|r| r.relation()).collect();
    let mut mixed: Vec<NCPoly> = rels.windows(2).map(|p| p[0].add(&p[1].scale(&Scalar::from_int(3)))).collect();
    mixed.push(rels[5].clone());
    mixed.push(rels[0].scale(&Scalar::t()));
    let o = orient(&mixed, &al, Regime::Generic).unwrap();
    assert_eq!(o.rules().len(), 6);
    for r in s.rules() {
        assert_eq!(o.rule_for(r.lhs[0], r.lhs[1]), Some(r));
    }
    let cubic = NCPoly::word(w(&al, "a*b*c")).sub(&NCPoly::word(w(&al, "a")));
    assert!(matches!(orient(&[cubic], &al, Regime::Generic), Err(RewriteError::NotOrientable(_))));
}

#[test]
fn display_uses_signed_terms() {
    let al = abcd();
    let p = NCPoly::word(w(&al, "a*d")).sub(&NCPoly::term(Scalar::t().inv().unwrap(), w(&al, "b*c")));
    assert_eq!(p.display(&al), "a*d - (1/t)*b*c");
    assert_eq!(NCPoly::<Scalar>::zero().display(&al), "0");
    assert_eq!(NCPoly::<Scalar>::one().display(&al), "1");
}

#[test]
fn star_reverses_words() {
    let g = vec![Generator::new("x", 0, "y"), Generator::new("y", 0, "x")];
    let al = Alphabet::new(g).unwrap();
    let p = NCPoly::term(Scalar::q(), Word(vec![Gen(0), Gen(0), Gen(1)]));
    let s = p.star(&al, &|c: &Scalar| crate::coeff::star(c, Regime::Generic));
    assert_eq!(s, NCPoly::term(crate::coeff::star(&Scalar::q(), Regime::Generic), Word(vec![Gen(0), Gen(1), Gen(1)])));
}
