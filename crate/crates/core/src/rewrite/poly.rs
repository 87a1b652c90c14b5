use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use crate::coeff::Scalar;
use crate::tensor::Coefficient;

use super::{Alphabet, Gen, Word};

/// Finite coefficient-weighted sum of words; zero coefficients are never stored.
#[derive(Clone, Debug, PartialEq)]
pub struct NCPoly<C = Scalar> {
    terms: BTreeMap<Word, C>,
}

impl<C: Coefficient> Default for NCPoly<C> {
    fn default() -> Self {
        NCPoly::zero()
    }
}

impl<C: Coefficient> NCPoly<C> {
    pub fn zero() -> Self {
        NCPoly { terms: BTreeMap::new() }
    }

    pub fn one() -> Self {
        NCPoly::term(C::one(), Word::unit())
    }

    pub fn constant(c: C) -> Self {
        NCPoly::term(c, Word::unit())
    }

    pub fn term(c: C, w: Word) -> Self {
        let mut p = NCPoly::zero();
        p.add_term(w, c);
        p
    }

    pub fn word(w: Word) -> Self {
        NCPoly::term(C::one(), w)
    }

    pub fn gen(g: Gen) -> Self {
        NCPoly::word(Word(alloc::vec![g]))
    }

    pub fn from_terms<I: IntoIterator<Item = (C, Word)>>(it: I) -> Self {
        let mut p = NCPoly::zero();
        for (c, w) in it {
            p.add_term(w, c);
        }
        p
    }

    /// Adds `c·w` in place.
    pub fn add_term(&mut self, w: Word, c: C) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&w) {
            Some(x) => {
                let s = x.add(&c);
                if s.is_zero() {
                    self.terms.remove(&w);
                } else {
                    *x = s;
                }
            }
            None => {
                self.terms.insert(w, c);
            }
        }
    }

    /// Terms in increasing degree-lex order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Word, &C)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, w: &Word) -> C {
        self.terms.get(w).cloned().unwrap_or_else(C::zero)
    }

    /// Largest word and its coefficient.
    pub fn leading(&self) -> Option<(&Word, &C)> {
        self.terms.iter().next_back()
    }

    pub fn degree(&self) -> Option<usize> {
        self.leading().map(|(w, _)| w.len())
    }

    pub fn add(&self, o: &NCPoly<C>) -> NCPoly<C> {
        let mut out = self.clone();
        for (w, c) in &o.terms {
            out.add_term(w.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, o: &NCPoly<C>) -> NCPoly<C> {
        let mut out = self.clone();
        for (w, c) in &o.terms {
            out.add_term(w.clone(), c.neg());
        }
        out
    }

    pub fn neg(&self) -> NCPoly<C> {
        self.map_coeffs(|c| c.neg())
    }

    pub fn scale(&self, s: &C) -> NCPoly<C> {
        let mut out = NCPoly::zero();
        for (w, c) in &self.terms {
            out.add_term(w.clone(), c.mul(s));
        }
        out
    }

    pub fn mul(&self, o: &NCPoly<C>) -> NCPoly<C> {
        let mut out = NCPoly::zero();
        for (w1, c1) in &self.terms {
            for (w2, c2) in &o.terms {
                out.add_term(w1.concat(w2), c1.mul(c2));
            }
        }
        out
    }

    /// `self·o − o·self`.
    pub fn commutator(&self, o: &NCPoly<C>) -> NCPoly<C> {
        self.mul(o).sub(&o.mul(self))
    }

    pub fn map_coeffs<D: Coefficient, F: FnMut(&C) -> D>(&self, mut f: F) -> NCPoly<D> {
        let mut out = NCPoly::zero();
        for (w, c) in &self.terms {
            out.add_term(w.clone(), f(c));
        }
        out
    }

    /// Renames generators through `f` (e.g. into another alphabet).
    pub fn map_gens<F: FnMut(Gen) -> Gen>(&self, mut f: F) -> NCPoly<C> {
        let mut out = NCPoly::zero();
        for (w, c) in &self.terms {
            out.add_term(Word(w.0.iter().map(|&g| f(g)).collect()), c.clone());
        }
        out
    }

    /// Anti-automorphism: reverses words, stars generators, conjugates coefficients.
    pub fn star(&self, alphabet: &Alphabet, conj: &dyn Fn(&C) -> C) -> NCPoly<C> {
        let mut out = NCPoly::zero();
        for (w, c) in &self.terms {
            let rev = Word(w.0.iter().rev().map(|&g| alphabet.star(g)).collect());
            out.add_term(rev, conj(c));
        }
        out
    }

    /// Printed as `c1*w1 + c2*w2 - …` with `fmt_coeff` giving `(negative, magnitude)`.
    pub fn display_with(&self, alphabet: &Alphabet, fmt_coeff: &dyn Fn(&C) -> (bool, String)) -> String {
        if self.is_zero() {
            return String::from("0");
        }
        let mut out = String::new();
        for (i, (w, c)) in self.terms.iter().enumerate() {
            let (neg, mag) = fmt_coeff(c);
            let body = match (mag.is_empty(), w.is_unit()) {
                (true, true) => String::from("1"),
                (true, false) => alphabet.fmt_word(w),
                (false, true) => mag,
                (false, false) => format!("{}*{}", mag, alphabet.fmt_word(w)),
            };
            match (i, neg) {
                (0, false) => out.push_str(&body),
                (0, true) => {
                    out.push('-');
                    out.push_str(&body);
                }
                (_, false) => {
                    out.push_str(" + ");
                    out.push_str(&body);
                }
                (_, true) => {
                    out.push_str(" - ");
                    out.push_str(&body);
                }
            }
        }
        out
    }

    /// Words in increasing degree-lex order.
    pub fn words(&self) -> Vec<Word> {
        self.terms.keys().cloned().collect()
    }
}

impl NCPoly<Scalar> {
    pub fn display(&self, alphabet: &Alphabet) -> String {
        self.display_with(alphabet, &|c: &Scalar| c.fmt_coefficient())
    }
}
