use alloc::collections::{BTreeMap, BTreeSet};
use alloc::vec;
use alloc::vec::Vec;

use crate::coeff::{Regime, Scalar};
use crate::tensor::{rref, Coefficient};

use super::{Alphabet, Gen, NCPoly, RewriteError, Word};

/// `lhs → rhs` with `lhs` a word of length 2 and every word of `rhs` smaller than `lhs`.
#[derive(Clone, Debug, PartialEq)]
pub struct RewriteRule<C = Scalar> {
    pub lhs: [Gen; 2],
    pub rhs: NCPoly<C>,
}

impl<C: Coefficient> RewriteRule<C> {
    pub fn lhs_word(&self) -> Word {
        Word(self.lhs.to_vec())
    }

    /// The rule as the relation `lhs − rhs`.
    pub fn relation(&self) -> NCPoly<C> {
        NCPoly::word(self.lhs_word()).sub(&self.rhs)
    }
}

/// A word `u·v·w` on which two rules overlap, with the difference of the two reductions.
#[derive(Clone, Debug, PartialEq)]
pub struct Obstruction<C = Scalar> {
    pub word: Word,
    pub diff: NCPoly<C>,
}

#[derive(Clone, Debug)]
pub struct RewriteSystem<C = Scalar> {
    alphabet: Alphabet,
    rules: Vec<RewriteRule<C>>,
    by_lhs: BTreeMap<[Gen; 2], usize>,
    regime: Regime,
}

impl<C: Coefficient> RewriteSystem<C> {
    pub fn new(alphabet: Alphabet, rules: Vec<RewriteRule<C>>, regime: Regime) -> Result<Self, RewriteError> {
        let mut by_lhs = BTreeMap::new();
        for (i, r) in rules.iter().enumerate() {
            let lw = r.lhs_word();
            if by_lhs.insert(r.lhs, i).is_some() {
                return Err(RewriteError::DuplicateLeading(alphabet.fmt_word(&lw)));
            }
            if r.rhs.terms().any(|(w, _)| *w >= lw) {
                return Err(RewriteError::NonDecreasing(alphabet.fmt_word(&lw)));
            }
        }
        Ok(RewriteSystem { alphabet, rules, by_lhs, regime })
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    pub fn rules(&self) -> &[RewriteRule<C>] {
        &self.rules
    }

    pub fn regime(&self) -> Regime {
        self.regime
    }

    pub fn rule_for(&self, a: Gen, b: Gen) -> Option<&RewriteRule<C>> {
        self.by_lhs.get(&[a, b]).map(|&i| &self.rules[i])
    }

    /// Same rules with coefficients mapped (e.g. sampled numerically).
    pub fn map_coeffs<D: Coefficient, F: FnMut(&C) -> D>(&self, mut f: F) -> RewriteSystem<D> {
        let rules = self
            .rules
            .iter()
            .map(|r| RewriteRule { lhs: r.lhs, rhs: r.rhs.map_coeffs(&mut f) })
            .collect();
        RewriteSystem { alphabet: self.alphabet.clone(), rules, by_lhs: self.by_lhs.clone(), regime: self.regime }
    }

    /// Leftmost reducible position of `w` and its rule.
    fn leftmost(&self, w: &Word) -> Option<(usize, &RewriteRule<C>)> {
        w.0.windows(2).enumerate().find_map(|(i, p)| self.rule_for(p[0], p[1]).map(|r| (i, r)))
    }

    /// Applies `rule` at position `at` of `w`.
    fn apply_at(w: &Word, at: usize, rule: &RewriteRule<C>) -> NCPoly<C> {
        let mut out = NCPoly::zero();
        for (m, c) in rule.rhs.terms() {
            let nw = w.splice(at, 2, m);
            debug_assert!(nw < *w, "rewrite step must decrease the word");
            out.add_term(nw, c.clone());
        }
        out
    }

    /// Normal form under leftmost-first reduction.
    pub fn normal_form(&self, p: &NCPoly<C>) -> NCPoly<C> {
        // Largest word first: every step produces strictly smaller words, so each word is
        // settled once all larger words have been rewritten.
        let mut pending: BTreeMap<Word, C> = p.terms().map(|(w, c)| (w.clone(), c.clone())).collect();
        let mut out = NCPoly::zero();
        while let Some((w, c)) = pending.pop_last() {
            if c.is_zero() {
                continue;
            }
            match self.leftmost(&w) {
                None => out.add_term(w, c),
                Some((at, rule)) => {
                    for (m, d) in rule.rhs.terms() {
                        let nw = w.splice(at, 2, m);
                        let add = c.mul(d);
                        match pending.get_mut(&nw) {
                            Some(x) => *x = x.add(&add),
                            None => {
                                pending.insert(nw, add);
                            }
                        }
                    }
                }
            }
        }
        out
    }

    /// One rewrite step at position `at` of `w`, when a rule applies there.
    pub fn rewrite_at(&self, w: &Word, at: usize) -> Option<NCPoly<C>> {
        let pair = w.0.get(at..at + 2)?;
        self.rule_for(pair[0], pair[1]).map(|r| Self::apply_at(w, at, r))
    }

    pub fn is_normal(&self, w: &Word) -> bool {
        self.leftmost(w).is_none()
    }

    pub fn star_poly(&self, p: &NCPoly<C>, conj: &dyn Fn(&C) -> C) -> NCPoly<C> {
        p.star(&self.alphabet, conj)
    }

    /// Overlap ambiguities `a·b·c` with rules on `a·b` and `b·c`, and their nonzero differences.
    pub fn check_confluence(&self) -> Vec<Obstruction<C>> {
        self.overlaps()
            .into_iter()
            .filter_map(|w| {
                let diff = self.overlap_difference(&w);
                if diff.is_zero() {
                    None
                } else {
                    Some(Obstruction { word: w, diff })
                }
            })
            .collect()
    }

    /// All overlap words, in increasing order.
    pub fn overlaps(&self) -> Vec<Word> {
        let mut out = BTreeSet::new();
        for r1 in &self.rules {
            for r2 in &self.rules {
                if r1.lhs[1] == r2.lhs[0] {
                    out.insert(Word(vec![r1.lhs[0], r1.lhs[1], r2.lhs[1]]));
                }
            }
        }
        out.into_iter().collect()
    }

    /// Normal form after reducing `a·b` first minus normal form after reducing `b·c` first.
    pub fn overlap_difference(&self, w: &Word) -> NCPoly<C> {
        let a = self.normal_form(&self.rewrite_at(w, 0).expect("overlap word"));
        let b = self.normal_form(&self.rewrite_at(w, 1).expect("overlap word"));
        a.sub(&b)
    }

    /// Number of normal words of each degree `0..=max_degree`.
    pub fn normal_word_counts(&self, max_degree: usize) -> Vec<u64> {
        let n = self.alphabet.len();
        let mut counts = vec![1u64];
        if max_degree == 0 {
            return counts;
        }
        // ending[g] = number of normal words of the current degree ending in g.
        let mut ending = vec![1u64; n];
        counts.push(n as u64);
        for _ in 2..=max_degree {
            let mut next = vec![0u64; n];
            for (b, slot) in next.iter_mut().enumerate() {
                for (a, &e) in ending.iter().enumerate() {
                    if self.rule_for(Gen(a as u16), Gen(b as u16)).is_none() {
                        *slot += e;
                    }
                }
            }
            counts.push(next.iter().sum());
            ending = next;
        }
        counts
    }
}

/// Orients a set of relations `r = 0` into rules by exact elimination with columns in
/// decreasing word order: each surviving row's leading word becomes a rule's left side.
/// Linearly dependent relations are dropped.
pub fn orient(relations: &[NCPoly<Scalar>], alphabet: &Alphabet, regime: Regime) -> Result<RewriteSystem<Scalar>, RewriteError> {
    let mut cols: BTreeSet<Word> = BTreeSet::new();
    for r in relations {
        cols.extend(r.words());
    }
    let cols: Vec<Word> = cols.into_iter().rev().collect();
    let rows: Vec<Vec<Scalar>> = relations.iter().map(|r| cols.iter().map(|w| r.coeff(w)).collect()).collect();
    let e = rref(rows);
    let mut rules = Vec::new();
    for (row, &p) in e.rows.iter().zip(&e.pivots) {
        let lhs = &cols[p];
        if lhs.len() != 2 {
            return Err(RewriteError::NotOrientable(alphabet.fmt_word(lhs)));
        }
        let rhs = NCPoly::from_terms(
            row.iter().enumerate().filter(|&(j, _)| j != p).map(|(j, c)| (-c, cols[j].clone())),
        );
        rules.push(RewriteRule { lhs: [lhs.0[0], lhs.0[1]], rhs });
    }
    RewriteSystem::new(alphabet.clone(), rules, regime)
}
