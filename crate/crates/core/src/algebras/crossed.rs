//! The crossed product of the spinor generators `u`, `ū` with the Minkowski algebra:
//! `x₁₂u₃ = T u₁x₂₃` and `x₁₂ū₃ = T′ ū₁x₂₃`, with the `u` left free.

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use crate::coeff::{star, Regime, Scalar};
use crate::intertwiners::{Ops, Variant};
use crate::rewrite::{Alphabet, Gen, Generator, NCPoly, RewriteRule, RewriteSystem, Word};
use crate::tensor::TMap;

use super::minkowski::{x_generators, MinkowskiAlgebra};
use super::AlgebraError;

const U_OFFSET: u16 = 0;
const UB_OFFSET: u16 = 4;
const X_OFFSET: u16 = 8;

/// `u^C_D` (0-based `C`, `D`).
pub fn u_gen(c: usize, d: usize) -> Gen {
    Gen(U_OFFSET + (2 * c + d) as u16)
}

/// `ū^{C̄}_{D̄}`.
pub fn ub_gen(c: usize, d: usize) -> Gen {
    Gen(UB_OFFSET + (2 * c + d) as u16)
}

fn u_generators() -> Vec<Generator> {
    let mut out = Vec::new();
    for (name, partner) in [("u", "ub"), ("ub", "u")] {
        for c in 1..=2 {
            for d in 1..=2 {
                out.push(Generator::new(&format!("{}{}{}", name, c, d), 0, &format!("{}{}{}", partner, c, d)));
            }
        }
    }
    out
}

#[derive(Clone, Debug)]
pub struct CrossedProduct {
    pub regime: Regime,
    pub variant: Variant,
    pub order: [usize; 4],
    pub system: RewriteSystem,
}

impl CrossedProduct {
    /// Cross rules from `T`, `T′` of `o` on top of the Minkowski rules of `mink`.
    pub fn new(o: &Ops<Scalar>, mink: &MinkowskiAlgebra, variant: Variant) -> Result<Self, AlgebraError> {
        let mut gens = u_generators();
        gens.extend(x_generators(mink.order, 0));
        let alphabet = Alphabet::new(gens)?;
        let xg = |i: usize| Gen(X_OFFSET + mink.gen(i).0);
        let mut rules: Vec<RewriteRule> = mink
            .system
            .rules()
            .iter()
            .map(|r| RewriteRule {
                lhs: [Gen(r.lhs[0].0 + X_OFFSET), Gen(r.lhs[1].0 + X_OFFSET)],
                rhs: r.rhs.map_gens(|g| Gen(g.0 + X_OFFSET)),
            })
            .collect();
        for (m, gen) in [(&o.t[variant.index()], u_gen as fn(usize, usize) -> Gen), (&o.tp[variant.index()], ub_gen)] {
            for i in 0..4 {
                for c in 0..2 {
                    for d in 0..2 {
                        rules.push(RewriteRule { lhs: [xg(i), gen(c, d)], rhs: cross_rhs(m, i, c, d, gen, &xg) });
                    }
                }
            }
        }
        let system = RewriteSystem::new(alphabet, rules, mink.regime)?;
        Ok(CrossedProduct { regime: mink.regime, variant, order: mink.order, system })
    }

    pub fn alphabet(&self) -> &Alphabet {
        self.system.alphabet()
    }

    /// `x^{AB̄}` for spinor-pair index `i`.
    pub fn x_gen(&self, i: usize) -> Gen {
        Gen(X_OFFSET + self.order.iter().position(|&j| j == i).expect("x index") as u16)
    }

    pub fn is_x(&self, g: Gen) -> bool {
        g.0 >= X_OFFSET
    }

    /// Moves every `x` to the right of every `u`, `ū` and orders the `x` part.
    pub fn reduce(&self, p: &NCPoly) -> NCPoly {
        self.system.normal_form(p)
    }

    pub fn star(&self, p: &NCPoly) -> NCPoly {
        let r = self.regime;
        p.star(self.alphabet(), &|c: &Scalar| star(c, r))
    }

    /// `true` when the word is a `u`/`ū` word followed by a normal `x` word.
    pub fn is_u_then_x(&self, w: &Word) -> bool {
        let split = w.0.iter().position(|&g| self.is_x(g)).unwrap_or(w.len());
        w.0[split..].iter().all(|&g| self.is_x(g)) && self.system.is_normal(w)
    }

    /// For every `u·x` and `ū·x`, `reduce(star(reduce(star(p)))) − p`; all vanish when
    /// `*₁₂ = s(*⊗*)τ` squares to the identity.
    pub fn star_involution_residuals(&self) -> Vec<(String, NCPoly)> {
        let mut out = Vec::new();
        for i in 0..4 {
            for c in 0..2 {
                for d in 0..2 {
                    for g in [u_gen(c, d), ub_gen(c, d)] {
                        let p = NCPoly::word(Word(vec![g, self.x_gen(i)]));
                        let once = self.reduce(&self.star(&p));
                        let twice = self.reduce(&self.star(&once));
                        out.push((self.alphabet().fmt_word(&Word(vec![g, self.x_gen(i)])), twice.sub(&p)));
                    }
                }
            }
        }
        out
    }
}

/// `x^{i}·g^C_D → Σ m^{(i,C)}_{(E,K,L̄)} g^E_D x^{KL̄}`.
fn cross_rhs(m: &TMap, i: usize, c: usize, d: usize, gen: fn(usize, usize) -> Gen, xg: &dyn Fn(usize) -> Gen) -> NCPoly {
    let row = 2 * i + c;
    NCPoly::from_terms((0..8).map(|col| (m.get(row, col).clone(), Word(vec![gen(col >> 2, d), xg(col & 3)]))))
}

pub fn crossed_product(regime: Regime, variant: Variant) -> Result<CrossedProduct, AlgebraError> {
    let mink = super::minkowski_system(regime, super::Source::Derived)?;
    CrossedProduct::new(&Ops::build(regime), &mink, variant)
}
