//! The braided tensor square: `x`, a second copy `x′` with `x′x = σxx′`, and free
//! symbols `h^j_k` with `x₁h₂ = Ŵh₁x₂` and `x′h = hx′`. Hosts the scripted check that
//! `Δx = x + hx′` preserves `P⁻x₁x₂ = 0`.

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use crate::coeff::Regime;
use crate::rewrite::{Alphabet, Gen, Generator, NCPoly, RewriteRule, RewriteSystem, Word};
use crate::tensor::{Coefficient, TMap};

use super::minkowski::{x_generators, X_STAR};
use super::AlgebraError;

const H_OFFSET: u16 = 0;
const X_OFFSET: u16 = 16;
const XP_OFFSET: u16 = 20;

const PAIR: [&str; 4] = ["11", "12", "21", "22"];

/// `h^j_k` for spinor-pair indices `j`, `k`.
pub fn h_gen(j: usize, k: usize) -> Gen {
    Gen(H_OFFSET + (4 * j + k) as u16)
}

fn h_generators() -> Vec<Generator> {
    let mut out = Vec::new();
    for j in 0..4 {
        for k in 0..4 {
            // τh̄τ = h: (h^{AB̄}_{CD̄})* = h^{BĀ}_{DC̄}.
            let star = format!("h{}_{}", PAIR[X_STAR[j]], PAIR[X_STAR[k]]);
            out.push(Generator::new(&format!("h{}_{}", PAIR[j], PAIR[k]), 0, &star));
        }
    }
    out
}

#[derive(Clone, Debug)]
pub struct BraidedSquare<C = crate::coeff::Scalar> {
    pub regime: Regime,
    pub sigma: C,
    pub order: [usize; 4],
    /// Only the moves `xh → Ŵhx`, `x′h → hx′`, `x′x → σxx′`.
    pub moves: RewriteSystem<C>,
    /// The moves plus both copies' Minkowski rules.
    pub full: RewriteSystem<C>,
}

impl<C: Coefficient> BraidedSquare<C> {
    /// `mink` holds the Minkowski rules over an `x` alphabet in the given `order`.
    pub fn new(what: &TMap<C>, mink: &RewriteSystem<C>, order: [usize; 4], sigma: C, regime: Regime) -> Result<Self, AlgebraError> {
        let mut gens = h_generators();
        gens.extend(x_generators(order, 0));
        gens.extend(x_generators(order, 1));
        let alphabet = Alphabet::new(gens)?;
        let pos = |i: usize| order.iter().position(|&j| j == i).expect("x index") as u16;
        let x = |i: usize| Gen(X_OFFSET + pos(i));
        let xp = |i: usize| Gen(XP_OFFSET + pos(i));

        let mut moves = Vec::new();
        for j in 0..4 {
            for k in 0..4 {
                for m in 0..4 {
                    // x^j h^k_m = Σ Ŵ^{jk}_{ab} h^a_m x^b
                    let rhs = NCPoly::from_terms(
                        (0..16).map(|ab| (what.get(4 * j + k, ab).clone(), Word(vec![h_gen(ab >> 2, m), x(ab & 3)]))),
                    );
                    moves.push(RewriteRule { lhs: [x(j), h_gen(k, m)], rhs });
                    moves.push(RewriteRule { lhs: [xp(j), h_gen(k, m)], rhs: NCPoly::word(Word(vec![h_gen(k, m), xp(j)])) });
                }
                moves.push(RewriteRule { lhs: [xp(j), x(k)], rhs: NCPoly::term(sigma.clone(), Word(vec![x(k), xp(j)])) });
            }
        }
        let mut full = moves.clone();
        for off in [X_OFFSET, XP_OFFSET] {
            full.extend(mink.rules().iter().map(|r| RewriteRule {
                lhs: [Gen(r.lhs[0].0 + off), Gen(r.lhs[1].0 + off)],
                rhs: r.rhs.map_gens(|g| Gen(g.0 + off)),
            }));
        }
        Ok(BraidedSquare {
            regime,
            sigma,
            order,
            moves: RewriteSystem::new(alphabet.clone(), moves, regime)?,
            full: RewriteSystem::new(alphabet, full, regime)?,
        })
    }

    pub fn alphabet(&self) -> &Alphabet {
        self.full.alphabet()
    }

    pub fn x_gen(&self, i: usize) -> Gen {
        Gen(X_OFFSET + self.order.iter().position(|&j| j == i).expect("x index") as u16)
    }

    pub fn xp_gen(&self, i: usize) -> Gen {
        Gen(XP_OFFSET + self.order.iter().position(|&j| j == i).expect("x index") as u16)
    }

    /// The rules among `x`, `x′` only (Minkowski on both copies and the braiding).
    pub fn xx_system(&self) -> Result<RewriteSystem<C>, AlgebraError> {
        let mut gens: Vec<Generator> = x_generators(self.order, 0);
        gens.extend(x_generators(self.order, 1));
        let rules = self
            .full
            .rules()
            .iter()
            .filter(|r| r.lhs.iter().all(|g| g.0 >= X_OFFSET))
            .map(|r| RewriteRule {
                lhs: [Gen(r.lhs[0].0 - X_OFFSET), Gen(r.lhs[1].0 - X_OFFSET)],
                rhs: r.rhs.map_gens(|g| Gen(g.0 - X_OFFSET)),
            })
            .collect();
        Ok(RewriteSystem::new(Alphabet::new(gens)?, rules, self.regime)?)
    }

    /// `Δx^j = x^j + Σ_l h^j_l x′^l`.
    pub fn delta(&self, j: usize) -> NCPoly<C> {
        let mut p = NCPoly::gen(self.x_gen(j));
        for l in 0..4 {
            p.add_term(Word(vec![h_gen(j, l), self.xp_gen(l)]), C::one());
        }
        p
    }

    fn h_degree(&self, w: &Word) -> usize {
        w.0.iter().filter(|g| g.0 < X_OFFSET).count()
    }
}

/// Outcome of the scripted coproduct check.
#[derive(Clone, Debug)]
pub struct DeltaScript<C> {
    /// Human-readable log of every step, for audit.
    pub steps: Vec<String>,
    /// Per row of `P⁻`, whatever survives the final normal form.
    pub residuals: Vec<NCPoly<C>>,
    /// Rows whose quadratic-`h` part did not have the shape `P⁻h₁h₂` required by the substitution.
    pub substitution_misses: Vec<usize>,
}

impl<C> DeltaScript<C> {
    pub fn passed(&self, negligible: &dyn Fn(&NCPoly<C>) -> bool) -> bool {
        self.substitution_misses.is_empty() && self.residuals.iter().all(negligible)
    }
}

/// Reduces `P⁻Δx₁Δx₂` row by row:
/// 1. expand and move every `h` left with the moves only;
/// 2. replace the quadratic-`h` part `(P⁻h₁h₂)x′₁x′₂` by `(h₁h₂P⁻)x′₁x′₂`;
/// 3. normal-form the remainder with the Minkowski rules of both copies.
pub fn delta_script<C: Coefficient>(
    sq: &BraidedSquare<C>,
    pminus: &TMap<C>,
    fmt: &dyn Fn(&NCPoly<C>) -> String,
    same: &dyn Fn(&NCPoly<C>, &NCPoly<C>) -> bool,
) -> DeltaScript<C> {
    let mut steps = vec![
        String::from("expand P- (x + h x')_1 (x + h x')_2 per row of P-"),
        String::from("move h left: x^j h^k_m -> What^{jk}_{ab} h^a_m x^b ; x'h -> hx' ; x'x -> sigma x x'"),
    ];
    let dx: Vec<NCPoly<C>> = (0..4).map(|j| sq.delta(j)).collect();
    let mut residuals = Vec::new();
    let mut misses = Vec::new();
    for r in 0..16 {
        if (0..16).all(|c| pminus.get(r, c).is_zero()) {
            continue;
        }
        let mut expanded = NCPoly::zero();
        for jk in 0..16 {
            let c = pminus.get(r, jk);
            if !c.is_zero() {
                expanded = expanded.add(&dx[jk >> 2].mul(&dx[jk & 3]).scale(c));
            }
        }
        let moved = sq.moves.normal_form(&expanded);
        let mut parts = [NCPoly::zero(), NCPoly::zero(), NCPoly::zero()];
        for (w, c) in moved.terms() {
            parts[sq.h_degree(w)].add_term(w.clone(), c.clone());
        }
        // (P⁻h₁h₂)^r_{lm} x′^l x′^m, the shape the intertwiner property acts on.
        let mut expected = NCPoly::zero();
        let mut swapped = NCPoly::zero();
        for l in 0..4 {
            for m in 0..4 {
                let tail = [sq.xp_gen(l), sq.xp_gen(m)];
                for jk in 0..16 {
                    let c = pminus.get(r, jk);
                    if !c.is_zero() {
                        expected.add_term(Word(vec![h_gen(jk >> 2, l), h_gen(jk & 3, m), tail[0], tail[1]]), c.clone());
                    }
                    let c = pminus.get(jk, 4 * l + m);
                    if !c.is_zero() {
                        swapped.add_term(Word(vec![h_gen(r >> 2, jk >> 2), h_gen(r & 3, jk & 3), tail[0], tail[1]]), c.clone());
                    }
                }
            }
        }
        let hh = if same(&parts[2], &expected) {
            swapped
        } else {
            misses.push(r);
            parts[2].clone()
        };
        let rest = parts[0].add(&parts[1]).add(&hh);
        let res = sq.full.normal_form(&rest);
        steps.push(format!(
            "row {}: h-degree 0 -> {}; h-degree 1 -> {}; h-degree 2 -> {}",
            r,
            fmt(&sq.full.normal_form(&parts[0])),
            fmt(&sq.full.normal_form(&parts[1])),
            fmt(&sq.full.normal_form(&hh)),
        ));
        residuals.push(res);
    }
    steps.push(String::from("substitute P- h_1 h_2 => h_1 h_2 P- on the quadratic-h part, then Minkowski rules on x and x'"));
    DeltaScript { steps, residuals, substitution_misses: misses }
}
