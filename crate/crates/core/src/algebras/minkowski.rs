//! Quadratic relations of the quantum Minkowski algebra: derived from `P⁻` and the
//! published tables, span-checked against each other and oriented per regime.

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use crate::coeff::{specialize, star, Regime, Scalar};
use crate::intertwiners::{e_functional, Ops};
use crate::rewrite::{orient, Alphabet, Gen, Generator, NCPoly, RewriteSystem, Word};
use crate::tensor::{same_span, Signature, TMap};

use super::AlgebraError;

/// Names of `x^{11̄}, x^{12̄}, x^{21̄}, x^{22̄}`; the position is the spinor-pair index.
pub const X_NAMES: [&str; 4] = ["alpha", "beta", "gamma", "delta"];

/// `(x^{AB̄})* = x^{BĀ}` on spinor-pair indices.
pub const X_STAR: [usize; 4] = [0, 2, 1, 3];

pub const ALPHA: usize = 0;
pub const BETA: usize = 1;
pub const GAMMA: usize = 2;
pub const DELTA: usize = 3;

/// Spinor-pair indices listed in increasing generator order.
pub fn x_order(regime: Regime) -> [usize; 4] {
    match regime {
        Regime::Generic | Regime::UnitCircle => [ALPHA, BETA, GAMMA, DELTA],
        // The swap α↔β, γ↔δ, which is also the order β<α<δ<γ used in case 2.
        Regime::RealQ | Regime::Case2(_) => [BETA, ALPHA, DELTA, GAMMA],
    }
}

/// The four `x` generators in the given order, at prime level `prime`.
pub fn x_generators(order: [usize; 4], prime: u8) -> Vec<Generator> {
    let mut star_name = String::from(X_NAMES[0]);
    order
        .iter()
        .map(|&i| {
            star_name.clear();
            star_name.push_str(X_NAMES[X_STAR[i]]);
            for _ in 0..prime {
                star_name.push('\'');
            }
            Generator::new(X_NAMES[i], prime, &star_name)
        })
        .collect()
}

pub fn x_alphabet(order: [usize; 4]) -> Alphabet {
    Alphabet::new(x_generators(order, 0)).expect("x generators are star-closed")
}

/// `α<β<γ<δ`, in which `Gen(i)` is spinor-pair index `i`.
pub fn canonical_alphabet() -> Alphabet {
    x_alphabet([ALPHA, BETA, GAMMA, DELTA])
}

fn w2(a: usize, b: usize) -> Word {
    Word(vec![Gen(a as u16), Gen(b as u16)])
}

/// `Σ f_{4a+b} x^a x^b` for a functional `f` on `(U,B,U,B)`, over the canonical alphabet.
pub fn quadratic(f: &[Scalar]) -> NCPoly {
    NCPoly::from_terms(f.iter().enumerate().map(|(i, c)| (c.clone(), w2(i >> 2, i & 3))))
}

/// Coefficient vector of a homogeneous quadratic over the canonical alphabet.
pub fn coefficients(p: &NCPoly) -> Vec<Scalar> {
    (0..16).map(|i| p.coeff(&w2(i >> 2, i & 3))).collect()
}

/// Moves a canonical-alphabet polynomial into an alphabet ordered by `order`.
pub fn relabel(p: &NCPoly, order: [usize; 4]) -> NCPoly {
    p.map_gens(|g| Gen(order.iter().position(|&i| i == g.0 as usize).expect("x generator") as u16))
}

/// Inverse of [`relabel`].
pub fn to_canonical(p: &NCPoly, order: [usize; 4]) -> NCPoly {
    p.map_gens(|g| Gen(order[g.0 as usize] as u16))
}

fn sig(code: &str) -> Signature {
    Signature::from_code(code).expect("valid signature")
}

/// The six functionals `rowspace(P′)⊗rowspace(Q)` and `rowspace(P)⊗rowspace(Q′)`, each
/// composed with `X^{-1}₂₃`, read off as relations on `x₁₂x₃₄`.
pub fn derived_relations(o: &Ops<Scalar>) -> Vec<NCPoly> {
    let xi23 = o.xi.place(&[1, 2], &sig("UBUB")).expect("X^-1 on (B,U)");
    let mut out = Vec::new();
    for (a, b) in [(&o.pp, &o.q), (&o.p, &o.qp)] {
        for f in a.annihilator_basis() {
            for g in b.annihilator_basis() {
                let fg = f.kron(&g).compose(&xi23).expect("functional on (U,U,B,B)");
                out.push(quadratic(fg.entries()));
            }
        }
    }
    out
}

/// The rows of `P⁻` as relations.
pub fn pminus_relations(o: &Ops<Scalar>) -> Vec<NCPoly> {
    o.pminus.annihilator_basis().iter().map(|f| quadratic(f.entries())).collect()
}

/// A published relation table, over the canonical alphabet.
#[derive(Clone, Debug)]
pub struct RelationTable {
    pub name: &'static str,
    pub relations: Vec<NCPoly>,
}

fn rel(terms: &[(Scalar, usize, usize)]) -> NCPoly {
    NCPoly::from_terms(terms.iter().map(|(c, a, b)| (c.clone(), w2(*a, *b))))
}

/// The six functionals as printed, with general `ε`.
fn table_ogo(eps: i64) -> Vec<NCPoly> {
    let (q, qb, t) = (Scalar::q(), Scalar::qb(), Scalar::t());
    let e = Scalar::from_int(eps);
    let qq = &q * &qb;
    let (a, b, g, d) = (ALPHA, BETA, GAMMA, DELTA);
    let m = |x: &Scalar| -x;
    vec![
        rel(&[(qb.clone(), a, b), (m(&(&qb * &e)), b, d), (m(&t), b, a)]),
        rel(&[(&qb * &t, g, d), (Scalar::from_int(-1), d, g)]),
        rel(&[(&qq * &t, a, d), (qb.clone(), g, b), (m(&(&qb * &e)), d, d), (m(&q), b, g), (m(&t), d, a)]),
        rel(&[(q.clone(), g, a), (m(&(&q * &e)), d, g), (m(&t), a, g)]),
        rel(&[(&q * &t, d, b), (Scalar::from_int(-1), b, d)]),
        rel(&[(&qq * &t, d, a), (q.clone(), g, b), (m(&(&q * &e)), d, d), (m(&qb), b, g), (m(&t), a, d)]),
    ]
}

/// The first four case-1 commutation relations.
fn rel1_4() -> Vec<NCPoly> {
    let (q, qb, t) = (Scalar::q(), Scalar::qb(), Scalar::t());
    let (qi, ti) = (q.inv().expect("unit"), t.inv().expect("unit"));
    let one = Scalar::one();
    let (a, b, g, d) = (ALPHA, BETA, GAMMA, DELTA);
    vec![
        rel(&[(one.clone(), b, a), (-(&qb * &ti), a, b)]),
        rel(&[(one.clone(), g, a), (-(&qi * &t), a, g)]),
        rel(&[(one.clone(), d, g), (-(&qb * &t), g, d)]),
        rel(&[(one, d, b), (-(&qi * &ti), b, d)]),
    ]
}

fn table_rel() -> Vec<NCPoly> {
    let (q, qb, t) = (Scalar::q(), Scalar::qb(), Scalar::t());
    let qq = &q * &qb;
    let (a, b, g, d) = (ALPHA, BETA, GAMMA, DELTA);
    let mut out = rel1_4();
    // |q|²tδα + qγβ = tαδ + q̄βγ ;  −tδα + q̄γβ = −|q|²tαδ + qβγ
    out.push(rel(&[(&qq * &t, d, a), (q.clone(), g, b), (-&t, a, d), (-&qb, b, g)]));
    out.push(rel(&[(-&t, d, a), (qb.clone(), g, b), (&qq * &t, a, d), (-&q, b, g)]));
    out
}

fn table_re() -> Vec<NCPoly> {
    let (q, qb, t) = (Scalar::q(), Scalar::qb(), Scalar::t());
    let one = Scalar::one();
    let (q2, qb2) = (q.pow(2), qb.pow(2));
    let (a, b, g, d) = (ALPHA, BETA, GAMMA, DELTA);
    let qbq = &(&qb2 + &one) * &q;
    let qqb = &(&q2 + &one) * &qb;
    let mut out = rel1_4();
    out.push(rel(&[(&qbq * &t, d, a), (-(&qqb * &t), a, d), (-(&qb2 - &q2), b, g)]));
    out.push(rel(&[(qbq, g, b), (-(&t * &(&one - &(&q * &qb).pow(2))), a, d), (-qqb, b, g)]));
    out
}

/// The unit-circle table: `αβ = tqβα`, `αγ = t⁻¹qγα`, `βδ = tqδβ`, `γδ = t⁻¹qδγ`,
/// `βγ = γβ`, `[α,δ] = t⁻¹(q − q⁻¹)βγ`.
fn table_unit_circle() -> Vec<NCPoly> {
    let (q, t) = (Scalar::q(), Scalar::t());
    let (qi, ti) = (q.inv().expect("unit"), t.inv().expect("unit"));
    let one = Scalar::one();
    let (a, b, g, d) = (ALPHA, BETA, GAMMA, DELTA);
    vec![
        rel(&[(one.clone(), a, b), (-(&t * &q), b, a)]),
        rel(&[(one.clone(), a, g), (-(&ti * &q), g, a)]),
        rel(&[(one.clone(), b, d), (-(&t * &q), d, b)]),
        rel(&[(one.clone(), g, d), (-(&ti * &q), d, g)]),
        rel(&[(one.clone(), b, g), (-&one, g, b)]),
        rel(&[(one.clone(), a, d), (-&one, d, a), (-(&ti * &(&q - &qi)), b, g)]),
    ]
}

/// `qb = q`: first four case-1 relations with `δα = αδ`, `[β,γ] = t(q − q⁻¹)αδ`.
fn table_real_q() -> Vec<NCPoly> {
    let (q, t) = (Scalar::q(), Scalar::t());
    let qi = q.inv().expect("unit");
    let one = Scalar::one();
    let (a, b, g, d) = (ALPHA, BETA, GAMMA, DELTA);
    let mut out = rel1_4();
    out.push(rel(&[(one.clone(), d, a), (-&one, a, d)]));
    out.push(rel(&[(one.clone(), b, g), (-&one, g, b), (-(&t * &(&q - &qi)), a, d)]));
    out
}

/// `M_z`: `αγ = zγα`, `γδ = zδγ`, `[α,δ] = (z − z̄)γ*γ` with `z = q/t`, `β := γ*`, closed
/// under star, plus `γ*γ = γγ*`.
pub fn table_mz(regime: Regime) -> Vec<NCPoly> {
    let z = &Scalar::q() * &Scalar::t().inv().expect("unit");
    let zb = star(&specialize(&z, regime), regime);
    let one = Scalar::one();
    let (a, b, g, d) = (ALPHA, BETA, GAMMA, DELTA);
    let three = [
        rel(&[(one.clone(), a, g), (-&z, g, a)]),
        rel(&[(one.clone(), g, d), (-&z, d, g)]),
        rel(&[(one.clone(), a, d), (-&one, d, a), (-(&z - &zb), b, g)]),
    ];
    let al = canonical_alphabet();
    let mut out: Vec<NCPoly> = three.iter().map(|p| p.map_coeffs(|c| specialize(c, regime))).collect();
    for p in out.clone() {
        out.push(p.star(&al, &|c: &Scalar| star(c, regime)));
    }
    out.push(rel(&[(one.clone(), b, g), (-&one, g, b)]));
    out
}

/// Published tables that apply in `regime`, specialised to it.
pub fn published_tables(regime: Regime) -> Vec<RelationTable> {
    let mut out = vec![RelationTable { name: "six-functionals", relations: table_ogo(regime.epsilon()) }];
    if regime.epsilon() == 0 {
        out.push(RelationTable { name: "case1-commutation", relations: table_rel() });
        out.push(RelationTable { name: "case1-recombined", relations: table_re() });
    }
    match regime {
        Regime::UnitCircle => out.push(RelationTable { name: "unit-circle", relations: table_unit_circle() }),
        Regime::RealQ => out.push(RelationTable { name: "real-q", relations: table_real_q() }),
        _ => {}
    }
    for t in &mut out {
        t.relations = t.relations.iter().map(|p| p.map_coeffs(|c| specialize(c, regime))).collect();
    }
    out
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Source {
    Derived,
    Published,
}

impl Source {
    pub fn name(self) -> &'static str {
        match self {
            Source::Derived => "derived",
            Source::Published => "published-table",
        }
    }
}

#[derive(Clone, Debug)]
pub struct MinkowskiAlgebra {
    pub regime: Regime,
    pub source: Source,
    /// Generator order as spinor-pair indices.
    pub order: [usize; 4],
    pub system: RewriteSystem,
}

impl MinkowskiAlgebra {
    pub fn alphabet(&self) -> &Alphabet {
        self.system.alphabet()
    }

    /// The generator for spinor-pair index `i`.
    pub fn gen(&self, i: usize) -> Gen {
        Gen(self.order.iter().position(|&j| j == i).expect("x index") as u16)
    }

    pub fn normal_form(&self, p: &NCPoly) -> NCPoly {
        self.system.normal_form(p)
    }

    pub fn star(&self, p: &NCPoly) -> NCPoly {
        let r = self.regime;
        self.system.star_poly(p, &|c: &Scalar| star(c, r))
    }

    /// A polynomial given over the canonical alphabet, moved into this algebra's alphabet.
    pub fn from_canonical(&self, p: &NCPoly) -> NCPoly {
        relabel(p, self.order)
    }
}

fn span_of(rels: &[NCPoly]) -> Vec<Vec<Scalar>> {
    rels.iter().map(coefficients).collect()
}

/// Checks derived relations against `P⁻` rows and every published table for the regime.
pub fn relation_integrity(regime: Regime) -> Vec<(String, bool)> {
    let o = Ops::build(regime);
    let derived = span_of(&derived_relations(&o));
    let mut out = vec![(String::from("pminus-rows"), same_span(&derived, &span_of(&pminus_relations(&o))))];
    for t in published_tables(regime) {
        out.push((String::from(t.name), same_span(&derived, &span_of(&t.relations))));
    }
    if regime == Regime::UnitCircle {
        out.push((String::from("mz-presentation"), same_span(&derived, &span_of(&table_mz(regime)))));
    }
    out
}

/// Builds the algebra from the chosen source after checking that every source agrees.
pub fn minkowski_system(regime: Regime, source: Source) -> Result<MinkowskiAlgebra, AlgebraError> {
    if let Some((what, _)) = relation_integrity(regime).into_iter().find(|(_, ok)| !ok) {
        return Err(AlgebraError::SpanMismatch { regime, what });
    }
    let rels = match source {
        Source::Derived => derived_relations(&Ops::build(regime)),
        Source::Published => published_tables(regime).pop().expect("at least one table").relations,
    };
    from_relations(&rels, regime, x_order(regime))
}

/// Orients canonical-alphabet relations in the given order.
pub fn from_relations(rels: &[NCPoly], regime: Regime, order: [usize; 4]) -> Result<MinkowskiAlgebra, AlgebraError> {
    let moved: Vec<NCPoly> = rels.iter().map(|p| relabel(p, order)).collect();
    let system = orient(&moved, &x_alphabet(order), regime)?;
    if system.rules().len() != 6 {
        return Err(AlgebraError::SpanMismatch { regime, what: format!("{} independent relations, expected 6", system.rules().len()) });
    }
    Ok(MinkowskiAlgebra { regime, source: Source::Derived, order, system })
}

/// The classical algebra: generic operators at `q = qb = t = 1`, `ε = 0`.
pub fn classical_system() -> Result<MinkowskiAlgebra, AlgebraError> {
    let o = Ops::build_generic(0).substitute(&crate::coeff::Substitution::classical());
    from_relations(&derived_relations(&o), Regime::Generic, x_order(Regime::Generic))
}

/// Normal-form difference `γ(βα)` minus `(γβ)α`, scaled by `q(q̄²+1)`, in the generic regime.
#[derive(Clone, Debug)]
pub struct PbwObstruction {
    pub via_beta_alpha: NCPoly,
    pub via_gamma_beta: NCPoly,
    pub difference: NCPoly,
    /// Coefficient of `ααδ` in `difference`.
    pub aad: Scalar,
    /// Coefficient of `αβγ` in `difference`.
    pub abg: Scalar,
}

pub fn pbw_obstruction_generic() -> Result<PbwObstruction, AlgebraError> {
    let m = minkowski_system(Regime::Generic, Source::Derived)?;
    let (a, b, g, d) = (m.gen(ALPHA), m.gen(BETA), m.gen(GAMMA), m.gen(DELTA));
    let w = Word(vec![g, b, a]);
    let scale = &Scalar::q() * &(&Scalar::qb().pow(2) + &Scalar::one());
    let step = |at| m.system.rewrite_at(&w, at).expect("γβ and βα are rule heads");
    let left = m.normal_form(&step(1)).scale(&scale);
    let right = m.normal_form(&step(0)).scale(&scale);
    let difference = left.sub(&right);
    let aad = difference.coeff(&Word(vec![a, a, d]));
    let abg = difference.coeff(&Word(vec![a, b, g]));
    Ok(PbwObstruction { via_beta_alpha: left, via_gamma_beta: right, difference, aad, abg })
}

/// `E′₁₂(τĒ′)₃₄X^{-1}₂₃` with the unrescaled `X`, as a functional on `(U,B,U,B)`.
/// `spec` carries generic scalars into the field `o` lives in.
pub fn length_functional(o: &Ops<Scalar>, spec: &dyn Fn(&Scalar) -> Scalar) -> TMap {
    let tau_ebar = e_functional().bar_conjugate().reverse_legs().map(spec);
    let xi = o.xi.scale(&spec(&Scalar::t_half_pow(-1)));
    let xi23 = xi.place(&[1, 2], &sig("UBUB")).expect("X^-1 on (B,U)");
    o.ep.kron(&tau_ebar).compose(&xi23).expect("functional on (U,U,B,B)")
}

#[derive(Clone, Debug)]
pub struct MinkowskiLength {
    /// Normal form of the contraction, in the algebra's alphabet.
    pub ell: NCPoly,
    /// Normal form of `αδ/(2z) + δα/(2z̄) − γ*γ`.
    pub displayed: NCPoly,
    /// `ell = c·displayed`, when proportional.
    pub c: Option<Scalar>,
}

pub fn minkowski_length(m: &MinkowskiAlgebra) -> MinkowskiLength {
    let regime = m.regime;
    let o = Ops::build(regime);
    let ell = m.normal_form(&m.from_canonical(&quadratic(length_functional(&o, &|c| specialize(c, regime)).entries())));
    let z = specialize(&(&Scalar::q() * &Scalar::t().inv().expect("unit")), regime);
    let zb = star(&z, regime);
    let half = Scalar::ratio(1, 2);
    let disp = rel(&[
        (&half * &z.inv().expect("unit"), ALPHA, DELTA),
        (&half * &zb.inv().expect("unit"), DELTA, ALPHA),
        // γ*γ = βγ
        (Scalar::from_int(-1), BETA, GAMMA),
    ]);
    let displayed = m.normal_form(&m.from_canonical(&disp));
    let c = proportionality(&ell, &displayed);
    MinkowskiLength { ell, displayed, c }
}

/// `c` with `p = c·r`, if any.
pub fn proportionality(p: &NCPoly, r: &NCPoly) -> Option<Scalar> {
    let (w, rc) = r.leading()?;
    let c = &p.coeff(w) * &rc.inv()?;
    if p.sub(&r.scale(&c)).is_zero() {
        Some(c)
    } else {
        None
    }
}
