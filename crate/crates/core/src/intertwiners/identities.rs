//! The matrix identities, written once over any [`Coefficient`] so the exact suite and the
//! sampled mirror share the same code.

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use crate::coeff::Regime;
use crate::report::{Check, Expect};
use crate::tensor::{Coefficient, Signature, TMap, TensorError};

use super::ops::{Ops, Variant};

type R<T> = Result<T, TensorError>;

fn sig(code: &str) -> Signature {
    Signature::from_code(code).expect("valid signature code")
}

/// A composite built by applying placed operators one after another.
pub struct Path<C> {
    acc: TMap<C>,
}

impl<C: Coefficient> Path<C> {
    pub fn start(dom: &str) -> Self {
        Path { acc: TMap::identity(sig(dom)) }
    }

    /// Applies `op` on the listed legs of the current output.
    pub fn then(self, op: &TMap<C>, legs: &[usize]) -> R<Self> {
        let placed = op.place(legs, self.acc.cod())?;
        Ok(Path { acc: placed.compose(&self.acc)? })
    }

    /// Applies `op` on the contiguous block starting at `start` (any leg counts).
    pub fn then_at(self, op: &TMap<C>, start: usize) -> R<Self> {
        let placed = op.place_at(start, self.acc.cod())?;
        Ok(Path { acc: placed.compose(&self.acc)? })
    }

    pub fn done(self) -> TMap<C> {
        self.acc
    }
}

fn diff<C: Coefficient>(a: Path<C>, b: Path<C>) -> R<TMap<C>> {
    a.done().sub(&b.done())
}

/// `Σ cᵢ·mᵢ`.
pub fn lin<C: Coefficient>(terms: &[(C, &TMap<C>)]) -> R<TMap<C>> {
    let mut it = terms.iter();
    let (c0, m0) = it.next().expect("nonempty combination");
    let mut acc = m0.scale(c0);
    for (c, m) in it {
        acc = acc.add(&m.scale(c))?;
    }
    Ok(acc)
}

fn scalar_map<C: Coefficient>(c: C) -> TMap<C> {
    TMap::from_rows(Signature::empty(), Signature::empty(), vec![c])
}

fn sign_label(plus: bool) -> &'static str {
    if plus {
        "K^+1"
    } else {
        "K^-1"
    }
}

/// The six elementary moves; the three involving `K` cover both signs.
pub fn moves<C: Coefficient>(o: &Ops<C>) -> R<Vec<Check<C>>> {
    let (x, xi, m) = (&o.x, &o.xi, &o.m);
    let mut out = Vec::new();
    let m1 = diff(
        Path::start("UBU").then(x, &[0, 1])?.then(m, &[1, 2])?.then(xi, &[0, 1])?,
        Path::start("UBU").then(xi, &[1, 2])?.then(m, &[0, 1])?.then(x, &[1, 2])?,
    )?;
    out.push(Check::zero("moves.M1", m1));
    let signed = |f: &dyn Fn(&TMap<C>) -> R<TMap<C>>| -> R<Vec<(String, TMap<C>)>> {
        [true, false].iter().map(|&s| Ok((String::from(sign_label(s)), f(o.k_sign(s))?))).collect()
    };
    let m2 = signed(&|k| {
        diff(
            Path::start("BBU").then(k, &[0, 1])?.then(xi, &[1, 2])?.then(xi, &[0, 1])?,
            Path::start("BBU").then(xi, &[1, 2])?.then(xi, &[0, 1])?.then(k, &[1, 2])?,
        )
    })?;
    out.push(Check::multi("moves.M2", Expect::Zero, m2));
    let m3 = signed(&|k| {
        diff(
            Path::start("UBB").then(x, &[0, 1])?.then(x, &[1, 2])?.then(k, &[0, 1])?,
            Path::start("UBB").then(k, &[1, 2])?.then(x, &[0, 1])?.then(x, &[1, 2])?,
        )
    })?;
    out.push(Check::multi("moves.M3", Expect::Zero, m3));
    let m4 = diff(
        Path::start("BUU").then(xi, &[0, 1])?.then(xi, &[1, 2])?.then(m, &[0, 1])?,
        Path::start("BUU").then(m, &[1, 2])?.then(xi, &[0, 1])?.then(xi, &[1, 2])?,
    )?;
    out.push(Check::zero("moves.M4", m4));
    let m5 = diff(
        Path::start("UUB").then(m, &[0, 1])?.then(x, &[1, 2])?.then(x, &[0, 1])?,
        Path::start("UUB").then(x, &[1, 2])?.then(x, &[0, 1])?.then(m, &[1, 2])?,
    )?;
    out.push(Check::zero("moves.M5", m5));
    let m6 = signed(&|k| {
        diff(
            Path::start("BUB").then(xi, &[0, 1])?.then(k, &[1, 2])?.then(x, &[0, 1])?,
            Path::start("BUB").then(x, &[1, 2])?.then(k, &[0, 1])?.then(xi, &[1, 2])?,
        )
    })?;
    out.push(Check::multi("moves.M6", Expect::Zero, m6));
    Ok(out)
}

fn rhat_label(plus: bool, inverse: bool) -> String {
    format!("Rhat{}{}", if plus { "+" } else { "-" }, if inverse { "^-1" } else { "" })
}

/// Braid equation `R̂₁₂R̂₂₃R̂₁₂ = R̂₂₃R̂₁₂R̂₂₃` on three vector legs.
pub fn braid<C: Coefficient>(o: &Ops<C>, plus: bool, inverse: bool) -> R<Check<C>> {
    let r = o.rhat(plus, inverse);
    let a = [0, 1, 2, 3];
    let b = [2, 3, 4, 5];
    let res = diff(
        Path::start("UBUBUB").then(r, &a)?.then(r, &b)?.then(r, &a)?,
        Path::start("UBUBUB").then(r, &b)?.then(r, &a)?.then(r, &b)?,
    )?;
    Ok(Check::zero(format!("braid.{}", rhat_label(plus, inverse)), res))
}

/// Yang–Baxter form `R₁₂R₁₃R₂₃ = R₂₃R₁₃R₁₂` with `R = τR̂`.
pub fn yang_baxter<C: Coefficient>(o: &Ops<C>, plus: bool) -> R<Check<C>> {
    let tau = TMap::<C>::permutation(&sig("UBUB"), &[2, 3, 0, 1])?;
    let r = tau.compose(o.rhat(plus, false))?;
    let (l12, l13, l23) = ([0, 1, 2, 3], [0, 1, 4, 5], [2, 3, 4, 5]);
    let res = diff(
        Path::start("UBUBUB").then(&r, &l23)?.then(&r, &l13)?.then(&r, &l12)?,
        Path::start("UBUBUB").then(&r, &l12)?.then(&r, &l13)?.then(&r, &l23)?,
    )?;
    Ok(Check::zero(format!("braid.yang-baxter.{}", rhat_label(plus, false)), res))
}

/// `R̂ ∘ R̂^{-1} = I` for both signs.
pub fn rhat_inverses<C: Coefficient>(o: &Ops<C>) -> R<Check<C>> {
    let id = TMap::identity(sig("UBUB"));
    let parts = [true, false]
        .iter()
        .map(|&p| Ok((rhat_label(p, false), o.rhat(p, false).compose(o.rhat(p, true))?.sub(&id)?)))
        .collect::<R<Vec<_>>>()?;
    Ok(Check::multi("braid.inverses", Expect::Zero, parts))
}

/// The four tensor projections `P′⊗Q′`, `P⊗Q`, `P′⊗Q`, `P⊗Q′` conjugated by `X₂₃`.
pub struct Blocks<C> {
    pub ppqp: TMap<C>,
    pub pq: TMap<C>,
    pub ppq: TMap<C>,
    pub pqp: TMap<C>,
}

pub fn blocks<C: Coefficient>(o: &Ops<C>) -> R<Blocks<C>> {
    Ok(Blocks {
        ppqp: o.conj23(&o.pp.kron(&o.qp))?,
        pq: o.conj23(&o.p.kron(&o.q))?,
        ppq: o.conj23(&o.pp.kron(&o.q))?,
        pqp: o.conj23(&o.p.kron(&o.qp))?,
    })
}

/// Spectral decompositions, projector properties and (on the unit circle) the eigen-structure of `Ŵ`.
pub fn spectral<C: Coefficient>(o: &Ops<C>, regime: Regime) -> R<Vec<Check<C>>> {
    let k = &o.consts;
    let b = blocks(o)?;
    let mut out = Vec::new();
    let mul = |a: &C, b: &C| a.mul(b);
    // R̂± = X₂₃(q q̄^{±1} P′Q′ + q^{-1} q̄^{∓1} PQ − q q̄^{∓1} P′Q − q^{-1} q̄^{±1} PQ′)X^{-1}₂₃.
    for plus in [true, false] {
        let (qb_pm, qb_mp) = if plus { (&k.qb, &k.qb_inv) } else { (&k.qb_inv, &k.qb) };
        let rhs = lin(&[
            (mul(&k.q, qb_pm), &b.ppqp),
            (mul(&k.q_inv, qb_mp), &b.pq),
            (mul(&k.q, qb_mp).neg(), &b.ppq),
            (mul(&k.q_inv, qb_pm).neg(), &b.pqp),
        ])?;
        out.push(Check::zero(
            format!("spectral.decomposition.{}", rhat_label(plus, false)),
            o.rhat(plus, false).sub(&rhs)?,
        ));
    }
    let q2 = mul(&k.q, &k.q);
    let qm2 = mul(&k.q_inv, &k.q_inv);
    let one = C::one();
    let m_one = one.neg();
    // Forms with eigenvalues (q², q^{-2}, −1, −1) and (1, 1, −q², −q^{-2}).
    let wide = || lin(&[(q2.clone(), &b.ppqp), (qm2.clone(), &b.pq), (m_one.clone(), &b.ppq), (m_one.clone(), &b.pqp)]);
    let flat = || lin(&[(one.clone(), &b.ppqp), (one.clone(), &b.pq), (q2.neg(), &b.ppq), (qm2.neg(), &b.pqp)]);
    match regime {
        Regime::RealQ | Regime::Case2(_) => {
            out.push(Check::zero("spectral.real-q.Rhat+", o.rp.sub(&wide()?)?));
            out.push(Check::zero("spectral.real-q.Rhat-", o.rm.sub(&flat()?)?));
        }
        Regime::UnitCircle => {
            out.push(Check::zero("spectral.unit-circle.Rhat+", o.rp.sub(&flat()?)?));
            out.push(Check::zero("spectral.unit-circle.Rhat-", o.rm.sub(&wide()?)?));
        }
        Regime::Generic => {}
    }

    let proj = |name: &str, p: &TMap<C>, rank: i64| -> R<Check<C>> {
        let idem = p.compose(p)?.sub(p)?;
        let tr = scalar_map(p.trace()?.sub(&C::from_int(rank)));
        Ok(Check::multi(
            format!("spectral.projection.{}", name),
            Expect::Zero,
            vec![(String::from("idempotent"), idem), (format!("trace-{}", rank), tr)],
        ))
    };
    out.push(proj("P", &o.p, 1)?);
    out.push(proj("P'", &o.pp, 3)?);
    out.push(proj("Q", &o.q, 1)?);
    out.push(proj("Q'", &o.qp, 3)?);
    out.push(proj("Pminus", &o.pminus, 6)?);

    if regime == Regime::UnitCircle {
        let w = &o.w[0];
        let lam_q = k.q.clone();
        let lam_q3 = mul(&k.q_inv, &qm2);
        let lam_m = k.q_inv.neg();
        let spaces: [(&str, &C, &TMap<C>, i64); 3] =
            [("q", &lam_q, &b.ppqp, 9), ("q^-3", &lam_q3, &b.pq, 1), ("-q^-1", &lam_m, &o.pminus, 6)];
        let mut parts = Vec::new();
        for (name, lam, pi, mult) in spaces.iter() {
            parts.push((format!("eigen {}", name), w.compose(pi)?.sub(&pi.scale(lam))?));
            parts.push((format!("multiplicity {}", name), scalar_map(pi.trace()?.sub(&C::from_int(*mult)))));
        }
        for (i, a) in spaces.iter().enumerate() {
            for (j, c) in spaces.iter().enumerate() {
                if i != j {
                    parts.push((format!("orthogonal {} {}", a.0, c.0), a.2.compose(c.2)?));
                }
            }
        }
        let total = b.ppqp.add(&b.pq)?.add(&o.pminus)?;
        parts.push((String::from("complete"), total.sub(&TMap::identity(sig("UBUB")))?));
        let recon = lin(&[(lam_q.clone(), &b.ppqp), (lam_q3.clone(), &b.pq), (lam_m.clone(), &o.pminus)])?;
        parts.push((String::from("reconstruction"), w.sub(&recon)?));
        out.push(Check::multi("spectral.unit-circle.What-eigen", Expect::Zero, parts));
    }
    Ok(out)
}

fn plus_scalar<C: Coefficient>(w: &TMap<C>, s: &C) -> R<TMap<C>> {
    w.add(&TMap::identity(w.dom().clone()).scale(s))
}

/// `P⁻(Ŵ + σ)` for a candidate braiding scalar `σ`.
pub fn compat_residual<C: Coefficient>(o: &Ops<C>, sigma: &C) -> R<TMap<C>> {
    o.pminus.compose(&plus_scalar(&o.w[0], sigma)?)
}

/// Exact vanishing (or not) of `P⁻(Ŵ + σ)` for the regime's candidate values of `σ`.
pub fn compat<C: Coefficient>(o: &Ops<C>, regime: Regime) -> R<Vec<Check<C>>> {
    let k = &o.consts;
    let mut out = Vec::new();
    match regime {
        Regime::UnitCircle => {
            out.push(Check::zero("compat.sigma=q^-1", compat_residual(o, &k.q_inv)?));
            out.push(Check::nonzero("compat.sigma=1.nonzero", compat_residual(o, &C::one())?));
        }
        Regime::RealQ => {
            for (name, s) in [("1", C::one()), ("q", k.q.clone()), ("q^-1", k.q_inv.clone())] {
                out.push(Check::nonzero(format!("compat.real-q.sigma={}.nonzero", name), compat_residual(o, &s)?));
            }
        }
        _ => {}
    }
    Ok(out)
}

fn s_of<C: Coefficient>(o: &Ops<C>, v: Variant) -> &TMap<C> {
    &o.s[v.index()]
}

/// `S₁₂S₂₃E₁₂ − E₂₃` for a given `S` on two unbarred legs.
pub fn sse_residual<C: Coefficient>(o: &Ops<C>, s: &TMap<C>) -> R<TMap<C>> {
    diff(
        Path::start("U").then_at(&o.e, 0)?.then(s, &[1, 2])?.then(s, &[0, 1])?,
        Path::start("U").then_at(&o.e, 1)?,
    )
}

/// Cross-relation identities for one choice of `S`.
pub fn crossed<C: Coefficient>(o: &Ops<C>, v: Variant) -> R<Vec<Check<C>>> {
    let tag = v.name();
    let s = s_of(o, v);
    let t = &o.t[v.index()];
    let tp = &o.tp[v.index()];
    let mut out = Vec::new();
    out.push(Check::zero(format!("crossed.{}.SSE", tag), sse_residual(o, s)?));
    let tte = diff(
        Path::start("UB").then_at(&o.e, 0)?.then(t, &[1, 2, 3])?.then(t, &[0, 1, 2])?,
        Path::start("UB").then_at(&o.e, 2)?,
    )?;
    out.push(Check::zero(format!("crossed.{}.TTE", tag), tte));
    let xtt = diff(
        Path::start("UBUB").then(tp, &[1, 2, 3])?.then(t, &[0, 1, 2])?.then(&o.x, &[2, 3])?,
        Path::start("UBUB").then(&o.x, &[0, 1])?.then(t, &[1, 2, 3])?.then(tp, &[0, 1, 2])?,
    )?;
    out.push(Check::zero(format!("crossed.{}.XTT'", tag), xtt));
    let mut parts = Vec::new();
    for plus in [true, false] {
        let r = o.rhat(plus, false);
        let res = diff(
            Path::start("UUBUB").then(t, &[0, 1, 2])?.then(t, &[2, 3, 4])?.then(r, &[0, 1, 2, 3])?,
            Path::start("UUBUB").then(r, &[1, 2, 3, 4])?.then(t, &[0, 1, 2])?.then(t, &[2, 3, 4])?,
        )?;
        parts.push((rhat_label(plus, false), res));
    }
    out.push(Check::multi(format!("crossed.{}.RTT", tag), Expect::Zero, parts));
    // Ŵ = (qb/q)^{1/2} R̂₋ for the first variant, (q/qb)^{1/2} R̂₋^{-1} for the second.
    let c = &o.consts.w_scale;
    let wr = match v {
        Variant::First => o.w[0].sub(&o.rm.scale(c))?,
        Variant::Second => o.w[1].sub(&o.rmi.scale(&c.inv().expect("nonzero scale")))?,
    };
    out.push(Check::zero(format!("crossed.{}.xh-matrix", tag), wr));
    Ok(out)
}

/// Negative control: `S = I + EE′` is an intertwiner but does not solve SSE.
pub fn sse_non_solution<C: Coefficient>(o: &Ops<C>) -> R<Check<C>> {
    let s = TMap::identity(sig("UU")).add(&o.e.compose(&o.ep)?)?;
    Ok(Check::nonzero("crossed.non-solution.SSE", sse_residual(o, &s)?))
}

/// `*₁₂*₁₂ = id` on `u ⊗ x` and `ū ⊗ x`, as index contractions of `T` and `T′` with the
/// scalar conjugation `conj`.
pub fn crossed_star<C: Coefficient>(o: &Ops<C>, v: Variant, conj: &dyn Fn(&C) -> C) -> Check<C> {
    let t = &o.t[v.index()];
    let tp = &o.tp[v.index()];
    // Row (C, A, B) on (U,U,B); column (E′, K′, L′).
    let contract = |first: &TMap<C>, second: &TMap<C>| -> TMap<C> {
        TMap::from_fn(sig("UUB"), sig("UUB"), |row, col| {
            let (c, a, b) = (row >> 2 & 1, row >> 1 & 1, row & 1);
            let mut acc = C::zero();
            for e in 0..2 {
                for k in 0..2 {
                    for l in 0..2 {
                        let f = first.get(b << 2 | a << 1 | c, e << 2 | k << 1 | l);
                        if f.is_zero() {
                            continue;
                        }
                        let g = second.get(l << 2 | k << 1 | e, col);
                        if g.is_zero() {
                            continue;
                        }
                        acc = acc.add(&conj(f).mul(g));
                    }
                }
            }
            if row == col {
                acc.sub(&C::one())
            } else {
                acc
            }
        })
    };
    Check::multi(
        format!("crossed.{}.star-involution", v.name()),
        Expect::Zero,
        vec![(String::from("u⊗x"), contract(tp, t)), (String::from("ū⊗x"), contract(t, tp))],
    )
}

/// Every identity check that makes sense for `regime`, generic over the coefficients.
pub fn all<C: Coefficient>(o: &Ops<C>, regime: Regime, conj: &dyn Fn(&C) -> C) -> R<Vec<Check<C>>> {
    let mut out = moves(o)?;
    for plus in [true, false] {
        for inverse in [false, true] {
            out.push(braid(o, plus, inverse)?);
        }
        out.push(yang_baxter(o, plus)?);
    }
    out.push(rhat_inverses(o)?);
    out.extend(spectral(o, regime)?);
    out.extend(compat(o, regime)?);
    for v in Variant::BOTH {
        out.extend(crossed(o, v)?);
        out.push(crossed_star(o, v, conj));
    }
    out.push(sse_non_solution(o)?);
    Ok(out)
}
