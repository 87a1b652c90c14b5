//! Regime-level suites: each returns structured reports rather than raising.

use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;

use num_complex::Complex64;

use crate::coeff::{AtomImage, AtomValues, EvalError, GaussianRational, LaurentPoly, Mono, Regime, Scalar, Substitution};
use crate::report::{describe_residual, Check, CheckReport, Expect, Status};
use crate::tensor::{nullspace, Leg, Signature, TMap, TensorError};

use super::identities::{self, Path};
use super::ops::{pauli_basis, pauli_basis_inv, wr_scalar, x_inv_matrix, x_matrix, x_unrescaled, Ops, Variant};

fn sig(code: &str) -> Signature {
    Signature::from_code(code).expect("valid signature code")
}

fn reports(checks: Result<Vec<Check<Scalar>>, TensorError>, regime: Regime, prefix: &str) -> Vec<CheckReport> {
    match checks {
        Ok(cs) => cs.iter().map(|c| c.report(regime)).collect(),
        Err(e) => vec![CheckReport::predicate(prefix, regime, false, Some(e.to_string()))],
    }
}

fn report_one(check: Result<Check<Scalar>, TensorError>, regime: Regime, id: &str) -> CheckReport {
    reports(check.map(|c| vec![c]), regime, id).remove(0)
}

fn tensor_fail(id: &str, regime: Regime, e: TensorError) -> CheckReport {
    CheckReport::predicate(id, regime, false, Some(e.to_string()))
}

/// The six moves (M1)–(M6); the `K`-moves carry both signs as parts.
pub fn check_elementary_moves(regime: Regime) -> Vec<CheckReport> {
    let o = Ops::build(regime);
    reports(identities::moves(&o), regime, "moves")
}

/// Braid equation for `R̂±` and its inverse, plus the Yang–Baxter form.
pub fn check_braid(plus: bool, regime: Regime) -> Vec<CheckReport> {
    let o = Ops::build(regime);
    let mut checks = Vec::new();
    for inverse in [false, true] {
        checks.push(identities::braid(&o, plus, inverse));
    }
    checks.push(identities::yang_baxter(&o, plus));
    let label = if plus { "braid.Rhat+" } else { "braid.Rhat-" };
    reports(checks.into_iter().collect(), regime, label)
}

/// Decompositions, projector properties and the `Ŵ` eigen-structure.
pub fn check_spectral(regime: Regime) -> Vec<CheckReport> {
    let o = Ops::build(regime);
    let mut out = reports(identities::spectral(&o, regime), regime, "spectral");
    out.push(report_one(identities::rhat_inverses(&o), regime, "braid.inverses"));
    if regime == Regime::UnitCircle {
        // Independent of the block projectors: the −q^{-1} eigenspace of Ŵ has dimension 6.
        let shifted = o.w[0].add(&TMap::identity(sig("UBUB")).scale(&o.consts.q_inv));
        let r = match shifted {
            Ok(m) => {
                let nullity = 16 - m.rank();
                CheckReport::predicate(
                    "spectral.unit-circle.What-eigenspace-dim",
                    regime,
                    nullity == 6,
                    Some(format!("dim ker(What + q^-1) = {}", nullity)),
                )
                .with_detail(format!("dim ker(What + q^-1) = {}", nullity))
            }
            Err(e) => tensor_fail("spectral.unit-circle.What-eigenspace-dim", regime, e),
        };
        out.push(r);
    }
    out
}

/// `q² − 1` as a Laurent polynomial in `q^{1/2}`.
fn q2_minus_1() -> LaurentPoly {
    LaurentPoly::mono(Mono::new(4, 0, 0)).sub(&LaurentPoly::one())
}

fn q_minus_1() -> LaurentPoly {
    LaurentPoly::mono(Mono::new(2, 0, 0)).sub(&LaurentPoly::one())
}

/// How many nonzero entries of `m` have numerators divisible by `q − 1` and by `q² − 1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Divisibility {
    pub nonzero: usize,
    pub by_q_minus_1: usize,
    pub by_q2_minus_1: usize,
}

impl Divisibility {
    pub fn of(m: &TMap) -> Divisibility {
        let (f1, f2) = (q_minus_1(), q2_minus_1());
        let mut d = Divisibility { nonzero: 0, by_q_minus_1: 0, by_q2_minus_1: 0 };
        for v in m.entries().iter().filter(|v| !v.is_zero()) {
            d.nonzero += 1;
            if v.numer().div_exact(&f1).is_some() {
                d.by_q_minus_1 += 1;
            }
            if v.numer().div_exact(&f2).is_some() {
                d.by_q2_minus_1 += 1;
            }
        }
        d
    }

    pub fn all_by_q2_minus_1(&self) -> bool {
        self.nonzero > 0 && self.by_q2_minus_1 == self.nonzero
    }

    fn summary(&self) -> String {
        format!(
            "{} nonzero entries; numerators divisible by (q-1): {}, by (q^2-1): {}",
            self.nonzero, self.by_q_minus_1, self.by_q2_minus_1
        )
    }
}

/// `q^{1/2} ↦ c` with the remaining atoms untouched.
fn at_q_half(c: GaussianRational) -> Substitution {
    Substitution::identity().with_q(AtomImage::scaled(c, Mono::ONE))
}

fn vanishes_under(m: &TMap, s: &Substitution) -> Option<bool> {
    let mut all = true;
    for v in m.entries() {
        all &= s.try_apply(v)?.is_zero();
    }
    Some(all)
}

fn yes_no(v: Option<bool>) -> &'static str {
    match v {
        Some(true) => "vanishes",
        Some(false) => "nonzero",
        None => "undefined",
    }
}

/// Braided compatibility `P⁻(Ŵ + σ) = 0` and the analysis of the failing choices.
pub fn check_translation_compat(regime: Regime) -> Vec<CheckReport> {
    let o = Ops::build(regime);
    let mut out = reports(identities::compat(&o, regime), regime, "compat");
    let k = &o.consts;
    let res1 = match identities::compat_residual(&o, &Scalar::one()) {
        Ok(r) => r,
        Err(e) => {
            out.push(tensor_fail("compat.sigma=1", regime, e));
            return out;
        }
    };
    let div = Divisibility::of(&res1);
    let at_one = vanishes_under(&res1, &at_q_half(GaussianRational::one()));
    let at_minus_one = vanishes_under(&res1, &at_q_half(GaussianRational::i()));
    let loci = format!("at q=1: {}; at q=-1: {}", yes_no(at_one), yes_no(at_minus_one));
    match regime {
        Regime::UnitCircle => {
            // Exact factorisation: with P⁻(Ŵ + q^{-1}) = 0 the σ = 1 residual is (1 − q^{-1})P⁻.
            let c = &Scalar::one() - &k.q_inv;
            let fact = res1.sub(&o.pminus.scale(&c));
            out.push(match fact {
                Ok(f) => Check::zero("compat.sigma=1.factorisation", f)
                    .report(regime)
                    .with_detail("P-(What + 1) = (1 - q^-1) P-"),
                Err(e) => tensor_fail("compat.sigma=1.factorisation", regime, e),
            });
            let ok = div.all_by_q2_minus_1();
            out.push(
                CheckReport::predicate(
                    "compat.sigma=1.divisible-by-q^2-1",
                    regime,
                    ok,
                    describe_residual(&res1).map(|d| format!("not divisible by (q^2-1): {}", d)),
                )
                .with_detail(format!("{}; {}", div.summary(), loci)),
            );
            out.push(
                CheckReport::predicate("compat.sigma=1.vanishes-at-q=1", regime, at_one == Some(true), Some(loci.clone()))
                    .with_detail(loci),
            );
        }
        Regime::RealQ => {
            out.push(
                CheckReport::predicate(
                    "compat.real-q.sigma=1.divisible-by-q^2-1",
                    regime,
                    div.all_by_q2_minus_1(),
                    describe_residual(&res1),
                )
                .with_detail(format!("{}; {}", div.summary(), loci)),
            );
            out.push(no_constant_sigma(&o, regime));
        }
        _ => {}
    }
    out
}

/// On `q̄ = q` the image of `P⁻` splits into two `Ŵ`-eigenspaces with eigenvalues `−q²` and
/// `−q^{-2}`, so no constant `σ` can satisfy `P⁻(Ŵ + σ) = 0` unless `q⁴ = 1`.
fn no_constant_sigma(o: &Ops<Scalar>, regime: Regime) -> CheckReport {
    let id = "compat.real-q.no-constant-sigma";
    let run = || -> Result<(bool, String), TensorError> {
        let b = identities::blocks(o)?;
        let q2 = &o.consts.q * &o.consts.q;
        let qm2 = &o.consts.q_inv * &o.consts.q_inv;
        let w = &o.w[0];
        let e1 = w.compose(&b.ppq)?.sub(&b.ppq.scale(&-q2.clone()))?;
        let e2 = w.compose(&b.pqp)?.sub(&b.pqp.scale(&-qm2.clone()))?;
        let split = o.pminus.sub(&b.ppq.add(&b.pqp)?)?;
        let differ = !(&q2 - &qm2).is_zero();
        let ok = e1.is_zero() && e2.is_zero() && split.is_zero() && !b.ppq.is_zero() && !b.pqp.is_zero() && differ;
        Ok((ok, format!("What eigenvalues on image(P-): {} and {}", -q2, -qm2)))
    };
    match run() {
        Ok((ok, d)) => CheckReport::predicate(id, regime, ok, Some(d.clone())).with_detail(d),
        Err(e) => tensor_fail(id, regime, e),
    }
}

/// Cross-relation identities for one `S`, the star involution, the regime `Ŵ` scalar and the
/// non-solution control.
pub fn check_crossed_identities(regime: Regime, v: Variant) -> Vec<CheckReport> {
    let o = Ops::build(regime);
    let mut out = reports(identities::crossed(&o, v), regime, "crossed");
    let conj = move |s: &Scalar| crate::coeff::star(s, regime);
    out.push(identities::crossed_star(&o, v, &conj).report(regime));
    let c = wr_scalar(regime);
    let id = format!("crossed.{}.xh-matrix.regime-scalar", v.name());
    let wr = match v {
        Variant::First => o.w[0].sub(&o.rm.scale(&c)),
        Variant::Second => o.w[1].sub(&o.rmi.scale(&c.inv().expect("nonzero"))),
    };
    out.push(match wr {
        Ok(m) => Check::zero(id, m).report(regime).with_detail(format!("What = ({}) Rhat-", c)),
        Err(e) => tensor_fail(&id, regime, e),
    });
    out.push(report_one(identities::sse_non_solution(&o), regime, "crossed.non-solution.SSE"));
    out
}

/// Exact solutions `(a, b)` of SSE for `S = aI + bEE′`.
#[derive(Clone, Debug)]
pub struct SUniqueness {
    pub solutions: Vec<(Scalar, Scalar)>,
    /// Dimension of the affine solution space of the linearised system in `(a², ab, b²)`.
    pub linear_dim: usize,
}

fn sse_piece(o: &Ops<Scalar>, inner: &TMap, outer: &TMap) -> Result<TMap, TensorError> {
    Ok(Path::start("U").then_at(&o.e, 0)?.then(inner, &[1, 2])?.then(outer, &[0, 1])?.done())
}

/// Solves SSE for `S = aI + bEE′` over the generic field: linear in `Y = (a², ab, b²)`, then
/// the rank-one condition `y₁² = y₀y₂`.
pub fn s_uniqueness() -> Result<SUniqueness, TensorError> {
    let o = Ops::build(Regime::Generic);
    let id = TMap::identity(sig("UU"));
    let n = o.e.compose(&o.ep)?;
    let aa = sse_piece(&o, &id, &id)?;
    let ab = sse_piece(&o, &id, &n)?.add(&sse_piece(&o, &n, &id)?)?;
    let bb = sse_piece(&o, &n, &n)?;
    let rhs = Path::start("U").then_at(&o.e, 1)?.done();
    let mut rows = Vec::new();
    for i in 0..rhs.entries().len() {
        rows.push(vec![
            aa.entries()[i].clone(),
            ab.entries()[i].clone(),
            bb.entries()[i].clone(),
            -rhs.entries()[i].clone(),
        ]);
    }
    let ns = nullspace(rows, 4);
    // Affine solutions are null vectors with last coordinate 1.
    let (with_const, homog): (Vec<_>, Vec<_>) = ns.into_iter().partition(|v| !v[3].is_zero());
    let mut homog = homog;
    let Some(p) = with_const.first().cloned() else {
        return Ok(SUniqueness { solutions: Vec::new(), linear_dim: 0 });
    };
    let p3 = p[3].inv().expect("nonzero");
    let p: Vec<Scalar> = p.iter().map(|x| x * &p3).collect();
    for extra in with_const.iter().skip(1) {
        let c = &extra[3] * &p3;
        homog.push(extra.iter().zip(&p).map(|(x, y)| x - &(&c * y)).collect());
    }
    let linear_dim = homog.len();
    let mut ys: Vec<Vec<Scalar>> = Vec::new();
    match linear_dim {
        0 => ys.push(p.clone()),
        1 => {
            let d = &homog[0];
            let a2 = &(&d[1] * &d[1]) - &(&d[0] * &d[2]);
            let b1 = &(&Scalar::from_int(2) * &(&p[1] * &d[1])) - &(&(&p[0] * &d[2]) + &(&p[2] * &d[0]));
            let c0 = &(&p[1] * &p[1]) - &(&p[0] * &p[2]);
            let mut lambdas = Vec::new();
            if a2.is_zero() {
                if let Some(inv) = b1.inv() {
                    lambdas.push(-&(&c0 * &inv));
                }
            } else {
                let disc = &(&b1 * &b1) - &(&Scalar::from_int(4) * &(&a2 * &c0));
                if let Some(r) = disc.sqrt_exact() {
                    let den = (&Scalar::from_int(2) * &a2).inv().expect("nonzero");
                    lambdas.push(&(&-b1.clone() + &r) * &den);
                    if !r.is_zero() {
                        lambdas.push(&(&-b1.clone() - &r) * &den);
                    }
                }
            }
            for l in lambdas {
                ys.push(p.iter().zip(d).map(|(x, y)| x + &(&l * y)).collect());
            }
        }
        _ => {}
    }
    let mut solutions = Vec::new();
    for y in ys {
        if y[0].is_zero() {
            if let Some(b) = y[2].sqrt_exact() {
                if !b.is_zero() {
                    solutions.push((Scalar::zero(), b.clone()));
                    solutions.push((Scalar::zero(), -b));
                }
            }
            continue;
        }
        if let Some(a) = y[0].sqrt_exact() {
            let b = &y[1] * &a.inv().expect("nonzero");
            solutions.push((-a.clone(), -b.clone()));
            solutions.push((a, b));
        }
    }
    Ok(SUniqueness { solutions, linear_dim })
}

/// The scan reproduces exactly `±(q^{1/2}, q^{-1/2})` and `±(q^{-1/2}, q^{1/2})`.
pub fn check_s_uniqueness() -> CheckReport {
    let id = "crossed.S-uniqueness";
    let regime = Regime::Generic;
    match s_uniqueness() {
        Ok(s) => {
            let h = Scalar::q_half_pow;
            let expected = [(h(1), h(-1)), (h(-1), h(1))];
            let mut want: Vec<(Scalar, Scalar)> = Vec::new();
            for (a, b) in expected {
                want.push((-a.clone(), -b.clone()));
                want.push((a, b));
            }
            let found = &s.solutions;
            let ok = found.len() == want.len() && want.iter().all(|w| found.contains(w));
            let listed: Vec<String> = found.iter().map(|(a, b)| format!("({}, {})", a, b)).collect();
            let d = format!("(a, b) in {{{}}}", listed.join(", "));
            CheckReport::predicate(id, regime, ok, Some(d.clone())).with_detail(d)
        }
        Err(e) => tensor_fail(id, regime, e),
    }
}

/// `(σ^{-1})^{⊗n} ∘ op ∘ σ^{⊗n}` for `op` on `(U,B)^n`: components in the Pauli basis.
pub fn vector_components(op: &TMap) -> Result<TMap, TensorError> {
    let n = op.dom().len() / 2;
    let unit = sig("UB");
    let expect = (0..n).fold(Signature::empty(), |acc, _| acc.concat(&unit));
    for s in [op.dom(), op.cod()] {
        if s != &expect || op.dom().len() % 2 != 0 {
            return Err(TensorError::SignatureMismatch { expected: expect.clone(), found: s.clone() });
        }
    }
    let (p, pi) = (pauli_basis(), pauli_basis_inv());
    let mut big = TMap::identity(Signature::empty());
    let mut big_inv = TMap::identity(Signature::empty());
    for _ in 0..n {
        big = big.kron(&p);
        big_inv = big_inv.kron(&pi);
    }
    TMap::chain(&[&big_inv, op, &big])
}

/// `h = u ⊗ ū` on `(U,B)` for a 2×2 matrix `u` given row-major.
pub fn h_of(u: [[Scalar; 2]; 2]) -> TMap {
    TMap::from_fn(sig("UB"), sig("UB"), |row, col| {
        let (a, b) = (row >> 1, row & 1);
        let (c, d) = (col >> 1, col & 1);
        &u[a][c] * &u[b][d].star_generic()
    })
}

/// Swap of two 4-dimensional vector indices, written directly on `(j, k)`.
fn vector_swap() -> TMap {
    TMap::from_fn(sig("UBUB"), sig("UBUB"), |row, col| {
        if row == ((col & 3) << 2 | col >> 2) {
            Scalar::one()
        } else {
            Scalar::zero()
        }
    })
}

fn gr(re: i64, im: i64, den: i64) -> Scalar {
    Scalar::gaussian(GaussianRational::new(
        num_rational::BigRational::new(re.into(), den.into()),
        num_rational::BigRational::new(im.into(), den.into()),
    ))
}

/// Pauli-basis checks: trivial and unitary `h`, and `P⁻` in vector indices.
pub fn check_vector_components(regime: Regime) -> Vec<CheckReport> {
    let mut out = Vec::new();
    let run = |id: &str, f: &dyn Fn() -> Result<(bool, Option<String>), TensorError>| match f() {
        Ok((ok, d)) => CheckReport::predicate(id, regime, ok, d),
        Err(e) => tensor_fail(id, regime, e),
    };
    out.push(run("vector.identity", &|| {
        let h = h_of([[Scalar::one(), Scalar::zero()], [Scalar::zero(), Scalar::one()]]);
        let v = vector_components(&h)?;
        Ok((v == TMap::identity(sig("UB")), describe_residual(&v.sub(&TMap::identity(sig("UB")))?)))
    }));
    out.push(run("vector.unitary-is-real", &|| {
        let u = [[gr(3, 0, 5), gr(0, 4, 5)], [gr(0, 4, 5), gr(3, 0, 5)]];
        let v = vector_components(&h_of(u))?;
        let bad = v.entries().iter().find(|x| !x.as_constant().map(|c| c.is_real()).unwrap_or(false));
        Ok((bad.is_none(), bad.map(|b| format!("non-real component {}", b))))
    }));
    let o = Ops::build(regime);
    out.push(run("vector.Pminus", &|| {
        let v = vector_components(&o.pminus)?;
        let idem = v.compose(&v)?.sub(&v)?;
        let tr = v.trace()?;
        let ok = idem.is_zero() && tr == Scalar::from_int(6);
        Ok((ok, Some(format!("trace {}; {}", tr, describe_residual(&idem).unwrap_or_default()))))
    }));
    out
}

/// Operator-level facts: `X X^{-1} = I`, the unrescaled `X` is a scalar multiple, `ME = −q^{-1}E`.
pub fn check_operators(regime: Regime) -> Vec<CheckReport> {
    let o = Ops::build(regime);
    let mut out = Vec::new();
    let inv = o
        .x
        .compose(&o.xi)
        .and_then(|a| a.sub(&TMap::identity(sig("BU"))))
        .and_then(|a| Ok((a, o.xi.compose(&o.x)?.sub(&TMap::identity(sig("UB")))?)));
    out.push(match inv {
        Ok((a, b)) => Check::multi("operators.X-inverse", Expect::Zero, vec![("X X^-1".into(), a), ("X^-1 X".into(), b)])
            .report(regime),
        Err(e) => tensor_fail("operators.X-inverse", regime, e),
    });
    let full = x_unrescaled(regime).specialize(regime);
    let c = match regime {
        Regime::Case2(_) => Scalar::q_half_pow(1),
        _ => Scalar::t_half_pow(1),
    };
    out.push(match full.sub(&o.x.scale(&c)) {
        Ok(m) => Check::zero("operators.X-rescaling", m).report(regime).with_detail(format!("unrescaled X = ({}) X", c)),
        Err(e) => tensor_fail("operators.X-rescaling", regime, e),
    });
    let me = o.m.compose(&o.e).and_then(|a| a.sub(&o.e.scale(&-o.consts.q_inv.clone())));
    out.push(match me {
        Ok(m) => Check::zero("operators.M-on-E", m).report(regime),
        Err(e) => tensor_fail("operators.M-on-E", regime, e),
    });
    out
}

/// Classical limit `q = q̄ = t = 1`, `ε = 0`: everything becomes a flip or a classical projector.
pub fn check_classical_limit() -> Vec<CheckReport> {
    let regime = Regime::Generic;
    let o = Ops::build_generic(0).substitute(&Substitution::classical());
    let mut out = Vec::new();
    let perm = |code: &str, p: &[usize]| TMap::permutation(&sig(code), p).expect("valid permutation");
    let tau = perm("UBUB", &[2, 3, 0, 1]);
    let half = Scalar::ratio(1, 2);
    let anti = TMap::identity(sig("UBUB")).sub(&tau).expect("same shape").scale(&half);
    let flip_uu = TMap::flip(Leg::U, Leg::U);
    let flip_bb = TMap::flip(Leg::B, Leg::B);
    let cases: Vec<(&str, &TMap, TMap)> = vec![
        ("X", &o.x, TMap::flip(Leg::U, Leg::B)),
        ("X^-1", &o.xi, TMap::flip(Leg::B, Leg::U)),
        ("M", &o.m, flip_uu.clone()),
        ("M^-1", &o.mi, flip_uu.clone()),
        ("K", &o.k, flip_bb.clone()),
        ("K^-1", &o.ki, flip_bb),
        ("Rhat+", &o.rp, tau.clone()),
        ("Rhat-", &o.rm, tau.clone()),
        ("Rhat+^-1", &o.rpi, tau.clone()),
        ("Rhat-^-1", &o.rmi, tau.clone()),
        ("Pminus", &o.pminus, anti),
        ("S(first)", &o.s[0], flip_uu.clone()),
        ("S(second)", &o.s[1], flip_uu),
        ("T(first)", &o.t[0], perm("UUB", &[2, 0, 1])),
        ("T(second)", &o.t[1], perm("UUB", &[2, 0, 1])),
        ("T'(first)", &o.tp[0], perm("BUB", &[2, 0, 1])),
        ("T'(second)", &o.tp[1], perm("BUB", &[2, 0, 1])),
        ("What(first)", &o.w[0], tau.clone()),
        ("What(second)", &o.w[1], tau),
    ];
    for (name, got, want) in cases {
        let id = format!("classical.{}", name);
        out.push(match got.sub(&want) {
            Ok(m) => Check::zero(id, m).report(regime),
            Err(e) => tensor_fail(&id, regime, e),
        });
    }
    out.push(match identities::compat_residual(&o, &Scalar::one()) {
        Ok(m) => Check::zero("classical.compat.sigma=1", m).report(regime),
        Err(e) => tensor_fail("classical.compat.sigma=1", regime, e),
    });
    out.push(match vector_components(&o.pminus) {
        Ok(v) => {
            let anti = TMap::identity(sig("UBUB")).sub(&vector_swap()).expect("same shape").scale(&half);
            Check::zero("classical.vector.Pminus-antisymmetrizer", v.sub(&anti).expect("same shape")).report(regime)
        }
        Err(e) => tensor_fail("classical.vector.Pminus-antisymmetrizer", regime, e),
    });
    // Case 2 at q = 1: the ε-term of X has no t-dependence to switch it off.
    for r in [Regime::Case2(crate::coeff::Sign::Plus), Regime::Case2(crate::coeff::Sign::Minus)] {
        let x1 = Ops::build(r).substitute(&Substitution::classical()).x;
        let res = x1.sub(&TMap::flip(Leg::U, Leg::B)).expect("same shape");
        let survives = !res.is_zero();
        out.push(
            CheckReport::from_outcome(
                "classical.case2.epsilon-term",
                r,
                Expect::NonZero,
                !survives,
                describe_residual(&res),
            )
            .with_detail("at q = 1 the case-2 X keeps its epsilon entry, so X is not the flip"),
        );
    }
    out
}

/// The identity suite over exact scalars, as one flat list.
pub fn run_identities(o: &Ops<Scalar>, regime: Regime) -> Vec<CheckReport> {
    let conj = move |s: &Scalar| crate::coeff::star(s, regime);
    reports(identities::all(o, regime, &conj), regime, "identities")
}

/// Flipping the sign of each half-power atom leaves every status unchanged.
pub fn check_branch_flips(regime: Regime) -> Vec<CheckReport> {
    let o = Ops::build(regime);
    let base: Vec<(String, Status)> = run_identities(&o, regime).into_iter().map(|r| (r.check_id, r.status)).collect();
    let flips = [
        ("q", Substitution::flip_q_branches()),
        ("t", Substitution::flip_t_branch()),
        ("q,t", Substitution::flip_q_branches().then(&Substitution::flip_t_branch())),
    ];
    flips
        .iter()
        .map(|(name, s)| {
            let flipped: Vec<(String, Status)> =
                run_identities(&o.substitute(s), regime).into_iter().map(|r| (r.check_id, r.status)).collect();
            let diff = base.iter().zip(&flipped).find(|(a, b)| a != b);
            let ok = base.len() == flipped.len() && diff.is_none();
            CheckReport::predicate(
                format!("branches.flip-{}", name),
                regime,
                ok,
                diff.map(|(a, b)| format!("{}: {} -> {}", a.0, a.1.name(), b.1.name())),
            )
            .with_detail(format!("{} statuses compared", base.len()))
        })
        .collect()
}

/// Negative controls for the moves.
///
/// The perturbed `X` carries the case-2 `ε` entry while keeping `t` independent of `q`; the
/// moves hold only when `t = q`, so every move must break, and the joint pass/fail pattern
/// within `{M1, M4, M5}` and within `{M2, M3, M6}` is recorded. The `t^{-1} → t` substitution
/// maps `X` to `X` at `1/t`, which is again admissible, so it is reported but does not count as
/// a control. (Rescaling a single entry of `X` together with its inverse is likewise invisible
/// to the moves.)
pub fn check_moves_negative_control() -> Vec<CheckReport> {
    let regime = Regime::Generic;
    let t = Scalar::t();
    let t_inv = t.inv().expect("nonzero");
    let x = x_matrix(&t_inv, 1);
    let xi = x_inv_matrix(&t, 1);
    let perturbed = Ops::build_from_x(x, xi);
    let mut out = Vec::new();
    let statuses: Vec<(String, bool)> = match identities::moves(&perturbed) {
        Ok(cs) => cs.iter().map(|c| (c.id.clone(), c.report(regime).passed())).collect(),
        Err(e) => return vec![tensor_fail("moves.negative-control", regime, e)],
    };
    let failed = |ids: &[&str]| -> Vec<bool> {
        ids.iter()
            .map(|id| statuses.iter().find(|(s, _)| s.ends_with(id)).map(|(_, p)| !p).unwrap_or(false))
            .collect()
    };
    let g1 = failed(&["M1", "M4", "M5"]);
    let g2 = failed(&["M2", "M3", "M6"]);
    let joint = |g: &[bool]| g.iter().all(|&b| b == g[0]);
    let all_fail = g1.iter().chain(&g2).all(|&b| b);
    let pattern: Vec<String> = statuses.iter().map(|(s, p)| format!("{}={}", s, if *p { "pass" } else { "fail" })).collect();
    out.push(
        CheckReport::predicate(
            "moves.negative-control.perturbed-X",
            regime,
            all_fail && joint(&g1) && joint(&g2),
            Some(pattern.join(", ")),
        )
        .with_detail(pattern.join(", ")),
    );
    // The literal t^{-1} -> t swap: an automorphism of the family, so every move still holds.
    let swapped = Ops::build_from_x(x_matrix(&t, 0), x_inv_matrix(&t_inv, 0));
    let still: Vec<bool> = match identities::moves(&swapped) {
        Ok(cs) => cs.iter().map(|c| c.report(regime).passed()).collect(),
        Err(e) => return vec![tensor_fail("moves.t-swap", regime, e)],
    };
    let n = still.iter().filter(|&&b| b).count();
    out.push(
        CheckReport::predicate("moves.t-swap-still-valid", regime, n == still.len(), None)
            .with_detail(format!("{}/{} moves hold with t^-1 replaced by t (X at 1/t is again admissible)", n, still.len())),
    );
    out
}

/// The exact identity suite sampled at a point: every residual must have max-norm below `tol`.
pub fn numeric_suite(q: Complex64, t: f64, tol: f64) -> Result<Vec<CheckReport>, EvalError> {
    let regime = Regime::UnitCircle;
    let v = AtomValues::at(q, t, regime)?;
    let o = Ops::build(regime).eval(&v)?;
    let conj = |z: &Complex64| z.conj();
    let checks = identities::all(&o, regime, &conj).expect("typed identities");
    Ok(checks.iter().map(|c| c.report_numeric(regime, tol)).collect())
}

/// Everything in this module for one regime.
pub fn full_suite(regime: Regime) -> Vec<CheckReport> {
    let mut out = check_elementary_moves(regime);
    out.extend(check_braid(true, regime));
    out.extend(check_braid(false, regime));
    out.extend(check_spectral(regime));
    out.extend(check_translation_compat(regime));
    for v in Variant::BOTH {
        out.extend(check_crossed_identities(regime, v));
    }
    out.extend(check_vector_components(regime));
    out.extend(check_operators(regime));
    out
}
