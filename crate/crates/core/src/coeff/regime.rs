//! Parameter regimes, atom substitutions, conjugation and numeric evaluation.

use core::fmt;

use num_complex::Complex64;

use super::gauss::GaussianRational;
use super::laurent::{LaurentPoly, Mono};
use super::scalar::Scalar;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn value(self) -> i64 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }
}

/// Which specialisation of `q`, `qb`, `t` is in force.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Regime {
    /// `q`, `qb`, `t` independent.
    Generic,
    /// `|q| = 1`: `qb^{1/2} := q^{-1/2}`.
    UnitCircle,
    /// `qb = q`: `qb^{1/2} := q^{1/2}`.
    RealQ,
    /// Standard Lorentz deformation: `qb := q`, `t := q`, with the extra `ε` term in `X`.
    Case2(Sign),
}

impl Regime {
    pub const ALL: [Regime; 5] =
        [Regime::Generic, Regime::UnitCircle, Regime::RealQ, Regime::Case2(Sign::Plus), Regime::Case2(Sign::Minus)];

    /// The `ε` of the rescaled `X`: 0 outside case 2.
    pub fn epsilon(self) -> i64 {
        match self {
            Regime::Case2(s) => s.value(),
            _ => 0,
        }
    }

    pub fn substitution(self) -> Substitution {
        match self {
            Regime::Generic => Substitution::identity(),
            Regime::UnitCircle => Substitution::identity().with_qb(AtomImage::mono(Mono::new(-1, 0, 0))),
            Regime::RealQ => Substitution::identity().with_qb(AtomImage::mono(Mono::new(1, 0, 0))),
            Regime::Case2(_) => Substitution::identity()
                .with_qb(AtomImage::mono(Mono::new(1, 0, 0)))
                .with_t(AtomImage::mono(Mono::new(1, 0, 0))),
        }
    }

    /// Short name used on the command line and in reports.
    pub fn name(self) -> &'static str {
        match self {
            Regime::Generic => "generic",
            Regime::UnitCircle => "unit-circle",
            Regime::RealQ => "real-q",
            Regime::Case2(Sign::Plus) => "case2+",
            Regime::Case2(Sign::Minus) => "case2-",
        }
    }

    pub fn from_name(s: &str) -> Option<Regime> {
        Regime::ALL.iter().copied().find(|r| r.name() == s)
    }
}

impl fmt::Display for Regime {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Image of one half-power atom: `coeff · mono`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AtomImage {
    pub coeff: GaussianRational,
    pub mono: Mono,
}

impl AtomImage {
    pub fn mono(m: Mono) -> Self {
        AtomImage { coeff: GaussianRational::one(), mono: m }
    }

    pub fn scaled(c: GaussianRational, m: Mono) -> Self {
        assert!(!c.is_zero(), "atoms are units; image must be nonzero");
        AtomImage { coeff: c, mono: m }
    }

    fn pow(&self, k: i32) -> (GaussianRational, Mono) {
        (self.coeff.pow(k), self.mono.pow(k))
    }
}

/// Ring endomorphism of the Laurent ring fixed by where it sends each atom.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Substitution {
    pub q_half: AtomImage,
    pub qb_half: AtomImage,
    pub t_half: AtomImage,
}

impl Substitution {
    pub fn identity() -> Self {
        Substitution {
            q_half: AtomImage::mono(Mono::new(1, 0, 0)),
            qb_half: AtomImage::mono(Mono::new(0, 1, 0)),
            t_half: AtomImage::mono(Mono::new(0, 0, 1)),
        }
    }

    pub fn with_q(mut self, a: AtomImage) -> Self {
        self.q_half = a;
        self
    }

    pub fn with_qb(mut self, a: AtomImage) -> Self {
        self.qb_half = a;
        self
    }

    pub fn with_t(mut self, a: AtomImage) -> Self {
        self.t_half = a;
        self
    }

    /// `q = qb = t = 1` with the positive branch of every square root.
    pub fn classical() -> Self {
        Substitution {
            q_half: AtomImage::mono(Mono::ONE),
            qb_half: AtomImage::mono(Mono::ONE),
            t_half: AtomImage::mono(Mono::ONE),
        }
    }

    /// `qb = −q`, realised as `qb^{1/2} := i·q^{1/2}`.
    pub fn qb_minus_q() -> Self {
        Substitution::identity().with_qb(AtomImage::scaled(GaussianRational::i(), Mono::new(1, 0, 0)))
    }

    /// Simultaneous sign flip of the `q^{1/2}` and `qb^{1/2}` branches.
    pub fn flip_q_branches() -> Self {
        let m1 = GaussianRational::from_int(-1);
        Substitution::identity()
            .with_q(AtomImage::scaled(m1.clone(), Mono::new(1, 0, 0)))
            .with_qb(AtomImage::scaled(m1, Mono::new(0, 1, 0)))
    }

    /// Sign flip of the `t^{1/2}` branch.
    pub fn flip_t_branch() -> Self {
        Substitution::identity().with_t(AtomImage::scaled(GaussianRational::from_int(-1), Mono::new(0, 0, 1)))
    }

    /// `self` followed by `next`.
    pub fn then(&self, next: &Substitution) -> Substitution {
        let img = |a: &AtomImage| {
            let p = next.apply_poly(&LaurentPoly::term(a.coeff.clone(), a.mono));
            let (m, c) = p.as_term().expect("monomial image");
            AtomImage::scaled(c.clone(), m)
        };
        Substitution { q_half: img(&self.q_half), qb_half: img(&self.qb_half), t_half: img(&self.t_half) }
    }

    pub fn apply_poly(&self, p: &LaurentPoly) -> LaurentPoly {
        LaurentPoly::from_terms(p.terms().iter().map(|(m, c)| {
            let (c1, m1) = self.q_half.pow(m.q);
            let (c2, m2) = self.qb_half.pow(m.qb);
            let (c3, m3) = self.t_half.pow(m.t);
            (m1.mul(m2).mul(m3), &(&(c * &c1) * &c2) * &c3)
        }))
    }

    /// `None` when the denominator vanishes under the substitution.
    pub fn try_apply(&self, s: &Scalar) -> Option<Scalar> {
        let den = self.apply_poly(s.denom());
        if den.is_zero() {
            return None;
        }
        Some(Scalar::from_parts(self.apply_poly(s.numer()), den))
    }

    /// Panics when the denominator vanishes identically under the substitution.
    pub fn apply(&self, s: &Scalar) -> Scalar {
        self.try_apply(s).expect("denominator vanishes under substitution")
    }
}

#[derive(Clone, Debug, PartialEq, thiserror::Error)]
pub enum EvalError {
    #[error("q = {0} is excluded (q must avoid 0, i, -i)")]
    ExcludedQ(Complex64),
    #[error("t = {0} must be a positive real")]
    NonPositiveT(f64),
    #[error("q = {q} is not admissible for regime {regime}")]
    Domain { q: Complex64, regime: Regime },
    #[error("denominator evaluates to zero")]
    DivisionByZero,
}

/// Numeric values of the three atoms at a sample point.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct AtomValues {
    pub q_half: Complex64,
    pub qb_half: Complex64,
    pub t_half: Complex64,
}

/// Principal square root.
pub fn principal_sqrt(z: Complex64) -> Complex64 {
    let r = libm::hypot(z.re, z.im);
    if r == 0.0 {
        return Complex64::new(0.0, 0.0);
    }
    let re = libm::sqrt((r + z.re) / 2.0);
    let im = libm::sqrt((r - z.re) / 2.0);
    Complex64::new(re, if z.im < 0.0 { -im } else { im })
}

const UNIT_TOL: f64 = 1e-12;

impl AtomValues {
    /// Atom values for `(q, t)` in `regime`, with the principal branch of `q^{1/2}` and
    /// `qb^{1/2} = conj(q^{1/2})` in the generic regime.
    pub fn at(q: Complex64, t: f64, regime: Regime) -> Result<AtomValues, EvalError> {
        let near = |a: Complex64, b: Complex64| (a - b).norm() < UNIT_TOL;
        if near(q, Complex64::new(0.0, 0.0)) || near(q, Complex64::new(0.0, 1.0)) || near(q, Complex64::new(0.0, -1.0)) {
            return Err(EvalError::ExcludedQ(q));
        }
        if t.is_nan() || t <= 0.0 || !t.is_finite() {
            return Err(EvalError::NonPositiveT(t));
        }
        match regime {
            Regime::UnitCircle if (q.norm() - 1.0).abs() > UNIT_TOL => return Err(EvalError::Domain { q, regime }),
            Regime::RealQ | Regime::Case2(_) if q.im.abs() > UNIT_TOL || q.re <= 0.0 => {
                return Err(EvalError::Domain { q, regime })
            }
            _ => {}
        }
        let q_half = principal_sqrt(q);
        Ok(AtomValues { q_half, qb_half: q_half.conj(), t_half: Complex64::new(libm::sqrt(t), 0.0) })
    }
}

/// Regime specialisation; the generic regime is the identity.
pub fn specialize(s: &Scalar, r: Regime) -> Scalar {
    match r {
        Regime::Generic => s.clone(),
        _ => r.substitution().apply(s),
    }
}

/// Conjugation in a regime: generic conjugation followed by specialisation.
pub fn star(s: &Scalar, r: Regime) -> Scalar {
    specialize(&s.star_generic(), r)
}

/// Evaluate `s` (specialised to `r` first) at the sample `(q, t)`.
pub fn eval_numeric(s: &Scalar, q: Complex64, t: f64, r: Regime) -> Result<Complex64, EvalError> {
    let vals = AtomValues::at(q, t, r)?;
    eval_at(&specialize(s, r), &vals)
}

pub fn eval_at(s: &Scalar, v: &AtomValues) -> Result<Complex64, EvalError> {
    let d = s.denom().eval(v.q_half, v.qb_half, v.t_half);
    if d.norm() == 0.0 || !d.norm().is_finite() {
        return Err(EvalError::DivisionByZero);
    }
    Ok(s.numer().eval(v.q_half, v.qb_half, v.t_half) / d)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q() -> Scalar {
        Scalar::q()
    }
    fn qb() -> Scalar {
        Scalar::qb()
    }

    #[test]
    fn specialize_examples() {
        assert!(specialize(&(&q() * &qb()), Regime::UnitCircle).is_one());
        let d = &(&qb() * &qb()) - &(&q() * &q());
        assert!(specialize(&d, Regime::RealQ).is_zero());
        assert_eq!(specialize(&d, Regime::Generic), d);
        assert!(!d.is_zero());
        let one_minus = &Scalar::one() - &(&(&q() * &qb()) * &(&q() * &qb()));
        assert!(specialize(&one_minus, Regime::UnitCircle).is_zero());
    }

    #[test]
    fn star_examples() {
        assert_eq!(star(&q(), Regime::Generic), qb());
        let it = &Scalar::i() * &Scalar::t_half_pow(1);
        assert_eq!(star(&it, Regime::Generic), -&it);
        let s = &(&q() + &qb()) / &Scalar::t();
        assert_eq!(star(&star(&s, Regime::Generic), Regime::Generic), s);
        assert_eq!(star(&q(), Regime::UnitCircle), q().inv().unwrap());
        assert_eq!(star(&q(), Regime::RealQ), q());
    }

    #[test]
    fn numeric_examples() {
        let s = &q() + &q().inv().unwrap();
        let v = eval_numeric(&s, Complex64::new(1.0, 0.0), 1.0, Regime::Generic).unwrap();
        assert!((v - Complex64::new(2.0, 0.0)).norm() < 1e-14);
        let a = core::f64::consts::PI / 5.0;
        let qv = Complex64::new(libm::cos(a), libm::sin(a));
        let v = eval_numeric(&qb(), qv, 1.0, Regime::UnitCircle).unwrap();
        assert!((v - qv.conj()).norm() < 1e-14);
        assert!(matches!(
            eval_numeric(&s, Complex64::new(0.0, 1.0), 1.0, Regime::Generic),
            Err(EvalError::ExcludedQ(_))
        ));
        assert!(matches!(
            eval_numeric(&s, Complex64::new(2.0, 0.0), 1.0, Regime::UnitCircle),
            Err(EvalError::Domain { .. })
        ));
        let z = &q() - &Scalar::one();
        let pole = &Scalar::one() / &z;
        assert_eq!(eval_numeric(&pole, Complex64::new(1.0, 0.0), 1.0, Regime::Generic), Err(EvalError::DivisionByZero));
    }

    #[test]
    fn fraction_evaluates_like_its_parts() {
        // Second route: evaluate numerator and denominator separately after substitution.
        let a = core::f64::consts::PI / 5.0;
        let qv = Complex64::new(libm::cos(a), libm::sin(a));
        let num = &(&qb() * &qb()) - &(&q() * &q());
        let den = &(&qb() * &qb()) + &Scalar::one();
        let frac = &num / &den;
        let direct = eval_numeric(&frac, qv, 1.0, Regime::UnitCircle).unwrap();
        let qbv = qv.conj();
        let independent = (qbv * qbv - qv * qv) / (qbv * qbv + 1.0);
        assert!((direct - independent).norm() < 1e-12);
    }

    #[test]
    fn qb_minus_q_substitution() {
        let d = &(&qb() * &qb()) - &(&q() * &q());
        assert!(Substitution::qb_minus_q().apply(&d).is_zero());
        assert!(!Substitution::qb_minus_q().apply(&(&qb() - &q())).is_zero());
    }
}
