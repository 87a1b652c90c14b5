//! Construction of the named operators.

use alloc::string::String;
use alloc::vec;
use core::fmt;

use num_complex::Complex64;

use crate::coeff::{AtomValues, EvalError, Regime, Scalar, Substitution};
use crate::tensor::{Coefficient, Signature, TMap, TensorError};

fn sig(code: &str) -> Signature {
    Signature::from_code(code).expect("valid signature code")
}

/// Choice of `S` in the cross relations: `q^{-1/2}M` or `q^{1/2}M^{-1}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Variant {
    First,
    Second,
}

impl Variant {
    pub const BOTH: [Variant; 2] = [Variant::First, Variant::Second];

    pub fn index(self) -> usize {
        match self {
            Variant::First => 0,
            Variant::Second => 1,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Variant::First => "first",
            Variant::Second => "second",
        }
    }
}

/// Names accepted by [`Ops::named`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Name {
    E,
    EPrime,
    X,
    XInv,
    P,
    PPrime,
    Q,
    QPrime,
    M,
    MInv,
    K,
    KInv,
    RhatPlus,
    RhatMinus,
    RhatPlusInv,
    RhatMinusInv,
    PMinus,
    S(Variant),
    T(Variant),
    TPrime(Variant),
    What,
    PauliBasis,
}

impl Name {
    pub const ALL: [Name; 25] = [
        Name::E,
        Name::EPrime,
        Name::X,
        Name::XInv,
        Name::P,
        Name::PPrime,
        Name::Q,
        Name::QPrime,
        Name::M,
        Name::MInv,
        Name::K,
        Name::KInv,
        Name::RhatPlus,
        Name::RhatMinus,
        Name::RhatPlusInv,
        Name::RhatMinusInv,
        Name::PMinus,
        Name::S(Variant::First),
        Name::S(Variant::Second),
        Name::T(Variant::First),
        Name::T(Variant::Second),
        Name::TPrime(Variant::First),
        Name::TPrime(Variant::Second),
        Name::What,
        Name::PauliBasis,
    ];

    pub fn label(self) -> String {
        let s = match self {
            Name::E => "E",
            Name::EPrime => "E'",
            Name::X => "X",
            Name::XInv => "X^-1",
            Name::P => "P",
            Name::PPrime => "P'",
            Name::Q => "Q",
            Name::QPrime => "Q'",
            Name::M => "M",
            Name::MInv => "M^-1",
            Name::K => "K",
            Name::KInv => "K^-1",
            Name::RhatPlus => "Rhat+",
            Name::RhatMinus => "Rhat-",
            Name::RhatPlusInv => "Rhat+^-1",
            Name::RhatMinusInv => "Rhat-^-1",
            Name::PMinus => "Pminus",
            Name::S(v) => return alloc::format!("S({})", v.name()),
            Name::T(v) => return alloc::format!("T({})", v.name()),
            Name::TPrime(v) => return alloc::format!("T'({})", v.name()),
            Name::What => "What",
            Name::PauliBasis => "PauliBasis",
        };
        String::from(s)
    }

    /// Parses the labels produced by [`Name::label`].
    pub fn from_label(s: &str) -> Option<Name> {
        Name::ALL.iter().copied().find(|n| n.label() == s)
    }
}

impl fmt::Display for Name {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.label())
    }
}

/// Scalars that appear as coefficients inside identities.
#[derive(Clone, Debug)]
pub struct Consts<C> {
    pub q: C,
    pub q_inv: C,
    pub qb: C,
    pub qb_inv: C,
    pub t: C,
    pub t_inv: C,
    pub q_half: C,
    pub qb_half: C,
    /// The factor `c` with `Ŵ = c·R̂₋` for the first variant: `(qb/q)^{1/2}`.
    pub w_scale: C,
}

/// Every named operator of one regime, with entries of type `C`.
#[derive(Clone, Debug)]
pub struct Ops<C = Scalar> {
    pub regime: Regime,
    pub e: TMap<C>,
    pub ep: TMap<C>,
    pub x: TMap<C>,
    pub xi: TMap<C>,
    pub p: TMap<C>,
    pub pp: TMap<C>,
    pub q: TMap<C>,
    pub qp: TMap<C>,
    pub m: TMap<C>,
    pub mi: TMap<C>,
    pub k: TMap<C>,
    pub ki: TMap<C>,
    pub rp: TMap<C>,
    pub rm: TMap<C>,
    pub rpi: TMap<C>,
    pub rmi: TMap<C>,
    pub pminus: TMap<C>,
    /// `S` for each variant.
    pub s: [TMap<C>; 2],
    /// `τ S̄^{-1} τ` for each variant.
    pub s_dual: [TMap<C>; 2],
    /// `T = X₂₃S₁₂ : (U,U,B) → (U,B,U)`.
    pub t: [TMap<C>; 2],
    /// `T′ = (τS̄^{-1}τ)₂₃X^{-1}₁₂ : (B,U,B) → (U,B,B)`.
    pub tp: [TMap<C>; 2],
    /// `X₂₃S₁₂(τS̄^{-1}τ)₃₄X^{-1}₂₃` for each variant; index 0 is `Ŵ`.
    pub w: [TMap<C>; 2],
    pub consts: Consts<C>,
}

/// `X` in the rescaled form with parameter `t` and extra term `ε`: `(U,B) → (B,U)`.
pub fn x_matrix(t_inv: &Scalar, eps: i64) -> TMap {
    TMap::from_entries(
        sig("BU"),
        sig("UB"),
        vec![
            (0b00, 0b00, Scalar::one()),
            (0b11, 0b11, Scalar::one()),
            (0b00, 0b11, Scalar::from_int(eps)),
            (0b10, 0b01, t_inv.clone()),
            (0b01, 0b10, t_inv.clone()),
        ],
    )
}

/// Inverse of [`x_matrix`]: `(B,U) → (U,B)`.
pub fn x_inv_matrix(t: &Scalar, eps: i64) -> TMap {
    TMap::from_entries(
        sig("UB"),
        sig("BU"),
        vec![
            (0b00, 0b00, Scalar::one()),
            (0b11, 0b11, Scalar::one()),
            (0b00, 0b11, Scalar::from_int(-eps)),
            (0b01, 0b10, t.clone()),
            (0b10, 0b01, t.clone()),
        ],
    )
}

/// `X` with the unrescaled normalisation: `t^{1/2}`/`t^{-1/2}` weights (case 1) or
/// `q^{1/2}`/`q^{-1/2}` weights plus `±q^{1/2}` (case 2).
pub fn x_unrescaled(regime: Regime) -> TMap {
    let (big, small, extra) = match regime {
        Regime::Case2(s) => (Scalar::q_half_pow(1), Scalar::q_half_pow(-1), &Scalar::from_int(s.value()) * &Scalar::q_half_pow(1)),
        _ => (Scalar::t_half_pow(1), Scalar::t_half_pow(-1), Scalar::zero()),
    };
    TMap::from_entries(
        sig("BU"),
        sig("UB"),
        vec![
            (0b00, 0b00, big.clone()),
            (0b11, 0b11, big),
            (0b00, 0b11, extra),
            (0b10, 0b01, small.clone()),
            (0b01, 0b10, small),
        ],
    )
}

pub fn e_vector() -> TMap {
    TMap::from_rows(sig("UU"), sig(""), vec![Scalar::zero(), Scalar::one(), -Scalar::q(), Scalar::zero()])
}

pub fn e_functional() -> TMap {
    TMap::from_rows(sig(""), sig("UU"), vec![Scalar::zero(), -Scalar::q_half_pow(-2), Scalar::one(), Scalar::zero()])
}

/// Change of basis from Pauli components `x^j` to spinor components `x^{AB̄}`:
/// column `j` holds `σ_j` with `σ₀ = I`, `σ₁`, `σ₂`, `σ₃` the Pauli matrices.
pub fn pauli_basis() -> TMap {
    let i = Scalar::i();
    let one = Scalar::one;
    let z = Scalar::zero;
    // Rows: 11̄, 12̄, 21̄, 22̄.  Columns: σ₀..σ₃.
    let rows = vec![
        one(), z(), z(), one(),
        z(), one(), -&i, z(),
        z(), one(), i.clone(), z(),
        one(), z(), z(), -Scalar::one(),
    ];
    TMap::from_rows(sig("UB"), sig("UB"), rows)
}

/// Inverse of [`pauli_basis`]: `σ^{-1} = ½σ^†`.
pub fn pauli_basis_inv() -> TMap {
    let s = pauli_basis();
    let half = Scalar::ratio(1, 2);
    TMap::from_fn(sig("UB"), sig("UB"), |j, ab| {
        let v = s.get(ab, j);
        if v.is_zero() {
            Scalar::zero()
        } else {
            &v.star_generic() * &half
        }
    })
}

fn conj23<C: Coefficient>(x: &TMap<C>, xi: &TMap<C>, inner: &TMap<C>) -> Result<TMap<C>, TensorError> {
    let amb = sig("UBUB");
    let xi23 = xi.place(&[1, 2], &amb)?;
    let x23 = x.place(&[1, 2], inner.cod())?;
    TMap::chain(&[&x23, inner, &xi23])
}

impl Ops<Scalar> {
    /// Builds every operator over the generic field (with the regime's `ε`), then specialises.
    pub fn build(regime: Regime) -> Ops<Scalar> {
        let generic = Ops::build_generic(regime.epsilon());
        let mut o = generic.map(|s| crate::coeff::specialize(s, regime));
        o.regime = regime;
        o
    }

    /// Operators over the generic field with an explicit `ε`.
    pub fn build_generic(eps: i64) -> Ops<Scalar> {
        Ops::build_from_x(x_matrix(&Scalar::t_half_pow(-2), eps), x_inv_matrix(&Scalar::t(), eps))
    }

    /// Builds everything downstream of a given `X`, `X^{-1}` pair (used by negative controls).
    pub fn build_from_x(x: TMap, xi: TMap) -> Ops<Scalar> {
        let q = Scalar::q();
        let q_inv = Scalar::q_half_pow(-2);
        let e = e_vector();
        let ep = e_functional();
        let eep = e.compose(&ep).expect("E E'");
        let id_uu = TMap::identity(sig("UU"));
        let p = eep.scale(&-(&q + &q_inv).inv().expect("q + 1/q is nonzero"));
        let pp = id_uu.sub(&p).expect("same shape");
        let m = id_uu.scale(&q).add(&eep).expect("same shape");
        let mi = id_uu.scale(&q_inv).add(&eep).expect("same shape");
        let qm = p.tau_conjugate().expect("two legs");
        let id_bb = TMap::identity(sig("BB"));
        let qpm = id_bb.sub(&qm).expect("same shape");
        let k = m.tau_conjugate().expect("two legs");
        let ki = mi.tau_conjugate().expect("two legs");

        let c = |inner: &TMap| conj23(&x, &xi, inner).expect("typed conjugation");
        let rp = c(&m.kron(&k));
        let rm = c(&m.kron(&ki));
        let rpi = c(&mi.kron(&ki));
        let rmi = c(&mi.kron(&k));
        let pminus = c(&pp.kron(&qm).add(&p.kron(&qpm)).expect("same shape"));

        let s1 = m.scale(&Scalar::q_half_pow(-1));
        let s2 = mi.scale(&Scalar::q_half_pow(1));
        let s1_inv = mi.scale(&Scalar::q_half_pow(1));
        let s2_inv = m.scale(&Scalar::q_half_pow(-1));
        let d1 = s1_inv.tau_conjugate().expect("two legs");
        let d2 = s2_inv.tau_conjugate().expect("two legs");

        // T and T' carry the unrescaled X: t^{1/2} X (and t^{-1/2} X^{-1}); in case 2 t^{1/2} specialises to q^{1/2}.
        let x_full = x.scale(&Scalar::t_half_pow(1));
        let xi_full = xi.scale(&Scalar::t_half_pow(-1));
        let t_of = |s: &TMap| -> TMap {
            let amb = sig("UUB");
            let s12 = s.place(&[0, 1], &amb).expect("S on UU");
            let x23 = x_full.place(&[1, 2], s12.cod()).expect("X on UB");
            x23.compose(&s12).expect("typed")
        };
        let tp_of = |d: &TMap| -> TMap {
            let amb = sig("BUB");
            let xi12 = xi_full.place(&[0, 1], &amb).expect("X^-1 on BU");
            let d23 = d.place(&[1, 2], xi12.cod()).expect("dual on BB");
            d23.compose(&xi12).expect("typed")
        };
        let t = [t_of(&s1), t_of(&s2)];
        let tp = [tp_of(&d1), tp_of(&d2)];
        let w = [c(&s1.kron(&d1)), c(&s2.kron(&d2))];

        let consts = Consts {
            q: q.clone(),
            q_inv: q_inv.clone(),
            qb: Scalar::qb(),
            qb_inv: Scalar::qb().inv().expect("nonzero"),
            t: Scalar::t(),
            t_inv: Scalar::t_half_pow(-2),
            q_half: Scalar::q_half_pow(1),
            qb_half: Scalar::qb_half_pow(1),
            w_scale: &Scalar::qb_half_pow(1) * &Scalar::q_half_pow(-1),
        };
        Ops {
            regime: Regime::Generic,
            e,
            ep,
            x,
            xi,
            p,
            pp,
            q: qm,
            qp: qpm,
            m,
            mi,
            k,
            ki,
            rp,
            rm,
            rpi,
            rmi,
            pminus,
            s: [s1, s2],
            s_dual: [d1, d2],
            t,
            tp,
            w,
            consts,
        }
    }

    /// Applies an atom substitution to every entry.
    pub fn substitute(&self, s: &Substitution) -> Ops<Scalar> {
        self.map(|x| s.apply(x))
    }

    /// Samples every entry at the given atom values.
    pub fn eval(&self, v: &AtomValues) -> Result<Ops<Complex64>, EvalError> {
        let mut err = None;
        let out = self.map(|x| {
            if x.is_zero() {
                return Complex64::new(0.0, 0.0);
            }
            match crate::coeff::eval_at(x, v) {
                Ok(z) => z,
                Err(e) => {
                    err.get_or_insert(e);
                    Complex64::new(f64::NAN, f64::NAN)
                }
            }
        });
        match err {
            Some(e) => Err(e),
            None => Ok(out),
        }
    }

    /// The operator called `name`.
    pub fn named(&self, name: Name) -> TMap {
        match name {
            Name::PauliBasis => pauli_basis(),
            _ => self.named_ref(name).expect("operator present").clone(),
        }
    }
}

impl<C: Coefficient> Ops<C> {
    pub fn map<D, F: FnMut(&C) -> D>(&self, mut f: F) -> Ops<D> {
        let mut g = |m: &TMap<C>| m.map(&mut f);
        let e = g(&self.e);
        let ep = g(&self.ep);
        let x = g(&self.x);
        let xi = g(&self.xi);
        let p = g(&self.p);
        let pp = g(&self.pp);
        let q = g(&self.q);
        let qp = g(&self.qp);
        let m = g(&self.m);
        let mi = g(&self.mi);
        let k = g(&self.k);
        let ki = g(&self.ki);
        let rp = g(&self.rp);
        let rm = g(&self.rm);
        let rpi = g(&self.rpi);
        let rmi = g(&self.rmi);
        let pminus = g(&self.pminus);
        let s = [g(&self.s[0]), g(&self.s[1])];
        let s_dual = [g(&self.s_dual[0]), g(&self.s_dual[1])];
        let t = [g(&self.t[0]), g(&self.t[1])];
        let tp = [g(&self.tp[0]), g(&self.tp[1])];
        let w = [g(&self.w[0]), g(&self.w[1])];
        let k0 = &self.consts;
        let consts = Consts {
            q: f(&k0.q),
            q_inv: f(&k0.q_inv),
            qb: f(&k0.qb),
            qb_inv: f(&k0.qb_inv),
            t: f(&k0.t),
            t_inv: f(&k0.t_inv),
            q_half: f(&k0.q_half),
            qb_half: f(&k0.qb_half),
            w_scale: f(&k0.w_scale),
        };
        Ops {
            regime: self.regime,
            e,
            ep,
            x,
            xi,
            p,
            pp,
            q,
            qp,
            m,
            mi,
            k,
            ki,
            rp,
            rm,
            rpi,
            rmi,
            pminus,
            s,
            s_dual,
            t,
            tp,
            w,
            consts,
        }
    }

    fn named_ref(&self, name: Name) -> Option<&TMap<C>> {
        Some(match name {
            Name::E => &self.e,
            Name::EPrime => &self.ep,
            Name::X => &self.x,
            Name::XInv => &self.xi,
            Name::P => &self.p,
            Name::PPrime => &self.pp,
            Name::Q => &self.q,
            Name::QPrime => &self.qp,
            Name::M => &self.m,
            Name::MInv => &self.mi,
            Name::K => &self.k,
            Name::KInv => &self.ki,
            Name::RhatPlus => &self.rp,
            Name::RhatMinus => &self.rm,
            Name::RhatPlusInv => &self.rpi,
            Name::RhatMinusInv => &self.rmi,
            Name::PMinus => &self.pminus,
            Name::S(v) => &self.s[v.index()],
            Name::T(v) => &self.t[v.index()],
            Name::TPrime(v) => &self.tp[v.index()],
            Name::What => &self.w[0],
            Name::PauliBasis => return None,
        })
    }

    /// `R̂₊` or `R̂₋`, optionally inverted.
    pub fn rhat(&self, plus: bool, inverse: bool) -> &TMap<C> {
        match (plus, inverse) {
            (true, false) => &self.rp,
            (false, false) => &self.rm,
            (true, true) => &self.rpi,
            (false, true) => &self.rmi,
        }
    }

    /// `K^{+1}` or `K^{-1}`.
    pub fn k_sign(&self, plus: bool) -> &TMap<C> {
        if plus {
            &self.k
        } else {
            &self.ki
        }
    }

    /// `X₂₃ (inner) X^{-1}₂₃` for an `inner` on `(U,U,B,B)`.
    pub fn conj23(&self, inner: &TMap<C>) -> Result<TMap<C>, TensorError> {
        conj23(&self.x, &self.xi, inner)
    }
}

/// The exact scalar `Ŵ = c·R̂₋` predicted for a regime: `q^{-1}` on the unit circle,
/// `1` when `qb = q`, and `(qb/q)^{1/2}` generically.
pub fn wr_scalar(regime: Regime) -> Scalar {
    match regime {
        Regime::UnitCircle => Scalar::q_half_pow(-2),
        Regime::RealQ | Regime::Case2(_) => Scalar::one(),
        Regime::Generic => &Scalar::qb_half_pow(1) * &Scalar::q_half_pow(-1),
    }
}

