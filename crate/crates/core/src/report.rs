//! Structured check outcomes shared by every suite.

use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::time::Duration;

use num_complex::Complex64;

use crate::coeff::{Regime, Scalar};
use crate::tensor::{Leg, Signature, TMap};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Status {
    Pass,
    Fail,
    Skipped,
}

impl Status {
    pub fn name(self) -> &'static str {
        match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::Skipped => "skipped",
        }
    }
}

/// What a check expects of its residual. Negative controls expect a nonzero residual.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Expect {
    Zero,
    NonZero,
}

#[derive(Clone, Debug, PartialEq)]
pub struct CheckReport {
    pub check_id: String,
    pub regime: Regime,
    pub status: Status,
    pub expect: Expect,
    /// First nonzero residual entry, or a short description of what went wrong.
    pub residual: Option<String>,
    /// Extra facts a check wants on record (computed constants, factorisations).
    pub detail: Option<String>,
    /// Filled in by the runner.
    pub elapsed: Option<Duration>,
}

impl CheckReport {
    /// Report for a residual that vanished (`true`) or not, judged against `expect`.
    pub fn from_outcome(id: impl Into<String>, regime: Regime, expect: Expect, vanished: bool, residual: Option<String>) -> Self {
        let ok = match expect {
            Expect::Zero => vanished,
            Expect::NonZero => !vanished,
        };
        CheckReport {
            check_id: id.into(),
            regime,
            status: if ok { Status::Pass } else { Status::Fail },
            expect,
            residual,
            detail: None,
            elapsed: None,
        }
    }

    /// A plain predicate check.
    pub fn predicate(id: impl Into<String>, regime: Regime, ok: bool, residual: Option<String>) -> Self {
        CheckReport::from_outcome(id, regime, Expect::Zero, ok, if ok { None } else { residual })
    }

    pub fn skipped(id: impl Into<String>, regime: Regime, why: impl Into<String>) -> Self {
        CheckReport {
            check_id: id.into(),
            regime,
            status: Status::Skipped,
            expect: Expect::Zero,
            residual: None,
            detail: Some(why.into()),
            elapsed: None,
        }
    }

    pub fn with_detail(mut self, d: impl Into<String>) -> Self {
        self.detail = Some(d.into());
        self
    }

    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }
}

/// A named identity given by one or more residuals `lhs − rhs`, exact or sampled.
///
/// With [`Expect::Zero`] the check passes when every part vanishes; with
/// [`Expect::NonZero`] it passes when some part does not.
#[derive(Clone, Debug)]
pub struct Check<C> {
    pub id: String,
    pub expect: Expect,
    pub parts: Vec<(String, TMap<C>)>,
}

impl<C> Check<C> {
    pub fn zero(id: impl Into<String>, residual: TMap<C>) -> Self {
        Check { id: id.into(), expect: Expect::Zero, parts: alloc::vec![(String::new(), residual)] }
    }

    pub fn nonzero(id: impl Into<String>, residual: TMap<C>) -> Self {
        Check { id: id.into(), expect: Expect::NonZero, parts: alloc::vec![(String::new(), residual)] }
    }

    pub fn multi(id: impl Into<String>, expect: Expect, parts: Vec<(String, TMap<C>)>) -> Self {
        Check { id: id.into(), expect, parts }
    }
}

/// Basis label of an index, e.g. `1 2̄ 1`.
pub fn index_label(sig: &Signature, idx: usize) -> String {
    let n = sig.len();
    let parts: Vec<String> = sig
        .legs()
        .iter()
        .enumerate()
        .map(|(p, l)| {
            let v = crate::tensor::leg_bit(idx, p, n) + 1;
            match l {
                Leg::U => v.to_string(),
                Leg::B => format!("{}\u{304}", v),
            }
        })
        .collect();
    if parts.is_empty() {
        String::from("·")
    } else {
        parts.join(" ")
    }
}

/// Describes the first nonzero entry of an exact residual.
pub fn describe_residual(m: &TMap<Scalar>) -> Option<String> {
    m.first_nonzero().map(|(i, j, v)| {
        format!("[{} | {}] = {}", index_label(m.cod(), i), index_label(m.dom(), j), v)
    })
}

fn tag(part: &str, body: String) -> String {
    if part.is_empty() {
        body
    } else {
        format!("{}: {}", part, body)
    }
}

impl Check<Scalar> {
    pub fn report(&self, regime: Regime) -> CheckReport {
        let first = self
            .parts
            .iter()
            .find_map(|(name, m)| describe_residual(m).map(|d| tag(name, d)));
        let vanished = first.is_none();
        let residual = match self.expect {
            Expect::Zero => first,
            Expect::NonZero => first.or_else(|| Some(String::from("residual vanishes identically"))),
        };
        CheckReport::from_outcome(self.id.clone(), regime, self.expect, vanished, residual)
    }
}

impl Check<Complex64> {
    /// Numeric verdict: the residual vanishes when its max-norm is below `tol`.
    pub fn report_numeric(&self, regime: Regime, tol: f64) -> CheckReport {
        let norm = self.max_norm();
        CheckReport::from_outcome(self.id.clone(), regime, self.expect, norm < tol, Some(format!("max-norm {:.3e}", norm)))
    }

    pub fn max_norm(&self) -> f64 {
        self.parts.iter().map(|(_, m)| m.max_norm()).fold(0.0, f64::max)
    }
}
