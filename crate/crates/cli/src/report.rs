//! Text and JSON rendering of check reports.

use qpoincare_core::coeff::Regime;
use qpoincare_core::report::{CheckReport, Expect, Status};
use serde::Serialize;

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Debug, Serialize)]
pub struct CheckJson {
    pub check_id: String,
    pub regime: String,
    pub status: &'static str,
    pub expect: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub residual: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
    pub elapsed_ms: f64,
}

#[derive(Debug, Default, Serialize, Clone, Copy, PartialEq, Eq)]
pub struct Summary {
    pub passed: usize,
    pub failed: usize,
    pub skipped: usize,
}

impl Summary {
    pub fn of(reports: &[CheckReport]) -> Summary {
        let mut s = Summary::default();
        for r in reports {
            match r.status {
                Status::Pass => s.passed += 1,
                Status::Fail => s.failed += 1,
                Status::Skipped => s.skipped += 1,
            }
        }
        s
    }
}

#[derive(Debug, Serialize)]
pub struct ReportJson {
    pub version: u32,
    pub regime: String,
    pub checks: Vec<CheckJson>,
    pub summary: Summary,
}

fn expect_name(e: Expect) -> &'static str {
    match e {
        Expect::Zero => "zero",
        Expect::NonZero => "nonzero",
    }
}

pub fn to_json(regime: Regime, reports: &[CheckReport]) -> ReportJson {
    ReportJson {
        version: SCHEMA_VERSION,
        regime: regime.name().to_string(),
        checks: reports
            .iter()
            .map(|r| CheckJson {
                check_id: r.check_id.clone(),
                regime: r.regime.name().to_string(),
                status: r.status.name(),
                expect: expect_name(r.expect),
                residual: r.residual.clone(),
                detail: r.detail.clone(),
                elapsed_ms: r.elapsed.map(|d| d.as_secs_f64() * 1e3).unwrap_or(0.0),
            })
            .collect(),
        summary: Summary::of(reports),
    }
}

/// One line per check, with residual and detail indented below.
pub fn to_text(reports: &[CheckReport]) -> String {
    let mut out = String::new();
    for r in reports {
        let tag = match (r.status, r.expect) {
            (Status::Pass, Expect::NonZero) => "PASS (expected nonzero)",
            (Status::Pass, Expect::Zero) => "PASS",
            (Status::Fail, _) => "FAIL",
            (Status::Skipped, _) => "SKIP",
        };
        let ms = r.elapsed.map(|d| format!(" [{:.1} ms]", d.as_secs_f64() * 1e3)).unwrap_or_default();
        out.push_str(&format!("{:<24} {} ({}){}\n", tag, r.check_id, r.regime, ms));
        if let Some(res) = &r.residual {
            out.push_str(&format!("    residual: {}\n", res));
        }
        if let Some(d) = &r.detail {
            for line in d.lines() {
                out.push_str(&format!("    {}\n", line));
            }
        }
    }
    let s = Summary::of(reports);
    out.push_str(&format!("{} checks: {} passed, {} failed, {} skipped\n", reports.len(), s.passed, s.failed, s.skipped));
    out
}
