//! Suite selection, concurrent execution and timing.

use std::thread;
use std::time::Instant;

use num_complex::Complex64;
use qpoincare_core::algebras::suites as alg;
use qpoincare_core::coeff::Regime;
use qpoincare_core::intertwiners::suites as int;
use qpoincare_core::intertwiners::Variant;
use qpoincare_core::report::CheckReport;

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Suite {
    All,
    Moves,
    Braid,
    Spectral,
    Compat,
    Crossed,
    Pbw,
    Delta,
    Length,
}

type Group = Box<dyn Fn() -> Vec<CheckReport> + Send + Sync>;

fn group(f: impl Fn() -> Vec<CheckReport> + Send + Sync + 'static) -> Group {
    Box::new(f)
}

/// The check groups making up `suite` in `regime`.
fn groups(regime: Regime, suite: Suite) -> Vec<Group> {
    let r = regime;
    let generic = r == Regime::Generic;
    let mut g: Vec<Group> = Vec::new();
    let want = |s: Suite| suite == Suite::All || suite == s;
    if want(Suite::Moves) {
        g.push(group(move || int::check_elementary_moves(r)));
        if generic {
            g.push(group(int::check_moves_negative_control));
        }
    }
    if want(Suite::Braid) {
        g.push(group(move || int::check_braid(true, r)));
        g.push(group(move || int::check_braid(false, r)));
    }
    if want(Suite::Spectral) {
        g.push(group(move || int::check_spectral(r)));
    }
    if want(Suite::Compat) {
        g.push(group(move || int::check_translation_compat(r)));
    }
    if want(Suite::Crossed) {
        for v in Variant::BOTH {
            g.push(group(move || int::check_crossed_identities(r, v)));
        }
        if generic {
            g.push(group(|| vec![int::check_s_uniqueness()]));
        }
        g.push(group(move || alg::check_crossed_algebra(r)));
    }
    if want(Suite::Pbw) {
        g.push(group(move || alg::check_relations(r)));
        g.push(group(move || alg::check_pbw(r)));
        if generic {
            g.push(group(alg::check_obstruction));
        }
    }
    if want(Suite::Delta) {
        g.push(group(move || alg::check_braided(r)));
    }
    if want(Suite::Length) {
        g.push(group(move || alg::check_length(r)));
    }
    if suite == Suite::All {
        g.push(group(move || int::check_vector_components(r)));
        g.push(group(move || int::check_operators(r)));
        g.push(group(move || int::check_branch_flips(r)));
        if generic {
            g.push(group(int::check_classical_limit));
            g.push(group(alg::check_algebra_classical));
        }
    }
    g
}

/// Runs the groups concurrently; each report carries the wall time of the group that
/// produced it. Output is sorted by check id.
pub fn run(regime: Regime, suite: Suite) -> Vec<CheckReport> {
    let gs = groups(regime, suite);
    let mut out: Vec<CheckReport> = thread::scope(|s| {
        let handles: Vec<_> = gs
            .iter()
            .map(|g| {
                s.spawn(move || {
                    let t0 = Instant::now();
                    let mut reps = g();
                    let dt = t0.elapsed();
                    for r in &mut reps {
                        r.elapsed = Some(dt);
                    }
                    reps
                })
            })
            .collect();
        handles.into_iter().flat_map(|h| h.join().expect("suite thread panicked")).collect()
    });
    out.sort_by(|a, b| a.check_id.cmp(&b.check_id));
    out
}

/// Numeric mirror of the unit-circle suites at one sample point.
pub fn run_numeric(q: Complex64, t: f64, tol: f64) -> Result<Vec<CheckReport>, String> {
    let t0 = Instant::now();
    let mut out = int::numeric_suite(q, t, tol).map_err(|e| e.to_string())?;
    out.extend(alg::numeric_algebra_suite(q, t, tol).map_err(|e| e.to_string())?);
    let dt = t0.elapsed();
    for r in &mut out {
        r.elapsed = Some(dt);
    }
    out.sort_by(|a, b| a.check_id.cmp(&b.check_id));
    Ok(out)
}

/// `true` when nothing failed unexpectedly (skips do not count as failures).
pub fn all_ok(reports: &[CheckReport]) -> bool {
    reports.iter().all(|r| r.status != qpoincare_core::report::Status::Fail)
}
