//! Command-line surface: argument parsing and the six subcommands.

use std::f64::consts::PI;
use std::io::Write;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use num_complex::Complex64;
use qpoincare_core::algebras::braided::BraidedSquare;
use qpoincare_core::algebras::crossed::crossed_product;
use qpoincare_core::algebras::minkowski::{minkowski_length, published_tables, relation_integrity, X_NAMES};
use qpoincare_core::algebras::suites as alg;
use qpoincare_core::algebras::{minkowski_system, pbw_obstruction_generic, Source};
use qpoincare_core::coeff::{specialize, star, Regime, Scalar};
use qpoincare_core::intertwiners::{Ops, Variant};
use qpoincare_core::report::CheckReport;
use qpoincare_core::rewrite::{Alphabet, NCPoly, RewriteSystem};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::expr::{parse_expr, unicode, ExprError};
use crate::report::{to_json, to_text, SCHEMA_VERSION};
use crate::runner::{self, Suite};

pub const EXIT_OK: i32 = 0;
pub const EXIT_CHECK_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Parser)]
#[command(name = "qpoincare", version, about = "Exact verifier for quantum Lorentz intertwiners, quantum Minkowski space and braided Poincare structure")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

fn parse_regime(s: &str) -> Result<Regime, String> {
    Regime::from_name(s).ok_or_else(|| format!("unknown regime `{}` (generic, unit-circle, real-q, case2+, case2-)", s))
}

fn parse_q(s: &str) -> Result<Complex64, String> {
    let (re, im) = s.split_once(',').ok_or_else(|| String::from("expected RE,IM"))?;
    let re: f64 = re.trim().parse().map_err(|_| format!("bad real part `{}`", re))?;
    let im: f64 = im.trim().parse().map_err(|_| format!("bad imaginary part `{}`", im))?;
    Ok(Complex64::new(re, im))
}

#[derive(Debug, clap::Args)]
pub struct Output {
    #[arg(long, value_enum, default_value = "text")]
    pub format: Format,
    /// Also write the JSON report to this file.
    #[arg(long, value_name = "PATH")]
    pub json: Option<PathBuf>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Run check suites and report pass/fail.
    Verify {
        #[arg(long, value_parser = parse_regime, default_value = "unit-circle")]
        regime: Regime,
        #[arg(long, value_enum, default_value = "all")]
        suite: Suite,
        #[command(flatten)]
        out: Output,
    },
    /// Print the oriented Minkowski relations and their agreement with the published tables.
    Relations {
        #[arg(long, value_parser = parse_regime, default_value = "unit-circle")]
        regime: Regime,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
        #[arg(long)]
        unicode: bool,
    },
    /// Normal form of an expression (Minkowski, crossed or braided algebra, by the symbols used).
    Nf {
        #[arg(long, value_parser = parse_regime, default_value = "unit-circle")]
        regime: Regime,
        #[arg(long)]
        expr: String,
        #[arg(long)]
        unicode: bool,
    },
    /// The generic PBW obstruction and the selection rule.
    Obstruction {
        #[command(flatten)]
        out: Output,
    },
    /// The central length element.
    Length {
        #[arg(long, value_parser = parse_regime, default_value = "unit-circle")]
        regime: Regime,
        #[command(flatten)]
        out: Output,
    },
    /// Numeric mirror of the symbolic suites at sampled unit-circle points.
    Eval {
        #[arg(long, value_parser = parse_q, allow_hyphen_values = true)]
        q: Option<Complex64>,
        #[arg(long)]
        t: Option<f64>,
        #[arg(long, value_parser = parse_regime, default_value = "unit-circle")]
        regime: Regime,
        #[arg(long, default_value_t = 5)]
        samples: usize,
        #[arg(long, default_value_t = 1e-9)]
        tol: f64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[command(flatten)]
        out: Output,
    },
}

/// How far `|q|` may sit from 1 before `eval` refuses to project it onto the circle.
pub const UNIT_PROJECTION_TOL: f64 = 1e-4;

struct Io<'a> {
    out: &'a mut dyn Write,
    err: &'a mut dyn Write,
}

/// Parses `args` (including the program name) and runs; returns the exit code.
pub fn main_with<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    match Cli::try_parse_from(args) {
        Ok(cli) => run(cli.command, out, err),
        Err(e) => {
            let code = e.exit_code();
            if code == 0 {
                let _ = write!(out, "{}", e.render());
            } else {
                let _ = write!(err, "{}", e.render());
            }
            if code == 0 {
                EXIT_OK
            } else {
                EXIT_USAGE
            }
        }
    }
}

pub fn run(cmd: Command, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    let mut io = Io { out, err };
    let r = match cmd {
        Command::Verify { regime, suite, out } => verify(&mut io, regime, suite, &out),
        Command::Relations { regime, format, unicode } => relations(&mut io, regime, format, unicode),
        Command::Nf { regime, expr, unicode } => nf(&mut io, regime, &expr, unicode),
        Command::Obstruction { out } => obstruction(&mut io, &out),
        Command::Length { regime, out } => length(&mut io, regime, &out),
        Command::Eval { q, t, regime, samples, tol, seed, out } => eval(&mut io, q, t, regime, samples, tol, seed, &out),
    };
    match r {
        Ok(code) => code,
        Err(Failure::Usage(msg)) => {
            let _ = writeln!(io.err, "error: {}", msg);
            EXIT_USAGE
        }
        Err(Failure::Io(e)) => {
            let _ = writeln!(io.err, "error: {}", e);
            EXIT_CHECK_FAILED
        }
    }
}

enum Failure {
    Usage(String),
    Io(std::io::Error),
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::Io(e)
    }
}

impl From<ExprError> for Failure {
    fn from(e: ExprError) -> Self {
        Failure::Usage(e.to_string())
    }
}

fn emit(io: &mut Io, regime: Regime, reports: &[CheckReport], out: &Output) -> Result<i32, Failure> {
    let json = to_json(regime, reports);
    match out.format {
        Format::Text => write!(io.out, "{}", to_text(reports))?,
        Format::Json => writeln!(io.out, "{}", serde_json::to_string_pretty(&json).expect("serializable"))?,
    }
    if let Some(path) = &out.json {
        std::fs::write(path, serde_json::to_string_pretty(&json).expect("serializable"))?;
    }
    Ok(if runner::all_ok(reports) { EXIT_OK } else { EXIT_CHECK_FAILED })
}

fn verify(io: &mut Io, regime: Regime, suite: Suite, out: &Output) -> Result<i32, Failure> {
    let reports = runner::run(regime, suite);
    emit(io, regime, &reports, out)
}

#[derive(Serialize)]
struct RulesJson {
    version: u32,
    regime: String,
    order: Vec<&'static str>,
    confluent: bool,
    rules: Vec<RuleJson>,
    tables: Vec<TableJson>,
}

#[derive(Serialize)]
struct RuleJson {
    lhs: String,
    rhs: String,
}

#[derive(Serialize)]
struct TableJson {
    name: String,
    spans_match: bool,
}

fn relations(io: &mut Io, regime: Regime, format: Format, uni: bool) -> Result<i32, Failure> {
    let m = minkowski_system(regime, Source::Derived).map_err(|e| Failure::Usage(e.to_string()))?;
    let al = m.alphabet();
    let pretty = |s: String| if uni { unicode(&s) } else { s };
    let rules: Vec<RuleJson> = m
        .system
        .rules()
        .iter()
        .map(|r| RuleJson { lhs: pretty(al.fmt_word(&r.lhs_word())), rhs: pretty(r.rhs.display(al)) })
        .collect();
    let integrity = relation_integrity(regime);
    let tables: Vec<TableJson> = integrity.iter().map(|(n, ok)| TableJson { name: n.clone(), spans_match: *ok }).collect();
    let confluent = m.system.check_confluence().is_empty();
    let order: Vec<&'static str> = m.order.iter().map(|&i| X_NAMES[i]).collect();
    match format {
        Format::Json => {
            let j = RulesJson { version: SCHEMA_VERSION, regime: regime.name().into(), order, confluent, rules, tables };
            writeln!(io.out, "{}", serde_json::to_string_pretty(&j).expect("serializable"))?;
        }
        Format::Text => {
            writeln!(io.out, "regime: {}", regime)?;
            writeln!(io.out, "generator order: {}", pretty(order.join(" < ")))?;
            writeln!(io.out, "rules ({}):", if confluent { "confluent" } else { "not confluent" })?;
            for r in &rules {
                writeln!(io.out, "  {} -> {}", r.lhs, r.rhs)?;
            }
            let names: Vec<String> = published_tables(regime).into_iter().map(|t| t.name.to_string()).collect();
            writeln!(io.out, "published tables: {}", names.join(", "))?;
            for t in &tables {
                writeln!(io.out, "  {:<28} {}", t.name, if t.spans_match { "same span" } else { "DIFFERENT span" })?;
            }
        }
    }
    Ok(if integrity.iter().all(|(_, ok)| *ok) { EXIT_OK } else { EXIT_CHECK_FAILED })
}

/// The algebras `nf` may reduce in, smallest first.
fn nf_systems(regime: Regime) -> Result<Vec<(&'static str, RewriteSystem)>, Failure> {
    let usage = |e: qpoincare_core::algebras::AlgebraError| Failure::Usage(e.to_string());
    let m = minkowski_system(regime, Source::Derived).map_err(usage)?;
    let cp = crossed_product(regime, Variant::First).map_err(usage)?;
    let o = Ops::build(regime);
    let sq = BraidedSquare::new(&o.w[0], &m.system, m.order, Scalar::q_half_pow(-2), regime).map_err(usage)?;
    Ok(vec![("minkowski", m.system), ("crossed", cp.system), ("braided", sq.full)])
}

fn nf(io: &mut Io, regime: Regime, src: &str, uni: bool) -> Result<i32, Failure> {
    let conj = move |c: &Scalar| star(c, regime);
    let systems = nf_systems(regime)?;
    let mut last = None;
    for (name, sys) in &systems {
        match parse_expr(src, sys.alphabet(), &conj) {
            Ok(p) => {
                let p = p.map_coeffs(|c| specialize(c, regime));
                let r = sys.normal_form(&p).display(sys.alphabet());
                writeln!(io.out, "{}", if uni { unicode(&r) } else { r })?;
                if regime == Regime::Generic {
                    writeln!(io.err, "note: the generic {} rules are not confluent; this is the leftmost-first normal form", name)?;
                }
                return Ok(EXIT_OK);
            }
            Err(e @ ExprError::UnknownSymbol { .. }) => last = Some(e),
            Err(e) => return Err(e.into()),
        }
    }
    Err(last.expect("at least one system").into())
}

fn obstruction(io: &mut Io, out: &Output) -> Result<i32, Failure> {
    let reports = alg::check_obstruction();
    if out.format == Format::Text {
        if let Ok(p) = pbw_obstruction_generic() {
            let al = qpoincare_core::algebras::minkowski::canonical_alphabet();
            writeln!(io.out, "overlap gamma*beta*alpha, (via beta*alpha) - (via gamma*beta):")?;
            writeln!(io.out, "  {}", p.difference.display(&al))?;
            writeln!(io.out, "coefficient at alpha*alpha*delta: {}", p.aad)?;
            writeln!(io.out, "coefficient at alpha*beta*gamma:  {}", p.abg)?;
        }
    }
    emit(io, Regime::Generic, &reports, out)
}

fn length(io: &mut Io, regime: Regime, out: &Output) -> Result<i32, Failure> {
    let reports = alg::check_length(regime);
    if out.format == Format::Text {
        if let Ok(m) = minkowski_system(regime, Source::Derived) {
            let l = minkowski_length(&m);
            writeln!(io.out, "l = {}", l.ell.display(m.alphabet()))?;
            if let Some(c) = &l.c {
                writeln!(io.out, "l = c*(alpha*delta/(2z) + delta*alpha/(2 zbar) - gamma^* gamma), c = {}", c)?;
            }
        }
    }
    emit(io, regime, &reports, out)
}

/// Puts `q` exactly on the unit circle when it is within [`UNIT_PROJECTION_TOL`] of it.
pub fn project_to_circle(q: Complex64) -> Result<Complex64, String> {
    let n = q.norm();
    if (n - 1.0).abs() < UNIT_PROJECTION_TOL {
        Ok(q / n)
    } else {
        Err(format!("|q| = {} is not on the unit circle", n))
    }
}

/// Seeded unit-circle sample avoiding the excluded points `q = ±i` and the branch cut.
pub fn sample_q(rng: &mut ChaCha8Rng) -> Complex64 {
    loop {
        let th: f64 = rng.gen_range(-PI..PI);
        let bad = [-PI, -PI / 2.0, 0.0, PI / 2.0, PI].iter().any(|&b| (th - b).abs() < 0.05);
        if !bad {
            return Complex64::from_polar(1.0, th);
        }
    }
}

/// Sample points: the given `q` (if any) then seeded random ones, `samples` in total.
pub fn sample_points(q: Option<Complex64>, t: Option<f64>, samples: usize, seed: u64) -> Vec<(Complex64, f64)> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut pts = Vec::new();
    if let Some(q) = q {
        pts.push((q, t.unwrap_or(2.0)));
    }
    let mut k = 0;
    while pts.len() < samples.max(1) {
        let tv = t.unwrap_or(if k % 2 == 0 { 0.5 } else { 2.0 });
        pts.push((sample_q(&mut rng), tv));
        k += 1;
    }
    pts
}

#[allow(clippy::too_many_arguments)]
fn eval(
    io: &mut Io,
    q: Option<Complex64>,
    t: Option<f64>,
    regime: Regime,
    samples: usize,
    tol: f64,
    seed: u64,
    out: &Output,
) -> Result<i32, Failure> {
    if regime != Regime::UnitCircle {
        return Err(Failure::Usage(String::from("numeric evaluation mirrors the unit-circle suites; use --regime unit-circle")));
    }
    let q = match q {
        Some(q) => {
            let p = project_to_circle(q).map_err(Failure::Usage)?;
            if p != q {
                writeln!(io.err, "note: q projected onto the unit circle: {} -> {}", q, p)?;
            }
            Some(p)
        }
        None => None,
    };
    if let Some(t) = t {
        if !(t > 0.0 && t.is_finite()) {
            return Err(Failure::Usage(format!("t must be positive, got {}", t)));
        }
    }
    let mut all = Vec::new();
    for (k, (qv, tv)) in sample_points(q, t, samples, seed).into_iter().enumerate() {
        let reps = runner::run_numeric(qv, tv, tol).map_err(Failure::Usage)?;
        let point = format!("q = {:.6}{:+.6}i, t = {}", qv.re, qv.im, tv);
        if out.format == Format::Text {
            let worst = reps
                .iter()
                .filter(|r| r.expect == qpoincare_core::report::Expect::Zero)
                .filter_map(|r| r.residual.as_deref()?.strip_prefix("max-norm ")?.parse::<f64>().ok())
                .fold(0.0, f64::max);
            writeln!(io.out, "sample {}: {} ({} checks, max expected-zero residual norm {:.3e})", k, point, reps.len(), worst)?;
        }
        all.extend(reps.into_iter().map(|mut r| {
            r.check_id = format!("sample-{}.{}", k, r.check_id);
            r.detail = Some(point.clone());
            r
        }));
    }
    emit(io, regime, &all, out)
}

/// Used by `nf` callers that want to parse against one specific alphabet.
pub fn parse_in(src: &str, alphabet: &Alphabet, regime: Regime) -> Result<NCPoly, ExprError> {
    parse_expr(src, alphabet, &move |c: &Scalar| star(c, regime)).map(|p| p.map_coeffs(|c| specialize(c, regime)))
}
