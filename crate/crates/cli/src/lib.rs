//! Command implementations behind the `alt-kurepa` binary. Each command
//! renders its full output into a string so tests can call it in-process.

#![allow(clippy::neg_cmp_op_on_partial_ord)] // `!(a < b)` deliberately rejects NaN

pub mod output;

use kurepa::analysis::{constants, verify_inequality, TheoremId, VerificationReport};
use kurepa::kurepa::{EvalMode, Evaluator, ReValue, DOMAIN_LOWER, TAU_BOUND};
use kurepa::specfun::{MAX_REL_TOL, MIN_REL_TOL};
use kurepa::{KurepaError, Result};
use output::{evaluate_all, render, table_points, OutputRecord, TableFormat, MAX_ROWS};
use std::fmt::Write;

/// Environment variable overriding the default quadrature tolerance.
pub const TOL_ENV: &str = "ALT_KUREPA_TOL";

/// Process exit codes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ExitStatus {
    Success = 0,
    Violation = 1,
    Usage = 2,
}

impl ExitStatus {
    pub fn code(self) -> i32 {
        self as i32
    }
}

pub struct CommandOutput {
    pub stdout: String,
    pub status: ExitStatus,
}

impl CommandOutput {
    fn ok(stdout: String) -> Self {
        Self {
            stdout,
            status: ExitStatus::Success,
        }
    }
}

/// Builds the evaluator from an explicit `--tol`, then `ALT_KUREPA_TOL`, then the default.
pub fn evaluator(tol: Option<f64>, env_tol: Option<&str>) -> Result<Evaluator> {
    let tol = match (tol, env_tol) {
        (Some(t), _) => Some(t),
        (None, Some(raw)) => Some(raw.trim().parse::<f64>().map_err(|_| {
            KurepaError::Domain(format!("{TOL_ENV}='{raw}' is not a number"))
        })?),
        (None, None) => None,
    };
    match tol {
        None => Ok(Evaluator::default()),
        Some(t) if (MIN_REL_TOL..=MAX_REL_TOL).contains(&t) => {
            Evaluator::new(t, kurepa::specfun::DEFAULT_MAX_SUBDIVISIONS)
        }
        Some(t) => Err(KurepaError::Domain(format!(
            "tolerance {t:e} outside [{MIN_REL_TOL:e}, {MAX_REL_TOL:e}]"
        ))),
    }
}

pub fn cmd_eval(ev: &Evaluator, x: f64, exact: bool, format: TableFormat) -> Result<CommandOutput> {
    let mode = if exact { EvalMode::Exact } else { EvalMode::Quadrature };
    if let ReValue::Exact(v) = ev.re_a_mode(x, mode)? {
        return Ok(CommandOutput::ok(format!("{v}\n")));
    }
    let record = OutputRecord::evaluate(ev, x)?;
    let out = match format {
        TableFormat::Csv => render(&[record], TableFormat::Csv),
        TableFormat::Json => {
            let mut s = serde_json::to_string_pretty(&record.rounded()).expect("record serializes");
            s.push('\n');
            s
        }
    };
    Ok(CommandOutput::ok(out))
}

pub fn cmd_table(
    ev: &Evaluator,
    from: f64,
    to: f64,
    step: f64,
    format: TableFormat,
) -> Result<CommandOutput> {
    if ![from, to, step].iter().all(|v| v.is_finite()) {
        return Err(KurepaError::Domain("table bounds must be finite".into()));
    }
    if from <= DOMAIN_LOWER + TAU_BOUND {
        return Err(KurepaError::Domain(format!(
            "--from {from} must exceed -2 + {TAU_BOUND:e}"
        )));
    }
    if !(from < to) {
        return Err(KurepaError::Domain(format!("--from {from} must be below --to {to}")));
    }
    if !(step > 0.0) {
        return Err(KurepaError::Domain(format!("--step {step} must be positive")));
    }
    if (to - from) / step >= MAX_ROWS as f64 {
        return Err(KurepaError::Domain(format!("table would exceed {MAX_ROWS} rows")));
    }
    let xs = table_points(from, to, step);
    let records = evaluate_all(ev, &xs)?;
    Ok(CommandOutput::ok(render(&records, format)))
}

pub fn cmd_roots() -> Result<CommandOutput> {
    let c = constants()?;
    let mut out = String::new();
    for (name, v) in [
        ("x0", c.x0),
        ("beta_min", c.beta_min),
        ("x1", c.x1),
        ("x2", c.x2),
        ("ei_constant", c.ei_constant),
    ] {
        let v = if v == 0.0 { 0.0 } else { v };
        writeln!(out, "{name} = {v:.9}").unwrap();
    }
    Ok(CommandOutput::ok(out))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ReportFormat {
    Text,
    Json,
}

pub fn cmd_verify(
    theorem: TheoremId,
    k: u32,
    x_max: f64,
    samples: usize,
    format: ReportFormat,
) -> Result<CommandOutput> {
    let report = verify_inequality(theorem, k, x_max, samples)?;
    let stdout = match format {
        ReportFormat::Json => {
            let mut s = serde_json::to_string_pretty(&report).expect("report serializes");
            s.push('\n');
            s
        }
        ReportFormat::Text => render_report(&report),
    };
    Ok(CommandOutput {
        stdout,
        status: if report.passed() {
            ExitStatus::Success
        } else {
            ExitStatus::Violation
        },
    })
}

fn render_report(r: &VerificationReport) -> String {
    let mut s = String::new();
    let opt = |v: Option<f64>| v.map_or_else(|| "n/a".to_string(), output::fmt_sig15);
    writeln!(s, "theorem: {}", r.theorem).unwrap();
    writeln!(s, "k: {}", r.k).unwrap();
    writeln!(
        s,
        "grid: [{}, {}] with {} samples",
        output::fmt_sig15(r.grid.start),
        output::fmt_sig15(r.grid.end),
        r.grid.count
    )
    .unwrap();
    writeln!(s, "evaluated: {}, excluded: {}", r.margins.len(), r.excluded.len()).unwrap();
    writeln!(s, "min lower margin: {}", opt(r.min_lower_margin())).unwrap();
    writeln!(s, "min upper margin: {}", opt(r.min_upper_margin())).unwrap();
    match &r.equality_point {
        Some(eq) => writeln!(
            s,
            "equality point: x = {}, expected {:?}, observed {:?}, gap {}",
            output::fmt_sig15(eq.x),
            eq.expected_side,
            eq.observed_side,
            output::fmt_sig15(eq.gap)
        )
        .unwrap(),
        None => writeln!(s, "equality point: unevaluable").unwrap(),
    }
    writeln!(s, "violations: {}", r.violations.len()).unwrap();
    for v in &r.violations {
        writeln!(s, "  x = {}: {}", output::fmt_sig15(v.x), v.reason).unwrap();
    }
    writeln!(s, "verdict: {}", if r.passed() { "PASS" } else { "FAIL" }).unwrap();
    s
}
