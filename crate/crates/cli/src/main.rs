use clap::{Parser, Subcommand, ValueEnum};
use kurepa::TheoremId;
use kurepa_cli::output::TableFormat;
use kurepa_cli::{cmd_eval, cmd_roots, cmd_table, cmd_verify, evaluator, ExitStatus, ReportFormat, TOL_ENV};
use std::io::Write;
use std::process::ExitCode;

/// Alternating Kurepa function: evaluation, tables, constants and inequality checks.
#[derive(Parser)]
#[command(name = "alt-kurepa", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate Re A, Im A, beta and gamma at one point.
    Eval {
        #[arg(long, allow_negative_numbers = true)]
        x: f64,
        /// Print the exact integer A(n) for integer x >= 1.
        #[arg(long)]
        exact: bool,
        /// Relative quadrature tolerance (overrides ALT_KUREPA_TOL).
        #[arg(long)]
        tol: Option<f64>,
        #[arg(long, value_enum, default_value_t = Format::Csv)]
        format: Format,
    },
    /// Tabulate on an evenly spaced grid.
    Table {
        #[arg(long, allow_negative_numbers = true)]
        from: f64,
        #[arg(long, allow_negative_numbers = true)]
        to: f64,
        #[arg(long)]
        step: f64,
        #[arg(long, value_enum, default_value_t = Format::Csv)]
        format: Format,
        #[arg(long)]
        tol: Option<f64>,
    },
    /// Print the minimum of beta, the roots of Re A and 1 + e Ei(-1).
    Roots,
    /// Check an inequality on a grid; exit 1 on violation.
    Verify {
        #[arg(long, value_enum)]
        theorem: Theorem,
        #[arg(long, default_value_t = 1)]
        k: u32,
        #[arg(long)]
        x_max: f64,
        #[arg(long, default_value_t = 200)]
        samples: usize,
        #[arg(long, value_enum, default_value_t = Report::Text)]
        format: Report,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Csv,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum Report {
    Text,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum Theorem {
    Ga1,
    Ga2,
    Ga3,
    Ga4,
    GammaGe,
}

impl From<Format> for TableFormat {
    fn from(f: Format) -> Self {
        match f {
            Format::Csv => TableFormat::Csv,
            Format::Json => TableFormat::Json,
        }
    }
}

impl From<Theorem> for TheoremId {
    fn from(t: Theorem) -> Self {
        match t {
            Theorem::Ga1 => TheoremId::Ga1,
            Theorem::Ga2 => TheoremId::Ga2,
            Theorem::Ga3 => TheoremId::Ga3,
            Theorem::Ga4 => TheoremId::Ga4,
            Theorem::GammaGe => TheoremId::LemmaGammaGe,
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let env_tol = std::env::var(TOL_ENV).ok();

    let result = match cli.command {
        Command::Eval { x, exact, tol, format } => {
            evaluator(tol, env_tol.as_deref()).and_then(|ev| cmd_eval(&ev, x, exact, format.into()))
        }
        Command::Table { from, to, step, format, tol } => evaluator(tol, env_tol.as_deref())
            .and_then(|ev| cmd_table(&ev, from, to, step, format.into())),
        Command::Roots => cmd_roots(),
        Command::Verify { theorem, k, x_max, samples, format } => {
            let format = match format {
                Report::Text => ReportFormat::Text,
                Report::Json => ReportFormat::Json,
            };
            cmd_verify(theorem.into(), k, x_max, samples, format)
        }
    };

    match result {
        Ok(out) => {
            let mut stdout = std::io::stdout().lock();
            if stdout.write_all(out.stdout.as_bytes()).is_err() {
                return ExitCode::from(ExitStatus::Usage.code() as u8);
            }
            ExitCode::from(out.status.code() as u8)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(ExitStatus::Usage.code() as u8)
        }
    }
}
