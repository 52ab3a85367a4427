use kurepa::kurepa::{gamma_cos, im_a, Evaluator};
use kurepa::Result;
use rayon::prelude::*;
use serde::Serialize;
use std::fmt::Write;

/// Column names of the table CSV.
pub const CSV_HEADER: &str = "x,re_A,im_A,beta,gamma,abs_err";

/// Largest table the CLI will emit.
pub const MAX_ROWS: usize = 1_000_000;

#[allow(non_snake_case)]
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct OutputRecord {
    pub x: f64,
    pub re_A: f64,
    pub im_A: f64,
    pub beta: f64,
    pub gamma_cos: f64,
    pub abs_err: f64,
}

impl OutputRecord {
    pub fn evaluate(ev: &Evaluator, x: f64) -> Result<Self> {
        let re = ev.re_a(x)?;
        let beta = ev.beta(x)?;
        Ok(Self {
            x,
            re_A: re.value,
            im_A: im_a(x)?,
            beta: beta.value,
            gamma_cos: gamma_cos(x),
            abs_err: re.abs_err,
        })
    }

    fn fields(&self) -> [f64; 6] {
        [self.x, self.re_A, self.im_A, self.beta, self.gamma_cos, self.abs_err]
    }

    pub fn csv_row(&self) -> String {
        self.fields().map(fmt_sig15).join(",")
    }

    /// The record with every field rounded to 15 significant digits.
    pub fn rounded(&self) -> Self {
        let r = |v: f64| fmt_sig15(v).parse::<f64>().unwrap_or(v);
        Self {
            x: r(self.x),
            re_A: r(self.re_A),
            im_A: r(self.im_A),
            beta: r(self.beta),
            gamma_cos: r(self.gamma_cos),
            abs_err: r(self.abs_err),
        }
    }
}

/// Scientific notation with 15 significant digits; negative zero prints as zero.
pub fn fmt_sig15(v: f64) -> String {
    let v = if v == 0.0 { 0.0 } else { v };
    format!("{v:.14e}")
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TableFormat {
    Csv,
    Json,
}

pub fn table_points(from: f64, to: f64, step: f64) -> Vec<f64> {
    let count = ((to - from) / step + 1e-9).floor() as usize + 1;
    (0..count).map(|i| from + step * i as f64).collect()
}

pub fn evaluate_all(ev: &Evaluator, xs: &[f64]) -> Result<Vec<OutputRecord>> {
    xs.par_iter().map(|&x| OutputRecord::evaluate(ev, x)).collect()
}

pub fn render(records: &[OutputRecord], format: TableFormat) -> String {
    match format {
        TableFormat::Csv => {
            let mut out = String::new();
            writeln!(out, "{CSV_HEADER}").unwrap();
            for r in records {
                writeln!(out, "{}", r.csv_row()).unwrap();
            }
            out
        }
        TableFormat::Json => {
            let rounded: Vec<OutputRecord> = records.iter().map(OutputRecord::rounded).collect();
            let mut s = serde_json::to_string_pretty(&rounded).expect("records serialize");
            s.push('\n');
            s
        }
    }
}
