//! Grid certification of the inequalities and the limit scan.

use super::bounds::{
    bound_ga1, bounds_ga2, bounds_ga3, bounds_ga4, check_gamma_dominance, RegionE, GRID_SLACK,
};
use crate::error::{domain, KurepaError, Result};
use crate::kurepa::Evaluator;
use crate::specfun::gamma;
use rayon::prelude::*;
use serde::Serialize;
use std::fmt;
use std::str::FromStr;

/// Gap allowed at the documented equality point of a verification run.
pub const ENDPOINT_TOL: f64 = 1e-7;

/// Largest argument accepted by [`limit_scan`].
pub const LIMIT_CEILING: f64 = 60.0;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum TheoremId {
    #[serde(rename = "GA1")]
    Ga1,
    #[serde(rename = "GA2")]
    Ga2,
    #[serde(rename = "GA3")]
    Ga3,
    #[serde(rename = "GA4")]
    Ga4,
    #[serde(rename = "LEMMA_GAMMA_GE")]
    LemmaGammaGe,
}

impl TheoremId {
    pub const ALL: [TheoremId; 5] = [
        TheoremId::Ga1,
        TheoremId::Ga2,
        TheoremId::Ga3,
        TheoremId::Ga4,
        TheoremId::LemmaGammaGe,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            TheoremId::Ga1 => "ga1",
            TheoremId::Ga2 => "ga2",
            TheoremId::Ga3 => "ga3",
            TheoremId::Ga4 => "ga4",
            TheoremId::LemmaGammaGe => "gamma-ge",
        }
    }

    /// Which side is attained at the equality point.
    pub fn tight_side(&self, k: u32) -> Side {
        match self {
            TheoremId::Ga2 => Side::Lower,
            TheoremId::Ga3 | TheoremId::Ga4 => Side::Upper,
            TheoremId::Ga1 | TheoremId::LemmaGammaGe => {
                let _ = k;
                Side::Upper
            }
        }
    }

    /// Where the grid starts; the inequality is only claimed from there on.
    pub fn grid_start(&self, k: u32) -> f64 {
        match self {
            TheoremId::LemmaGammaGe => -1.0,
            _ => k as f64 + 1.0,
        }
    }

    pub fn equality_x(&self, k: u32) -> f64 {
        match self {
            TheoremId::Ga1 => k as f64 + 2.0,
            TheoremId::LemmaGammaGe => 1.0,
            _ => k as f64 + 1.0,
        }
    }

    fn check_k(&self, k: u32) -> Result<()> {
        match self {
            TheoremId::LemmaGammaGe => Ok(()),
            _ if k < 1 => domain("k must be at least 1"),
            TheoremId::Ga2 if k.is_multiple_of(2) => domain(format!("GA2 needs odd k, got {k}")),
            TheoremId::Ga3 if k % 2 == 1 => domain(format!("GA3 needs even k, got {k}")),
            _ => Ok(()),
        }
    }
}

impl fmt::Display for TheoremId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for TheoremId {
    type Err = KurepaError;

    fn from_str(s: &str) -> Result<Self> {
        TheoremId::ALL
            .into_iter()
            .find(|t| t.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| KurepaError::Domain(format!("unknown theorem '{s}'")))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Side {
    Lower,
    Upper,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    Pass,
    Fail,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct GridSpec {
    pub start: f64,
    pub end: f64,
    pub count: usize,
}

impl GridSpec {
    pub fn points(&self) -> Vec<f64> {
        let step = (self.end - self.start) / (self.count - 1) as f64;
        (0..self.count)
            .map(|i| {
                if i + 1 == self.count {
                    self.end
                } else {
                    self.start + step * i as f64
                }
            })
            .collect()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct PointMargin {
    pub x: f64,
    /// `center - lower`; absent for one-sided statements.
    pub lower_margin: Option<f64>,
    /// `upper - center`.
    pub upper_margin: Option<f64>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Violation {
    pub x: f64,
    pub reason: String,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct EqualityCheck {
    pub x: f64,
    pub expected_side: Side,
    pub observed_side: Side,
    pub gap: f64,
    pub tight: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct VerificationReport {
    pub theorem: TheoremId,
    pub k: u32,
    pub grid: GridSpec,
    pub margins: Vec<PointMargin>,
    /// Grid points outside the region where the statement is claimed.
    pub excluded: Vec<f64>,
    pub violations: Vec<Violation>,
    pub equality_point: Option<EqualityCheck>,
    pub verdict: Verdict,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.verdict == Verdict::Pass
    }

    pub fn min_lower_margin(&self) -> Option<f64> {
        self.margins.iter().filter_map(|m| m.lower_margin).reduce(f64::min)
    }

    pub fn min_upper_margin(&self) -> Option<f64> {
        self.margins.iter().filter_map(|m| m.upper_margin).reduce(f64::min)
    }
}

/// Lower bound, center and upper bound of one statement at one point.
struct Sample {
    lower: Option<f64>,
    center: f64,
    upper: f64,
}

enum Outcome {
    Excluded,
    Evaluated(Sample),
}

fn sample(theorem: TheoremId, k: u32, x: f64, region: Option<&RegionE>) -> Result<Outcome> {
    if let Some(region) = region {
        if !region.contains(x) {
            return Ok(Outcome::Excluded);
        }
    }
    let s = match theorem {
        TheoremId::Ga1 => Sample {
            lower: None,
            center: bound_ga1(k, x)?,
            upper: 1.0,
        },
        TheoremId::LemmaGammaGe => {
            let g = gamma(x + 1.0)?;
            let d = check_gamma_dominance(x)?;
            Sample {
                lower: None,
                center: g - d.margin,
                upper: g,
            }
        }
        TheoremId::Ga2 | TheoremId::Ga3 | TheoremId::Ga4 => {
            let b = match theorem {
                TheoremId::Ga2 => bounds_ga2(k, x)?,
                TheoremId::Ga3 => bounds_ga3(k, x)?,
                _ => bounds_ga4(k, x)?,
            };
            Sample {
                lower: Some(b.lower),
                center: b.center,
                upper: b.upper,
            }
        }
    };
    Ok(Outcome::Evaluated(s))
}

/// Evaluates `theorem` on a uniform grid over `[start, x_max]`.
///
/// The grid starts at `k + 1` (for the gamma dominance lemma it starts just
/// above `-1`, the open end of its domain). Every point must satisfy the
/// inequality within [`GRID_SLACK`] relative to `max(1, |center|)`, and the
/// equality point must attain the expected side within [`ENDPOINT_TOL`].
pub fn verify_inequality(
    theorem: TheoremId,
    k: u32,
    x_max: f64,
    samples: usize,
) -> Result<VerificationReport> {
    theorem.check_k(k)?;
    if samples < 2 {
        return domain(format!("need at least 2 samples, got {samples}"));
    }
    let start = theorem.grid_start(k);
    if !(x_max > start) || !x_max.is_finite() {
        return domain(format!("x_max = {x_max} must exceed the grid start {start}"));
    }
    let grid = GridSpec {
        start,
        end: x_max,
        count: samples,
    };
    let mut points = grid.points();
    if theorem == TheoremId::LemmaGammaGe {
        // open interval at -1: shift the first point inward by one step
        points[0] = start + (x_max - start) / samples as f64;
    }

    let region = match theorem {
        TheoremId::Ga1 => Some(RegionE::with_root(k as f64)?),
        TheoremId::LemmaGammaGe => Some(RegionE::with_root(-1.0)?),
        _ => None,
    };

    let outcomes: Vec<(f64, Result<Outcome>)> = points
        .par_iter()
        .map(|&x| (x, sample(theorem, k, x, region.as_ref())))
        .collect();

    let mut margins = Vec::with_capacity(samples);
    let mut excluded = Vec::new();
    let mut violations = Vec::new();
    for (x, outcome) in outcomes {
        match outcome {
            Err(e) => violations.push(Violation {
                x,
                reason: format!("unevaluable: {e}"),
            }),
            Ok(Outcome::Excluded) => excluded.push(x),
            Ok(Outcome::Evaluated(s)) => {
                let slack = GRID_SLACK * s.center.abs().max(1.0);
                let lower_margin = s.lower.map(|l| s.center - l);
                let upper_margin = s.upper - s.center;
                if let Some(m) = lower_margin {
                    if let Some(reason) = margin_violation("lower", m, slack) {
                        violations.push(Violation { x, reason });
                    }
                }
                if let Some(reason) = margin_violation("upper", upper_margin, slack) {
                    violations.push(Violation { x, reason });
                }
                margins.push(PointMargin {
                    x,
                    lower_margin,
                    upper_margin: Some(upper_margin),
                });
            }
        }
    }

    let equality_point = match equality_check(theorem, k) {
        Ok(check) => {
            if !check.tight || check.observed_side != check.expected_side {
                violations.push(Violation {
                    x: check.x,
                    reason: format!(
                        "equality point not attained on the {:?} side (gap {:e})",
                        check.expected_side, check.gap
                    ),
                });
            }
            Some(check)
        }
        Err(e) => {
            violations.push(Violation {
                x: theorem.equality_x(k),
                reason: format!("equality point unevaluable: {e}"),
            });
            None
        }
    };

    let verdict = if violations.is_empty() {
        Verdict::Pass
    } else {
        Verdict::Fail
    };
    Ok(VerificationReport {
        theorem,
        k,
        grid,
        margins,
        excluded,
        violations,
        equality_point,
        verdict,
    })
}

fn margin_violation(side: &str, margin: f64, slack: f64) -> Option<String> {
    if !margin.is_finite() {
        Some(format!("{side} margin is not finite ({margin})"))
    } else if margin < -slack {
        Some(format!("{side} bound violated by {:e}", -margin))
    } else {
        None
    }
}

fn equality_check(theorem: TheoremId, k: u32) -> Result<EqualityCheck> {
    let x = theorem.equality_x(k);
    let s = match sample(theorem, k, x, None)? {
        Outcome::Evaluated(s) => s,
        Outcome::Excluded => unreachable!("no region passed"),
    };
    let upper_gap = (s.upper - s.center).abs();
    let lower_gap = s.lower.map(|l| (s.center - l).abs());
    let observed_side = match lower_gap {
        Some(lg) if lg < upper_gap => Side::Lower,
        _ => Side::Upper,
    };
    let expected_side = theorem.tight_side(k);
    let gap = match expected_side {
        Side::Lower => lower_gap.unwrap_or(f64::INFINITY),
        Side::Upper => upper_gap,
    };
    Ok(EqualityCheck {
        x,
        expected_side,
        observed_side,
        gap,
        tight: gap < ENDPOINT_TOL * s.center.abs().max(1.0),
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct LimitRow {
    pub x: f64,
    /// `Re A(x) / Gamma(x + 2)`.
    pub ratio2: f64,
    /// `Re A(x) / Gamma(x + 1)`.
    pub ratio1: f64,
}

/// Ratios of `Re A` to `Gamma(x+2)` and `Gamma(x+1)` on ascending `x` in `(2, 60]`.
pub fn limit_scan(xs: &[f64]) -> Result<Vec<LimitRow>> {
    for w in xs.windows(2) {
        if !(w[0] < w[1]) {
            return domain("limit scan arguments must be strictly ascending");
        }
    }
    let ev = Evaluator::default();
    xs.iter()
        .map(|&x| {
            if x > LIMIT_CEILING {
                return Err(KurepaError::Overflow(x));
            }
            if !(x > 2.0) {
                return domain(format!("limit scan needs x > 2, got {x}"));
            }
            let re = ev.re_a(x)?.value;
            Ok(LimitRow {
                x,
                ratio2: re / gamma(x + 2.0)?,
                ratio1: re / gamma(x + 1.0)?,
            })
        })
        .collect()
}
