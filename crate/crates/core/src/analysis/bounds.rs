//! Gamma dominance and the double inequalities bounding `Re A(x) / Gamma(x+2)`
//! by the `p_k` and `r_k` sequences.

use super::constants::constants;
use crate::error::{domain, Result};
use crate::kurepa::{Evaluator, TAU_BOUND};
use crate::seqcore::{p_eval, r_eval};
use crate::specfun::gamma;
use serde::Serialize;

/// Gap below which a bound counts as attained in [`BoundsTriple`].
pub const TIGHT_TOL: f64 = 1e-8;

/// Slack for strict and non-strict inequalities on sampled grids.
pub const GRID_SLACK: f64 = 1e-9;

/// Boundary tolerance for membership in [`RegionE`].
pub const EQUALITY_TOL: f64 = 1e-7;

/// `E_a = (a, a + 2 + x1] U [a + 2, inf)` for `a >= -1`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct RegionE {
    pub a: f64,
    pub x1: f64,
}

impl RegionE {
    pub fn new(a: f64, x1: f64) -> Result<Self> {
        if !(a >= -1.0) {
            return domain(format!("E_a needs a >= -1, got {a}"));
        }
        Ok(Self { a, x1 })
    }

    /// `E_a` with `x1` from the process-wide constants.
    pub fn with_root(a: f64) -> Result<Self> {
        Self::new(a, constants()?.x1)
    }

    pub fn contains(&self, x: f64) -> bool {
        (x > self.a && x <= self.a + 2.0 + self.x1) || x >= self.a + 2.0
    }

    /// Membership with both inner endpoints widened by `tol`.
    pub fn contains_within(&self, x: f64, tol: f64) -> bool {
        (x > self.a && x <= self.a + 2.0 + self.x1 + tol) || x >= self.a + 2.0 - tol
    }

    /// The excluded gap `(a + 2 + x1, a + 2)`.
    pub fn gap(&self) -> (f64, f64) {
        (self.a + 2.0 + self.x1, self.a + 2.0)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum EqualityFlag {
    None,
    LowerTight,
    UpperTight,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct BoundsTriple {
    pub lower: f64,
    pub center: f64,
    pub upper: f64,
    pub equality: EqualityFlag,
}

impl BoundsTriple {
    fn new(lower: f64, center: f64, upper: f64) -> Self {
        let lo_gap = (center - lower).abs();
        let up_gap = (upper - center).abs();
        let equality = if lo_gap < TIGHT_TOL && lo_gap <= up_gap {
            EqualityFlag::LowerTight
        } else if up_gap < TIGHT_TOL {
            EqualityFlag::UpperTight
        } else {
            EqualityFlag::None
        };
        Self {
            lower,
            center,
            upper,
            equality,
        }
    }

    pub fn lower_margin(&self) -> f64 {
        self.center - self.lower
    }

    pub fn upper_margin(&self) -> f64 {
        self.upper - self.center
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct GammaDominance {
    pub holds: bool,
    /// `Gamma(x + 1) - Re A(x)`.
    pub margin: f64,
}

/// `Gamma(x + 1) >= Re A(x)`, which holds exactly on `E_-1`.
pub fn check_gamma_dominance(x: f64) -> Result<GammaDominance> {
    if !(x > -1.0 + TAU_BOUND) {
        return domain(format!("gamma dominance needs x > -1, got {x}"));
    }
    let g = gamma(x + 1.0)?;
    let re = Evaluator::default().re_a(x)?.value;
    let margin = g - re;
    Ok(GammaDominance {
        holds: margin >= -GRID_SLACK * g.abs().max(1.0),
        margin,
    })
}

/// `Re A(x - k - 1) / Gamma(x - k)`, at most 1 on `E_k`.
pub fn bound_ga1(k: u32, x: f64) -> Result<f64> {
    if k < 1 {
        return domain("k must be at least 1");
    }
    let region = RegionE::with_root(k as f64)?;
    if !region.contains_within(x, EQUALITY_TOL) {
        return domain(format!("x = {x} is outside E_{k}"));
    }
    let shifted = x - k as f64;
    Ok(Evaluator::default().re_a(shifted - 1.0)?.value / gamma(shifted)?)
}

fn check_start(k: u32, x: f64) -> Result<()> {
    if k < 1 {
        return domain("k must be at least 1");
    }
    if !(x >= k as f64 + 1.0) {
        return domain(format!("bounds of order {k} need x >= {}, got {x}", k + 1));
    }
    Ok(())
}

fn ratio(x: f64) -> Result<f64> {
    Ok(Evaluator::default().re_a(x)?.value / gamma(x + 2.0)?)
}

/// Odd `k`: `p/(p+1) (-r_k) <= Re A(x)/Gamma(x+2) < -r_k` for `x >= k + 1`.
pub fn bounds_ga2(k: u32, x: f64) -> Result<BoundsTriple> {
    check_start(k, x)?;
    if k.is_multiple_of(2) {
        return domain(format!("odd-order bounds need odd k, got {k}"));
    }
    let p = p_eval(k, x);
    let r = r_eval(k, x)?;
    Ok(BoundsTriple::new(p / (p + 1.0) * (-r), ratio(x)?, -r))
}

/// Even `k`: `r_k < Re A(x)/Gamma(x+2) <= p/(p-1) r_k` for `x >= k + 1`.
pub fn bounds_ga3(k: u32, x: f64) -> Result<BoundsTriple> {
    check_start(k, x)?;
    if k % 2 == 1 {
        return domain(format!("even-order bounds need even k, got {k}"));
    }
    let p = p_eval(k, x);
    let r = r_eval(k, x)?;
    Ok(BoundsTriple::new(r, ratio(x)?, p / (p - 1.0) * r))
}

/// Any `k`: `r_k < (-1)^k Re A(x)/Gamma(x+2) <= p/(p - (-1)^k) r_k`.
pub fn bounds_ga4(k: u32, x: f64) -> Result<BoundsTriple> {
    check_start(k, x)?;
    let sign = if k.is_multiple_of(2) { 1.0 } else { -1.0 };
    let p = p_eval(k, x);
    let r = r_eval(k, x)?;
    Ok(BoundsTriple::new(r, sign * ratio(x)?, p / (p - sign) * r))
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    #[test]
    fn region_membership() {
        let e = RegionE::new(-1.0, -0.015401).unwrap();
        assert!(e.contains(0.5) && e.contains(1.0) && e.contains(6.0));
        assert!(!e.contains(0.99) && !e.contains(-1.0));
        assert!(e.contains(1.0 - 0.015401));
        assert!(e.contains_within(0.99, 0.02));
        assert!(RegionE::new(-1.5, 0.0).is_err());
    }

    #[test]
    fn dominance_examples() {
        let d = check_gamma_dominance(1.0).unwrap();
        assert!(d.holds && d.margin.abs() < 1e-8);
        let d = check_gamma_dominance(2.0).unwrap();
        assert!(d.holds);
        assert_relative_eq!(d.margin, 1.0, max_relative = 1e-9);
        // (-1, 1 + x1] holds, the gap (1 + x1, 1) does not
        let d = check_gamma_dominance(0.5).unwrap();
        assert!(d.holds && d.margin > 0.0);
        let d = check_gamma_dominance(0.99).unwrap();
        assert!(!d.holds && d.margin < 0.0);
        assert!(check_gamma_dominance(-1.0).is_err());
    }

    #[test]
    fn ga1_examples() {
        assert_relative_eq!(bound_ga1(1, 3.0).unwrap(), 1.0, max_relative = 1e-9);
        assert_relative_eq!(bound_ga1(1, 5.0).unwrap(), 5.0 / 6.0, max_relative = 1e-9);
        assert_relative_eq!(bound_ga1(2, 6.0).unwrap(), 5.0 / 6.0, max_relative = 1e-9);
        assert!(bound_ga1(1, 2.995).is_err());
        assert!(bound_ga1(1, 1.0).is_err());
    }

    #[test]
    fn ga2_examples() {
        let b = bounds_ga2(1, 2.0).unwrap();
        assert_relative_eq!(b.lower, 1.0 / 6.0, max_relative = 1e-12);
        assert_relative_eq!(b.center, 1.0 / 6.0, max_relative = 1e-9);
        assert_relative_eq!(b.upper, 1.0 / 3.0, max_relative = 1e-12);
        assert_eq!(b.equality, EqualityFlag::LowerTight);

        let b = bounds_ga2(1, 3.0).unwrap();
        assert_relative_eq!(b.lower, 1.0 / 6.0, max_relative = 1e-12);
        assert_relative_eq!(b.center, 5.0 / 24.0, max_relative = 1e-9);
        assert_relative_eq!(b.upper, 0.25, max_relative = 1e-12);
        assert_eq!(b.equality, EqualityFlag::None);

        let b = bounds_ga2(3, 4.0).unwrap();
        assert!((b.center - b.lower).abs() < 1e-8);
        assert_eq!(b.equality, EqualityFlag::LowerTight);

        assert!(bounds_ga2(2, 4.0).is_err());
        assert!(bounds_ga2(1, 1.9).is_err());
    }

    #[test]
    fn ga3_examples() {
        let b = bounds_ga3(2, 3.0).unwrap();
        assert_relative_eq!(b.lower, 1.0 / 6.0, max_relative = 1e-12);
        assert_relative_eq!(b.center, 5.0 / 24.0, max_relative = 1e-9);
        assert_relative_eq!(b.upper, 5.0 / 24.0, max_relative = 1e-12);
        assert_eq!(b.equality, EqualityFlag::UpperTight);

        let b = bounds_ga3(2, 4.0).unwrap();
        assert_relative_eq!(b.lower, 3.0 / 20.0, max_relative = 1e-12);
        assert_relative_eq!(b.center, 19.0 / 120.0, max_relative = 1e-9);
        assert_relative_eq!(b.upper, 1.0 / 6.0, max_relative = 1e-12);

        let b = bounds_ga3(4, 5.0).unwrap();
        assert!(b.lower_margin() > 1e-3);
        assert_eq!(b.equality, EqualityFlag::UpperTight);

        assert!(bounds_ga3(3, 5.0).is_err());
    }

    #[test]
    fn ga4_examples() {
        assert_eq!(bounds_ga4(2, 3.0).unwrap(), bounds_ga3(2, 3.0).unwrap());

        let b = bounds_ga4(1, 2.0).unwrap();
        assert_relative_eq!(b.center, -1.0 / 6.0, max_relative = 1e-9);
        assert_relative_eq!(b.lower, -1.0 / 3.0, max_relative = 1e-12);
        assert_eq!(b.equality, EqualityFlag::UpperTight);

        let odd = bounds_ga2(3, 4.0).unwrap();
        let uni = bounds_ga4(3, 4.0).unwrap();
        assert_relative_eq!(uni.center, -odd.center, max_relative = 1e-12);
        assert_relative_eq!(uni.lower, -odd.upper, max_relative = 1e-12);
        assert_relative_eq!(uni.upper, -odd.lower, max_relative = 1e-12);
        assert!(bounds_ga4(3, 3.5).is_err());
    }
}
