//! The minimum of `beta`, the roots of `Re A`, and the sign regions they define.

use super::optimize::{brent_root, golden_section, parabolic_vertex};
use crate::error::{KurepaError, Result};
use crate::kurepa::Evaluator;
use crate::specfun::ei_constant;
use serde::Serialize;
use std::sync::OnceLock;

/// Location tolerance for the minimizer and the roots.
pub const XTOL: f64 = 1e-12;

/// Points this close to a stored root classify as roots.
pub const ROOT_BAND: f64 = 1e-9;

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct BetaMinimum {
    pub x0: f64,
    pub beta_min: f64,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ReARoots {
    pub x1: f64,
    pub x2: f64,
}

/// Everything reproduced by [`find_beta_minimum`] and [`find_re_a_roots`].
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Constants {
    pub x0: f64,
    pub beta_min: f64,
    pub x1: f64,
    pub x2: f64,
    pub ei_constant: f64,
}

/// Minimizer of `beta` on `(-2, inf)`.
///
/// Golden section narrows `(-1, 1)` to a bracket while value differences
/// still dominate quadrature noise; the minimizer is then the root of
/// `beta'`, found by Brent's method.
pub fn find_beta_minimum() -> Result<BetaMinimum> {
    let ev = Evaluator::default();
    let beta = |x: f64| ev.beta(x).map(|r| r.value);
    let (mut lo, mut hi) = golden_section(beta, -1.0, 1.0, 1e-3)?;

    let slope = |x: f64| ev.beta_derivative(x).map(|r| r.value);
    // Widen if the bracket edges do not straddle the stationary point.
    for _ in 0..8 {
        if slope(lo)? < 0.0 && slope(hi)? > 0.0 {
            break;
        }
        let w = hi - lo;
        lo -= w;
        hi += w;
    }
    let x0 = match brent_root(slope, lo, hi, XTOL) {
        Ok(x) => x,
        Err(_) => {
            // Fall back to a parabolic step through the bracket.
            let mid = 0.5 * (lo + hi);
            parabolic_vertex([lo, mid, hi], [beta(lo)?, beta(mid)?, beta(hi)?]).ok_or_else(
                || KurepaError::Convergence("beta minimum bracket degenerate".into()),
            )?
        }
    };
    Ok(BetaMinimum {
        x0,
        beta_min: beta(x0)?,
    })
}

/// Roots of `Re A` on `(-2, inf)`: `x2 = 0` exactly and `x1` in `(x0, 0)`.
pub fn find_re_a_roots() -> Result<ReARoots> {
    let ev = Evaluator::default();
    let re = |x: f64| ev.re_a(x).map(|r| r.value);
    let at_zero = re(0.0)?;
    if at_zero.abs() >= 1e-8 {
        return Err(KurepaError::Convergence(format!(
            "Re A(0) = {at_zero:e}, expected a root"
        )));
    }
    let x0 = find_beta_minimum()?.x0;
    if re(x0)? <= 0.0 {
        return Err(KurepaError::Convergence("Re A(x0) is not positive".into()));
    }
    // Re A'(0) = beta'(0) > 0, so Re A is negative just left of zero.
    let mut right = None;
    for k in 2..=8 {
        let probe = -(10f64.powi(-k));
        if re(probe)? < 0.0 {
            right = Some(probe);
            break;
        }
    }
    let right = right.ok_or_else(|| {
        KurepaError::Convergence("no sign change of Re A found in (x0, 0)".into())
    })?;
    let x1 = brent_root(re, x0, right, XTOL)?;
    Ok(ReARoots { x1, x2: 0.0 })
}

/// Computed once per process.
pub fn constants() -> Result<Constants> {
    static CELL: OnceLock<Result<Constants>> = OnceLock::new();
    CELL.get_or_init(|| {
        let min = find_beta_minimum()?;
        let roots = find_re_a_roots()?;
        Ok(Constants {
            x0: min.x0,
            beta_min: min.beta_min,
            x1: roots.x1,
            x2: roots.x2,
            ei_constant: ei_constant(),
        })
    })
    .clone()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum SignRegion {
    Positive,
    Negative,
    Root,
}

/// Sign of `Re A(x)`: positive on `(-2, x1) U (0, inf)`, negative on
/// `(x1, 0)`. The classification from the stored roots is checked against a
/// direct evaluation.
pub fn sign_region(x: f64) -> Result<SignRegion> {
    let c = constants()?;
    let r = Evaluator::default().re_a(x)?;
    let expected = if (x - c.x1).abs() <= ROOT_BAND || (x - c.x2).abs() <= ROOT_BAND {
        SignRegion::Root
    } else if x > c.x1 && x < c.x2 {
        SignRegion::Negative
    } else {
        SignRegion::Positive
    };
    let noise = 10.0 * r.abs_err;
    let consistent = match expected {
        SignRegion::Root => r.value.abs() <= 1e-8,
        SignRegion::Positive => r.value > -noise,
        SignRegion::Negative => r.value < noise,
    };
    if !consistent {
        return Err(KurepaError::Inconsistency {
            x,
            expected: match expected {
                SignRegion::Positive => "positive",
                SignRegion::Negative => "negative",
                SignRegion::Root => "root",
            },
            value: r.value,
        });
    }
    Ok(expected)
}
