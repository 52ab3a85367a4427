//! The alternating Kurepa function `A`.
//!
//! Integer arguments use the exact alternating factorial sum. Real arguments
//! `x > -2` use the integral
//! `Re A(x) = int_0^inf e^-t (t^(x+1) - cos(pi x) t) / (t + 1) dt`,
//! with `(-1)^x` taken on the principal branch `e^(i pi x)`. The imaginary
//! part has the closed form `-(1 + e Ei(-1)) sin(pi x)`.

use crate::error::{domain, Result};
use crate::seqcore::{p_eval, r_eval};
use crate::specfun::{
    cos_pi, ei_constant, gamma, integrate_gamma_weighted, sin_pi, QuadratureResult,
    QuadratureSpec, DEFAULT_MAX_SUBDIVISIONS, DEFAULT_REL_TOL,
};
use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::Serialize;

/// Quadrature refuses arguments within this distance of `-2`.
pub const TAU_BOUND: f64 = 1e-6;

/// Lower edge of the real domain.
pub const DOMAIN_LOWER: f64 = -2.0;

/// A validated real argument `x > -2 + TAU_BOUND`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct EvalPoint {
    x: f64,
    domain_margin: f64,
}

impl EvalPoint {
    pub fn new(x: f64) -> Result<Self> {
        if !x.is_finite() || x <= DOMAIN_LOWER + TAU_BOUND {
            return domain(format!(
                "argument {x} outside the quadrature domain x > -2 + {TAU_BOUND:e}"
            ));
        }
        Ok(Self {
            x,
            domain_margin: x - DOMAIN_LOWER,
        })
    }

    pub fn x(&self) -> f64 {
        self.x
    }

    /// Distance to `-2`.
    pub fn domain_margin(&self) -> f64 {
        self.domain_margin
    }
}

/// Poles of the meromorphic continuation, `z = -n` for `n >= 2`. Nothing
/// below `-2` is evaluated; this only records where they are.
#[derive(Debug, Clone, Copy, Default)]
pub struct PoleTable;

impl PoleTable {
    pub const FIRST: i64 = -2;

    pub fn is_pole(&self, z: f64) -> bool {
        z <= Self::FIRST as f64 && z == z.trunc()
    }

    /// The first `count` poles, `-2, -3, ...`.
    pub fn poles(&self, count: usize) -> Vec<i64> {
        (0..count as i64).map(|i| Self::FIRST - i).collect()
    }
}

/// `A(n)` together with its order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AltFactorial {
    pub n: u32,
    pub value: BigInt,
}

/// `A(n) = sum_{i=1}^{n} (-1)^(n-i) i!`, via `A(k) = k! - A(k-1)`.
pub fn alt_factorial(n: u32) -> Result<BigInt> {
    if n < 1 {
        return domain("alternating factorial is defined for n >= 1");
    }
    let mut fact = BigInt::one();
    let mut acc = BigInt::zero();
    for k in 1..=n {
        fact *= k;
        acc = &fact - acc;
    }
    Ok(acc)
}

/// `A(1), ..., A(n)`.
pub fn alt_factorial_sequence(n: u32) -> Vec<AltFactorial> {
    let mut fact = BigInt::one();
    let mut acc = BigInt::zero();
    (1..=n)
        .map(|k| {
            fact *= k;
            acc = &fact - &acc;
            AltFactorial {
                n: k,
                value: acc.clone(),
            }
        })
        .collect()
}

/// Evaluation mode for [`Evaluator::re_a_mode`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum EvalMode {
    #[default]
    Quadrature,
    /// Integer `x >= 1` go through [`alt_factorial`]; anything else falls
    /// back to quadrature.
    Exact,
}

#[derive(Debug, Clone, PartialEq)]
pub enum ReValue {
    Exact(BigInt),
    Quadrature(QuadratureResult),
}

/// Quadrature settings shared by every integral evaluation.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Evaluator {
    rel_tol: f64,
    max_subdivisions: usize,
}

impl Default for Evaluator {
    fn default() -> Self {
        Self {
            rel_tol: DEFAULT_REL_TOL,
            max_subdivisions: DEFAULT_MAX_SUBDIVISIONS,
        }
    }
}

impl Evaluator {
    pub fn new(rel_tol: f64, max_subdivisions: usize) -> Result<Self> {
        // validate once through the spec constructor
        QuadratureSpec::with_tolerance(0.0, rel_tol, max_subdivisions)?;
        Ok(Self {
            rel_tol,
            max_subdivisions,
        })
    }

    pub fn rel_tol(&self) -> f64 {
        self.rel_tol
    }

    fn spec(&self, exponent: f64) -> Result<QuadratureSpec> {
        QuadratureSpec::with_tolerance(exponent, self.rel_tol, self.max_subdivisions)
    }

    /// `Re A(x)` by direct quadrature of the real-part integral.
    pub fn re_a(&self, x: f64) -> Result<QuadratureResult> {
        let x = EvalPoint::new(x)?.x();
        let c = cos_pi(x);
        // Factor out t^a with a = min(x + 1, 1) so the remaining part stays
        // bounded at the origin.
        let a = (x + 1.0).min(1.0);
        let (e1, e2) = (x + 1.0 - a, 1.0 - a);
        let spec = self.spec(a)?;
        integrate_gamma_weighted(&spec, |t| (t.powf(e1) - c * t.powf(e2)) / (t + 1.0)).check()
    }

    pub fn re_a_mode(&self, x: f64, mode: EvalMode) -> Result<ReValue> {
        if mode == EvalMode::Exact && x >= 1.0 && x == x.trunc() && x <= u32::MAX as f64 {
            return alt_factorial(x as u32).map(ReValue::Exact);
        }
        self.re_a(x).map(ReValue::Quadrature)
    }

    /// `beta(x) = int_0^inf e^-t t^(x+1) / (t + 1) dt`.
    pub fn beta(&self, x: f64) -> Result<QuadratureResult> {
        let x = EvalPoint::new(x)?.x();
        let spec = self.spec(x + 1.0)?;
        integrate_gamma_weighted(&spec, |t| 1.0 / (t + 1.0)).check()
    }

    /// `beta'(x) = int_0^inf e^-t t^(x+1) ln t / (t + 1) dt`.
    pub fn beta_derivative(&self, x: f64) -> Result<QuadratureResult> {
        let x = EvalPoint::new(x)?.x();
        // ln t is unbounded at 0; a smaller exponent absorbs it.
        let shift = 0.5f64.min(0.5 * (x + 2.0));
        let a = x + 1.0 - shift;
        let spec = self.spec(a)?;
        integrate_gamma_weighted(&spec, |t| {
            if t == 0.0 {
                0.0
            } else {
                t.powf(shift) * t.ln() / (t + 1.0)
            }
        })
        .check()
    }

    /// `Re A(x) = beta(x) - gamma_cos(x)`.
    pub fn re_a_decomposed(&self, x: f64) -> Result<f64> {
        Ok(self.beta(x)?.value - gamma_cos(x))
    }

    /// Direct quadrature of `-int e^-t sin(pi x) t / (t + 1) dt`; a diagnostic
    /// for the closed form in [`im_a`].
    pub fn im_a_quadrature(&self, x: f64) -> Result<f64> {
        let x = EvalPoint::new(x)?.x();
        let spec = self.spec(1.0)?;
        let r = integrate_gamma_weighted(&spec, |t| 1.0 / (t + 1.0)).check()?;
        Ok(-sin_pi(x) * r.value)
    }

    /// `(-1)^n Re A(x - n) + p_{n-1}(x) Gamma(x - n + 2)`.
    pub fn re_a_via_p_theorem(&self, x: f64, n: u32) -> Result<f64> {
        if n < 1 {
            return domain("representation order must be at least 1");
        }
        let shifted = x - n as f64;
        let base = self.re_a(shifted)?.value;
        Ok(sign(n) * base + p_eval(n - 1, x) * gamma(shifted + 2.0)?)
    }

    /// `(-1)^n (Re A(x - n) + r_n(x) Gamma(x + 2))`.
    pub fn re_a_via_r_theorem(&self, x: f64, n: u32) -> Result<f64> {
        if n < 1 {
            return domain("representation order must be at least 1");
        }
        let r = r_eval(n, x)?;
        let base = self.re_a(x - n as f64)?.value;
        Ok(sign(n) * (base + r * gamma(x + 2.0)?))
    }

    /// `|Re A(x) + Re A(x - 1) - Gamma(x + 1)|` for `x > -1`.
    pub fn functional_equation_residual(&self, x: f64) -> Result<f64> {
        if !(x > -1.0 + TAU_BOUND) {
            return domain(format!("functional equation residual needs x > -1, got {x}"));
        }
        let lhs = self.re_a(x)?.value + self.re_a(x - 1.0)?.value;
        Ok((lhs - gamma(x + 1.0)?).abs())
    }

    /// `|Re A(x + 1) - x Re A(x) - (x + 1) Re A(x - 1)|` for `x > -1`.
    pub fn second_functional_residual(&self, x: f64) -> Result<f64> {
        if !(x > -1.0 + TAU_BOUND) {
            return domain(format!("functional equation residual needs x > -1, got {x}"));
        }
        let up = self.re_a(x + 1.0)?.value;
        let mid = self.re_a(x)?.value;
        let down = self.re_a(x - 1.0)?.value;
        Ok((up - x * mid - (x + 1.0) * down).abs())
    }
}

fn sign(n: u32) -> f64 {
    if n.is_multiple_of(2) {
        1.0
    } else {
        -1.0
    }
}

/// `gamma(x) = (1 + e Ei(-1)) cos(pi x)`, the cosine part of `Re A`.
pub fn gamma_cos(x: f64) -> f64 {
    ei_constant() * cos_pi(x)
}

/// `Im A(x) = -(1 + e Ei(-1)) sin(pi x)` for `x > -2`.
pub fn im_a(x: f64) -> Result<f64> {
    if !(x > DOMAIN_LOWER) {
        return domain(format!("Im A requires x > -2, got {x}"));
    }
    Ok(-ei_constant() * sin_pi(x))
}

pub fn re_a(x: f64) -> Result<QuadratureResult> {
    Evaluator::default().re_a(x)
}

pub fn beta(x: f64) -> Result<QuadratureResult> {
    Evaluator::default().beta(x)
}

pub fn re_a_decomposed(x: f64) -> Result<f64> {
    Evaluator::default().re_a_decomposed(x)
}

pub fn re_a_via_p_theorem(x: f64, n: u32) -> Result<f64> {
    Evaluator::default().re_a_via_p_theorem(x, n)
}

pub fn re_a_via_r_theorem(x: f64, n: u32) -> Result<f64> {
    Evaluator::default().re_a_via_r_theorem(x, n)
}

pub fn functional_equation_residual(x: f64) -> Result<f64> {
    Evaluator::default().functional_equation_residual(x)
}
