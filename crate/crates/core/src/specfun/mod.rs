//! Scalar kernels: gamma function, exponential integral and the semi-infinite
//! quadrature engine used for every integral representation in the crate.

mod expint;
mod gamma;
mod quad;

pub use expint::{e1_continued_fraction, e1_series, ei_constant, exp_integral_e1};
pub use gamma::{gamma, GAMMA_OVERFLOW_X};
pub use quad::{integrate_gamma_weighted, QuadratureResult, QuadratureSpec};
pub use quad::{DEFAULT_MAX_SUBDIVISIONS, DEFAULT_REL_TOL, MAX_REL_TOL, MIN_REL_TOL};

use std::f64::consts::PI;

/// `sin(pi * x)` with exact argument reduction, so integers give exactly zero.
pub fn sin_pi(x: f64) -> f64 {
    if !x.is_finite() {
        return f64::NAN;
    }
    let mut r = x % 2.0;
    if r > 1.0 {
        r -= 2.0;
    } else if r < -1.0 {
        r += 2.0;
    }
    let sign = if r < 0.0 { -1.0 } else { 1.0 };
    let mut a = r.abs();
    if a > 0.5 {
        a = 1.0 - a;
    }
    let v = if a <= 0.25 {
        (PI * a).sin()
    } else {
        (PI * (0.5 - a)).cos()
    };
    sign * v
}

/// `cos(pi * x)` with exact argument reduction, so half-integers give exactly zero.
pub fn cos_pi(x: f64) -> f64 {
    if !x.is_finite() {
        return f64::NAN;
    }
    let mut r = x.abs() % 2.0;
    if r > 1.0 {
        r = 2.0 - r;
    }
    if r <= 0.25 {
        (PI * r).cos()
    } else if r <= 0.5 {
        (PI * (0.5 - r)).sin()
    } else if r <= 0.75 {
        -(PI * (r - 0.5)).sin()
    } else {
        -(PI * (1.0 - r)).cos()
    }
}
