use crate::error::{domain, Result};
use std::sync::OnceLock;

const EULER_GAMMA: f64 = 0.577_215_664_901_532_860_6;
const MAX_ITER: usize = 10_000;

/// Exponential integral `E1(x) = -Ei(-x)` for `x > 0`.
///
/// Power series up to `x = 1`, continued fraction above.
pub fn exp_integral_e1(x: f64) -> Result<f64> {
    if !(x > 0.0) || !x.is_finite() {
        return domain(format!("E1 requires finite x > 0, got {x}"));
    }
    Ok(if x <= 1.0 {
        e1_series(x)
    } else {
        e1_continued_fraction(x)
    })
}

/// `-gamma_E - ln x + sum_{k>=1} (-1)^(k+1) x^k / (k k!)`. Accurate for small x.
pub fn e1_series(x: f64) -> f64 {
    let mut sum = 0.0;
    let mut term = 1.0; // (-1)^(k+1) x^k / k!
    for k in 1..MAX_ITER {
        term *= if k == 1 { x } else { -x / k as f64 };
        let contrib = term / k as f64;
        sum += contrib;
        if contrib.abs() < f64::EPSILON * sum.abs() {
            break;
        }
    }
    -EULER_GAMMA - x.ln() + sum
}

/// Modified Lentz evaluation of the continued fraction
/// `E1(x) = e^-x / (x + 1 - 1/(x + 3 - 4/(x + 5 - ...)))`.
pub fn e1_continued_fraction(x: f64) -> f64 {
    const TINY: f64 = 1e-300;
    let mut b = x + 1.0;
    let mut c = 1.0 / TINY;
    let mut d = 1.0 / b;
    let mut h = d;
    for i in 1..MAX_ITER {
        let an = -((i * i) as f64);
        b += 2.0;
        d = 1.0 / (an * d + b);
        c = b + an / c;
        let delta = c * d;
        h *= delta;
        if (delta - 1.0).abs() < f64::EPSILON {
            break;
        }
    }
    h * (-x).exp()
}

/// `1 + e * Ei(-1) = 1 - e * E1(1)`, computed once per process.
pub fn ei_constant() -> f64 {
    static CONSTANT: OnceLock<f64> = OnceLock::new();
    *CONSTANT.get_or_init(|| 1.0 - std::f64::consts::E * e1_series(1.0))
}
