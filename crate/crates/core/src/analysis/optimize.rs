//! Scalar root finding and minimization.

use crate::error::{KurepaError, Result};

const MAX_ITER: usize = 200;

/// Brent's method on a bracketing interval `[lo, hi]`.
///
/// `f(lo)` and `f(hi)` must have opposite signs (or one of them be zero).
pub fn brent_root<F>(mut f: F, lo: f64, hi: f64, xtol: f64) -> Result<f64>
where
    F: FnMut(f64) -> Result<f64>,
{
    let (mut a, mut b) = (lo, hi);
    let (mut fa, mut fb) = (f(a)?, f(b)?);
    if fa == 0.0 {
        return Ok(a);
    }
    if fb == 0.0 {
        return Ok(b);
    }
    if fa.signum() == fb.signum() {
        return Err(KurepaError::Convergence(format!(
            "no sign change on [{lo}, {hi}]: f = {fa:e}, {fb:e}"
        )));
    }
    let (mut c, mut fc) = (b, fb);
    let mut d = b - a;
    let mut e = d;

    for _ in 0..MAX_ITER {
        if fb.signum() == fc.signum() {
            c = a;
            fc = fa;
            d = b - a;
            e = d;
        }
        if fc.abs() < fb.abs() {
            a = b;
            b = c;
            c = a;
            fa = fb;
            fb = fc;
            fc = fa;
        }
        let tol = 2.0 * f64::EPSILON * b.abs() + 0.5 * xtol;
        let m = 0.5 * (c - b);
        if m.abs() <= tol || fb == 0.0 {
            return Ok(b);
        }
        if e.abs() >= tol && fa.abs() > fb.abs() {
            let s = fb / fa;
            let (mut p, mut q) = if a == c {
                (2.0 * m * s, 1.0 - s)
            } else {
                let qa = fa / fc;
                let r = fb / fc;
                (
                    s * (2.0 * m * qa * (qa - r) - (b - a) * (r - 1.0)),
                    (qa - 1.0) * (r - 1.0) * (s - 1.0),
                )
            };
            if p > 0.0 {
                q = -q;
            } else {
                p = -p;
            }
            if 2.0 * p < (3.0 * m * q - (tol * q).abs()).min((e * q).abs()) {
                e = d;
                d = p / q;
            } else {
                d = m;
                e = m;
            }
        } else {
            d = m;
            e = m;
        }
        a = b;
        fa = fb;
        b += if d.abs() > tol { d } else { tol.copysign(m) };
        fb = f(b)?;
    }
    Err(KurepaError::Convergence(format!(
        "brent root did not converge on [{lo}, {hi}]"
    )))
}

/// Golden-section search; returns a bracket `(lo, hi)` of width at most
/// `width` containing the minimizer of a unimodal `f`.
pub fn golden_section<F>(mut f: F, lo: f64, hi: f64, width: f64) -> Result<(f64, f64)>
where
    F: FnMut(f64) -> Result<f64>,
{
    let inv_phi = (5f64.sqrt() - 1.0) / 2.0;
    let (mut a, mut b) = (lo, hi);
    let mut c = b - inv_phi * (b - a);
    let mut d = a + inv_phi * (b - a);
    let mut fc = f(c)?;
    let mut fd = f(d)?;
    for _ in 0..MAX_ITER {
        if (b - a).abs() <= width {
            return Ok((a, b));
        }
        if fc < fd {
            b = d;
            d = c;
            fd = fc;
            c = b - inv_phi * (b - a);
            fc = f(c)?;
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + inv_phi * (b - a);
            fd = f(d)?;
        }
    }
    Err(KurepaError::Convergence(format!(
        "golden section did not shrink [{lo}, {hi}] to {width:e}"
    )))
}

/// Vertex of the parabola through three points.
pub fn parabolic_vertex(x: [f64; 3], y: [f64; 3]) -> Option<f64> {
    let num = (x[1] - x[0]).powi(2) * (y[1] - y[2]) - (x[1] - x[2]).powi(2) * (y[1] - y[0]);
    let den = (x[1] - x[0]) * (y[1] - y[2]) - (x[1] - x[2]) * (y[1] - y[0]);
    if den == 0.0 {
        None
    } else {
        Some(x[1] - 0.5 * num / den)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn root_of_cubic() {
        let r = brent_root(|x| Ok(x * x * x - 2.0 * x - 5.0), 2.0, 3.0, 1e-14).unwrap();
        assert!((r - 2.094_551_481_542_326_5).abs() < 1e-13);
    }

    #[test]
    fn root_requires_bracket() {
        assert!(matches!(
            brent_root(|x| Ok(x * x + 1.0), -1.0, 1.0, 1e-10),
            Err(KurepaError::Convergence(_))
        ));
        assert_eq!(brent_root(Ok, 0.0, 1.0, 1e-10).unwrap(), 0.0);
    }

    #[test]
    fn root_propagates_errors() {
        let r = brent_root(|_| Err(KurepaError::Pole(0.0)), 0.0, 1.0, 1e-10);
        assert_eq!(r, Err(KurepaError::Pole(0.0)));
    }

    #[test]
    fn golden_brackets_minimum() {
        let (a, b) = golden_section(|x| Ok((x - 0.3).powi(2)), -1.0, 1.0, 1e-8).unwrap();
        assert!(a <= 0.3 && 0.3 <= b && b - a <= 1e-8);
    }

    #[test]
    fn vertex_of_exact_parabola() {
        let f = |x: f64| 3.0 * (x + 0.25).powi(2) - 1.0;
        let v = parabolic_vertex([-1.0, 0.0, 2.0], [f(-1.0), f(0.0), f(2.0)]).unwrap();
        assert!((v + 0.25).abs() < 1e-14);
        assert_eq!(parabolic_vertex([0.0, 1.0, 2.0], [1.0, 1.0, 1.0]), None);
    }
}
