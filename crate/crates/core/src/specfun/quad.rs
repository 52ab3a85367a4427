//! Adaptive Gauss-Kronrod quadrature for `int_0^inf e^-t t^a s(t) dt`.
//!
//! The range is split at `t = 1`. On `[0, 1]` with a negative exponent the
//! value at the origin is subtracted and integrated in closed form,
//! `s(0) / (a+1)`; the remainder is taken with `t = u^2`, which leaves a
//! bounded integrand behaving like `u^(2a+3)` near zero. The tail is
//! mapped onto `[0, 1)` with `t = 1 + v / (1 - v)`. Segments from both pieces
//! share one priority queue ordered by error estimate.

use crate::error::{domain, KurepaError, Result};
use serde::Serialize;
use std::cmp::Ordering;
use std::collections::BinaryHeap;

pub const DEFAULT_REL_TOL: f64 = 1e-10;
pub const DEFAULT_MAX_SUBDIVISIONS: usize = 2000;
pub const MIN_REL_TOL: f64 = 1e-14;
pub const MAX_REL_TOL: f64 = 1e-4;

// Absolute floor as a fraction of rel_tol * int |f|; only matters when the
// integral nearly cancels.
const ABS_FLOOR_FACTOR: f64 = 1e-3;

// Initial tail breakpoints in v; t = 1, 2, 4, 10, 20, 50, 100, 200, 1000, inf.
const TAIL_BREAKS: [f64; 10] = [0.0, 0.5, 0.75, 0.9, 0.95, 0.98, 0.99, 0.995, 0.999, 1.0];

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QuadratureSpec {
    singular_exponent: f64,
    rel_tol: f64,
    max_subdivisions: usize,
}

impl QuadratureSpec {
    pub fn new(singular_exponent: f64) -> Result<Self> {
        Self::with_tolerance(singular_exponent, DEFAULT_REL_TOL, DEFAULT_MAX_SUBDIVISIONS)
    }

    pub fn with_tolerance(
        singular_exponent: f64,
        rel_tol: f64,
        max_subdivisions: usize,
    ) -> Result<Self> {
        if !(singular_exponent > -1.0) || !singular_exponent.is_finite() {
            return domain(format!(
                "singular exponent must exceed -1 for integrability, got {singular_exponent}"
            ));
        }
        if !(MIN_REL_TOL..=MAX_REL_TOL).contains(&rel_tol) {
            return domain(format!(
                "rel_tol must lie in [{MIN_REL_TOL:e}, {MAX_REL_TOL:e}], got {rel_tol:e}"
            ));
        }
        if max_subdivisions == 0 {
            return domain("max_subdivisions must be positive");
        }
        Ok(Self {
            singular_exponent,
            rel_tol,
            max_subdivisions,
        })
    }

    pub fn singular_exponent(&self) -> f64 {
        self.singular_exponent
    }

    pub fn rel_tol(&self) -> f64 {
        self.rel_tol
    }

    pub fn max_subdivisions(&self) -> usize {
        self.max_subdivisions
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct QuadratureResult {
    pub value: f64,
    pub abs_err: f64,
    pub subdivisions: usize,
    /// Whether `abs_err` reached the requested tolerance.
    pub converged: bool,
}

impl QuadratureResult {
    /// Turns a non-converged result into [`KurepaError::ToleranceNotMet`].
    pub fn check(self) -> Result<Self> {
        if self.converged {
            Ok(self)
        } else {
            Err(KurepaError::ToleranceNotMet {
                value: self.value,
                abs_err: self.abs_err,
                subdivisions: self.subdivisions,
            })
        }
    }
}

/// Estimates `int_0^inf e^-t t^a s(t) dt` with `a = spec.singular_exponent()`.
///
/// `s` must be continuous on `[0, inf)` and grow at most polynomially. The
/// result is best effort when `max_subdivisions` is exhausted; `converged`
/// reports which case occurred.
pub fn integrate_gamma_weighted<F>(spec: &QuadratureSpec, s: F) -> QuadratureResult
where
    F: Fn(f64) -> f64,
{
    let a = spec.singular_exponent;
    let singular = a < 0.0;
    let s0 = if singular { s(0.0) } else { 0.0 };
    let head = |u: f64| -> f64 {
        if singular {
            let t = u * u;
            2.0 * u.powf(2.0 * a + 1.0) * ((-t).exp() * s(t) - s0)
        } else {
            u.powf(a) * (-u).exp() * s(u)
        }
    };
    let tail = |v: f64| -> f64 {
        let w = 1.0 - v;
        let t = 1.0 + v / w;
        let weight = (a * t.ln() - t).exp();
        if weight == 0.0 {
            0.0
        } else {
            weight * s(t) / (w * w)
        }
    };

    let mut heap = BinaryHeap::new();
    let closed_form = s0 / (a + 1.0);
    let mut frozen_value = closed_form;
    let mut frozen_err = 0.0;
    let mut frozen_abs = closed_form.abs();
    let mut frozen_count = 0usize;

    heap.push(Segment::new(Piece::Head, 0.0, 1.0, kronrod15(&head, 0.0, 1.0)));
    for win in TAIL_BREAKS.windows(2) {
        heap.push(Segment::new(Piece::Tail, win[0], win[1], kronrod15(&tail, win[0], win[1])));
    }

    loop {
        let (value, err, abs) = heap.iter().fold(
            (frozen_value, frozen_err, frozen_abs),
            |(v, e, r), seg| (v + seg.value, e + seg.err, r + seg.abs),
        );
        let target = tolerance(spec.rel_tol, value, abs);
        let count = heap.len() + frozen_count;
        let done = err <= target;
        if done || count >= spec.max_subdivisions || heap.is_empty() {
            return QuadratureResult {
                value,
                abs_err: err,
                subdivisions: count,
                converged: done,
            };
        }

        let seg = heap.pop().expect("heap checked non-empty");
        let mid = 0.5 * (seg.lo + seg.hi);
        if mid <= seg.lo || mid >= seg.hi {
            frozen_value += seg.value;
            frozen_err += seg.err;
            frozen_abs += seg.abs;
            frozen_count += 1;
            continue;
        }
        for (lo, hi) in [(seg.lo, mid), (mid, seg.hi)] {
            let est = match seg.piece {
                Piece::Head => kronrod15(&head, lo, hi),
                Piece::Tail => kronrod15(&tail, lo, hi),
            };
            heap.push(Segment::new(seg.piece, lo, hi, est));
        }
    }
}

fn tolerance(rel_tol: f64, value: f64, abs_integral: f64) -> f64 {
    (rel_tol * value.abs()).max(ABS_FLOOR_FACTOR * rel_tol * abs_integral)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Piece {
    Head,
    Tail,
}

#[derive(Debug, Clone, Copy)]
struct Segment {
    piece: Piece,
    lo: f64,
    hi: f64,
    value: f64,
    err: f64,
    abs: f64,
}

impl Segment {
    fn new(piece: Piece, lo: f64, hi: f64, est: Estimate) -> Self {
        Self {
            piece,
            lo,
            hi,
            value: est.value,
            err: est.err,
            abs: est.abs,
        }
    }
}

impl PartialEq for Segment {
    fn eq(&self, other: &Self) -> bool {
        self.err.total_cmp(&other.err) == Ordering::Equal
    }
}

impl Eq for Segment {}

impl PartialOrd for Segment {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Segment {
    fn cmp(&self, other: &Self) -> Ordering {
        self.err.total_cmp(&other.err)
    }
}

struct Estimate {
    value: f64,
    err: f64,
    abs: f64,
}

const XGK: [f64; 8] = [
    0.991_455_371_120_812_639_206_854_697_526_329,
    0.949_107_912_342_758_524_526_189_684_047_851,
    0.864_864_423_359_769_072_789_712_788_640_926,
    0.741_531_185_599_394_439_863_864_773_280_788,
    0.586_087_235_467_691_130_294_144_845_693_013,
    0.405_845_151_377_397_166_906_606_412_076_961,
    0.207_784_955_007_898_467_600_689_403_773_245,
    0.000_000_000_000_000_000_000_000_000_000_000,
];

const WGK: [f64; 8] = [
    0.022_935_322_010_529_224_963_732_008_058_970,
    0.063_092_092_629_978_553_290_700_663_189_204,
    0.104_790_010_322_250_183_839_876_322_541_518,
    0.140_653_259_715_525_918_745_189_590_510_238,
    0.169_004_726_639_267_902_826_583_426_598_550,
    0.190_350_578_064_785_409_913_256_402_421_014,
    0.204_432_940_075_298_892_414_161_999_234_649,
    0.209_482_141_084_727_828_012_999_174_891_714,
];

const WG: [f64; 4] = [
    0.129_484_966_168_869_693_270_611_432_679_082,
    0.279_705_391_489_276_667_901_467_771_423_780,
    0.381_830_050_505_118_944_950_369_775_488_975,
    0.417_959_183_673_469_387_755_102_040_816_327,
];

/// 15-point Kronrod rule with the embedded 7-point Gauss rule, error scaled
/// as in QUADPACK's `qk15`.
fn kronrod15<F: Fn(f64) -> f64>(f: &F, lo: f64, hi: f64) -> Estimate {
    let center = 0.5 * (lo + hi);
    let half = 0.5 * (hi - lo);
    let fc = f(center);
    let mut res_k = fc * WGK[7];
    let mut res_g = fc * WG[3];
    let mut res_abs = fc.abs() * WGK[7];
    let mut fv1 = [0.0; 7];
    let mut fv2 = [0.0; 7];

    for j in 0..7 {
        let dx = half * XGK[j];
        let f1 = f(center - dx);
        let f2 = f(center + dx);
        fv1[j] = f1;
        fv2[j] = f2;
        res_k += WGK[j] * (f1 + f2);
        res_abs += WGK[j] * (f1.abs() + f2.abs());
        if j % 2 == 1 {
            res_g += WG[j / 2] * (f1 + f2);
        }
    }

    let mean = 0.5 * res_k;
    let mut res_asc = WGK[7] * (fc - mean).abs();
    for j in 0..7 {
        res_asc += WGK[j] * ((fv1[j] - mean).abs() + (fv2[j] - mean).abs());
    }

    let value = res_k * half;
    let res_abs = res_abs * half.abs();
    let res_asc = res_asc * half.abs();
    let mut err = ((res_k - res_g) * half).abs();
    if res_asc != 0.0 && err != 0.0 {
        err = res_asc * (1.0f64).min((200.0 * err / res_asc).powf(1.5));
    }
    if res_abs > f64::MIN_POSITIVE / (50.0 * f64::EPSILON) {
        err = err.max(50.0 * f64::EPSILON * res_abs);
    }
    Estimate {
        value,
        err,
        abs: res_abs,
    }
}
