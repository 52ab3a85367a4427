//! Polynomial and rational sequences linking `A(z)` to `A(z - n)`.
//!
//! * `p_n(z) = (z - n + 1) p_{n-1}(z) + (-1)^n`, `p_0 = 1`
//! * `q_n`, `r_n` share the recurrence
//!   `f_n = -((z - n + 1) / (z - n + 2)) f_{n-1} + f_{n-2} / (z - n + 2)`
//!   with `q_1 = -z/(z+1)`, `q_2 = (z^2+1)/(z(z+1))`, `r_1 = -1/(z+1)`,
//!   `r_2 = (z-1)/(z(z+1))`.
//! * `g_k(x) = sum_{i<k} (-1)^(k+i) Gamma(x + 1 - i) = Gamma(x + 2) r_k(x)`
//!
//! Every sequence has a recurrence evaluator and a closed-form evaluator;
//! the recurrence is the reference.

use crate::error::{domain, Result};
use crate::specfun::gamma;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

/// Distance from an excluded point below which `q_n`, `r_n` refuse to evaluate.
pub const TAU_EXCL: f64 = 1e-9;

/// Largest order accepted by the exact rational evaluators.
pub const MAX_EXACT_ORDER: u32 = 32;

/// The points `{-1, 0, 1, ..., n-2}` where `q_n` and `r_n` are undefined.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ExclusionSet {
    order: u32,
}

impl ExclusionSet {
    pub fn new(order: u32) -> Self {
        Self { order }
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    pub fn points(&self) -> impl Iterator<Item = i64> {
        -1..=(self.order as i64 - 2)
    }

    /// Exact membership for integers.
    pub fn contains(&self, z: i64) -> bool {
        z >= -1 && z <= self.order as i64 - 2
    }

    /// Distance from `z` to the nearest excluded point.
    pub fn distance(&self, z: f64) -> f64 {
        let hi = (self.order as i64 - 2).max(-1) as f64;
        let nearest = z.round().clamp(-1.0, hi);
        (z - nearest).abs()
    }

    pub fn is_near(&self, z: f64, tol: f64) -> bool {
        self.distance(z) <= tol
    }
}

fn alt_sign(n: u32) -> f64 {
    if n.is_multiple_of(2) {
        1.0
    } else {
        -1.0
    }
}

fn check_order(n: u32) -> Result<()> {
    if n == 0 {
        domain("sequence order must be at least 1")
    } else {
        Ok(())
    }
}

fn check_exclusion(n: u32, z: f64) -> Result<()> {
    check_order(n)?;
    if !z.is_finite() {
        return domain(format!("non-finite argument {z}"));
    }
    let excl = ExclusionSet::new(n);
    if excl.is_near(z, TAU_EXCL) {
        return domain(format!(
            "z = {z} lies within {TAU_EXCL:e} of the exclusion set {{-1, ..., {}}} of order {n}",
            n as i64 - 2
        ));
    }
    Ok(())
}

/// `p_n(z)` by the forward recurrence.
pub fn p_eval(n: u32, z: f64) -> f64 {
    let mut p = 1.0;
    for m in 1..=n {
        p = (z - m as f64 + 1.0) * p + alt_sign(m);
    }
    p
}

/// `p_n(z)` from the closed form
/// `(-1)^n (1 + sum_{j=0}^{n-1} prod_{i=0}^{j} (-1)^(j-1) (z - n + i + 1))`,
/// with the sign factor applied to every factor of the product.
pub fn p_eval_explicit(n: u32, z: f64) -> Result<f64> {
    check_order(n)?;
    let nf = n as f64;
    let mut sum = 1.0;
    for j in 0..n {
        // (-1)^(j-1) has the parity of j + 1
        let sign = alt_sign(j + 1);
        let mut prod = 1.0;
        for i in 0..=j {
            prod *= sign * (z - nf + i as f64 + 1.0);
        }
        sum += prod;
    }
    Ok(alt_sign(n) * sum)
}

fn rational_recurrence(n: u32, z: f64, first: f64, second: impl FnOnce() -> f64) -> f64 {
    if n == 1 {
        return first;
    }
    let (mut prev, mut cur) = (first, second());
    for m in 3..=n {
        let mf = m as f64;
        let denom = z - mf + 2.0;
        let next = (-(z - mf + 1.0) * cur + prev) / denom;
        prev = cur;
        cur = next;
    }
    cur
}

/// `S_n(z) = sum_{j=1}^{n} prod_{i=1}^{j} (-1)^j / (z + 2 - i)`.
fn explicit_sum(n: u32, z: f64) -> f64 {
    let mut sum = 0.0;
    for j in 1..=n {
        let sign = alt_sign(j);
        let mut prod = 1.0;
        for i in 1..=j {
            prod *= sign / (z + 2.0 - i as f64);
        }
        sum += prod;
    }
    sum
}

/// `q_n(z)` by the recurrence.
pub fn q_eval(n: u32, z: f64) -> Result<f64> {
    check_exclusion(n, z)?;
    let q1 = -z / (z + 1.0);
    let q2 = || (z * z + 1.0) / (z * (z + 1.0));
    Ok(rational_recurrence(n, z, q1, q2))
}

/// `q_n(z) = (-1)^n (1 + S_n(z))`.
pub fn q_eval_explicit(n: u32, z: f64) -> Result<f64> {
    check_exclusion(n, z)?;
    Ok(alt_sign(n) * (1.0 + explicit_sum(n, z)))
}

/// `r_n(z)` by the recurrence.
pub fn r_eval(n: u32, z: f64) -> Result<f64> {
    check_exclusion(n, z)?;
    let r1 = -1.0 / (z + 1.0);
    let r2 = || (z - 1.0) / (z * (z + 1.0));
    Ok(rational_recurrence(n, z, r1, r2))
}

/// `r_n(z) = (-1)^(n-1) S_n(z)`.
pub fn r_eval_explicit(n: u32, z: f64) -> Result<f64> {
    check_exclusion(n, z)?;
    Ok(-alt_sign(n) * explicit_sum(n, z))
}

/// `g_k(x) = sum_{i=0}^{k-1} (-1)^(k+i) Gamma(x + 1 - i)` for `x > k - 2`.
pub fn g_eval(k: u32, x: f64) -> Result<f64> {
    check_order(k)?;
    if !(x > k as f64 - 2.0) {
        return domain(format!("g_{k} requires x > {}, got {x}", k as i64 - 2));
    }
    let mut sum = 0.0;
    for i in 0..k {
        sum += alt_sign(k + i) * gamma(x + 1.0 - i as f64)?;
    }
    Ok(sum)
}

/// An exact rational value together with its nearest `f64`.
#[derive(Debug, Clone, PartialEq)]
pub struct RationalValue {
    value: BigRational,
    approx: f64,
}

impl RationalValue {
    fn new(value: BigRational) -> Self {
        let approx = value.to_f64().unwrap_or(f64::NAN);
        Self { value, approx }
    }

    pub fn numerator(&self) -> &BigInt {
        self.value.numer()
    }

    /// Always positive; the sign lives in the numerator.
    pub fn denominator(&self) -> &BigInt {
        self.value.denom()
    }

    pub fn as_ratio(&self) -> &BigRational {
        &self.value
    }

    pub fn to_f64(&self) -> f64 {
        self.approx
    }
}

fn check_exact(n: u32, z: &BigRational) -> Result<()> {
    check_order(n)?;
    if n > MAX_EXACT_ORDER {
        return domain(format!(
            "exact evaluation supports order <= {MAX_EXACT_ORDER}, got {n}"
        ));
    }
    if z.is_integer() {
        let excl = ExclusionSet::new(n);
        if let Some(zi) = z.to_integer().to_i64() {
            if excl.contains(zi) {
                return domain(format!("z = {zi} is in the exclusion set of order {n}"));
            }
        }
    }
    Ok(())
}

fn exact_recurrence(
    n: u32,
    z: &BigRational,
    first: BigRational,
    second: impl FnOnce() -> BigRational,
) -> BigRational {
    if n == 1 {
        return first;
    }
    let one = BigRational::one();
    let (mut prev, mut cur) = (first, second());
    for m in 3..=n {
        let mr = BigRational::from_integer(BigInt::from(m));
        let denom = z - &mr + BigRational::from_integer(BigInt::from(2));
        let next = (-(z - &mr + &one) * &cur + &prev) / denom;
        prev = cur;
        cur = next;
    }
    cur
}

/// `p_n(z)` in exact rational arithmetic.
pub fn p_eval_exact(n: u32, z: &BigRational) -> Result<RationalValue> {
    if n > MAX_EXACT_ORDER {
        return domain(format!(
            "exact evaluation supports order <= {MAX_EXACT_ORDER}, got {n}"
        ));
    }
    let mut p = BigRational::one();
    for m in 1..=n {
        let shift = BigRational::from_integer(BigInt::from(m) - 1);
        let sign = BigRational::from_integer(BigInt::from(if m % 2 == 0 { 1 } else { -1 }));
        p = (z - shift) * p + sign;
    }
    Ok(RationalValue::new(p))
}

/// `q_n(z)` in exact rational arithmetic, for `n <= MAX_EXACT_ORDER`.
pub fn q_eval_exact(n: u32, z: &BigRational) -> Result<RationalValue> {
    check_exact(n, z)?;
    let one = BigRational::one();
    let q1 = -z / (z + &one);
    let q2 = || (z * z + &one) / (z * (z + &one));
    Ok(RationalValue::new(exact_recurrence(n, z, q1, q2)))
}

/// `r_n(z)` in exact rational arithmetic, for `n <= MAX_EXACT_ORDER`.
pub fn r_eval_exact(n: u32, z: &BigRational) -> Result<RationalValue> {
    check_exact(n, z)?;
    let one = BigRational::one();
    let r1 = -(&one / (z + &one));
    let r2 = || (z - &one) / (z * (z + &one));
    Ok(RationalValue::new(exact_recurrence(n, z, r1, r2)))
}

/// Whether a rational value is zero; convenience for callers building ratios.
pub fn is_zero(v: &RationalValue) -> bool {
    v.value.is_zero()
}

/// Whether a rational value is negative.
pub fn is_negative(v: &RationalValue) -> bool {
    v.value.is_negative()
}
