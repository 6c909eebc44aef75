use num_complex::Complex64;
use serde::{Deserialize, Serialize};
use std::f64::consts::PI;

use crate::error::{Error, Result};

/// Exponent in the bound `S(a, b) << sqrt(a) t^Delta`.
pub const TRIG_SUM_EXPONENT: f64 = 35.0 / 216.0;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct TrigSumReport {
    pub a: f64,
    pub b: f64,
    pub t: f64,
    pub re: f64,
    pub im: f64,
    pub magnitude: f64,
    pub terms: u64,
    pub delta: f64,
    /// `|S| / (sqrt(a) t^delta)`
    pub normalized: f64,
}

/// Direct summation of `S(a, b) = sum_{a <= n < b} n^{it}`.
///
/// Requires `0 < a <= b <= 2a` and `b <= sqrt(t / 2 pi)`.
pub fn trig_sum(a: f64, b: f64, t: f64, delta: f64) -> Result<TrigSumReport> {
    if !(a > 0.0 && a <= b && b <= 2.0 * a) || !b.is_finite() {
        return Err(Error::Precondition(format!("need 0 < a <= b <= 2a, got a = {a}, b = {b}")));
    }
    if !(t > 0.0) || !t.is_finite() || !delta.is_finite() {
        return Err(Error::Precondition(format!("need finite t > 0 and delta, got t = {t}, delta = {delta}")));
    }
    let limit = (t / (2.0 * PI)).sqrt();
    if b > limit {
        return Err(Error::Precondition(format!("b = {b} exceeds sqrt(t / 2 pi) = {limit}")));
    }
    let first = a.ceil() as u64;
    let end = b.ceil() as u64;
    let mut sum = Complex64::new(0.0, 0.0);
    for n in first..end {
        let phase = t * (n as f64).ln();
        let (s, c) = phase.sin_cos();
        sum += Complex64::new(c, s);
    }
    let magnitude = sum.norm();
    Ok(TrigSumReport {
        a,
        b,
        t,
        re: sum.re,
        im: sum.im,
        magnitude,
        terms: end.saturating_sub(first),
        delta,
        normalized: magnitude / (a.sqrt() * t.powf(delta)),
    })
}
