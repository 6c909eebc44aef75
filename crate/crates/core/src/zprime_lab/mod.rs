//! The points `t_nu` with `theta(t_nu) = pi nu + pi/2`, sums of `Z'` over
//! them, and sign-change scanning for odd-order zeros of `Z` and `Z'`.

mod scan;

use serde::{Deserialize, Serialize};
use std::f64::consts::PI;

use crate::error::{domain, Error, Result};
use crate::ladder::solve_increasing;
use crate::zeta::{theta, theta_prime, z_prime, EvaluatorConfig};

pub use scan::{scan_odd_zeros, Which, ZeroRecord, ZERO_CSV_HEADER};

const RESIDUAL_TOL: f64 = 1e-9;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct NuPoint {
    pub nu: u64,
    pub t_bar: f64,
    /// `theta(t_bar) - pi nu - pi/2`
    pub theta_residual: f64,
}

/// Principal branch of Lambert's `W` for `y > 0`.
fn lambert_w(y: f64) -> f64 {
    let mut w = (1.0 + y).ln();
    for _ in 0..50 {
        let e = w.exp();
        let step = (w * e - y) / (e * (w + 1.0));
        w -= step;
        if step.abs() <= 1e-15 * w.abs() {
            break;
        }
    }
    w
}

/// Solution of `t/2 ln(t / 2 pi) - t/2 - pi/8 = value`.
fn leading_inverse(value: f64) -> f64 {
    let y = (value + PI / 8.0) / (PI * std::f64::consts::E);
    2.0 * PI * std::f64::consts::E * y / lambert_w(y)
}

/// The `t` with `theta(t) = pi nu + pi/2`, for `nu >= 1`.
pub fn nu_point(nu: u64, _cfg: &EvaluatorConfig) -> Result<NuPoint> {
    if nu == 0 {
        return Err(domain("nu", 0.0, "nu >= 1"));
    }
    let target = PI * nu as f64 + 0.5 * PI;
    let guess = leading_inverse(target);
    let lo = 7.0;
    let mut hi = 2.0 * guess + 50.0;
    while theta(hi)? < target {
        hi *= 2.0;
    }
    let t_bar = solve_increasing(theta, theta_prime, target, lo, hi, guess, 1e-15)?;
    let theta_residual = theta(t_bar)? - target;
    if !(theta_residual.abs() < RESIDUAL_TOL) {
        return Err(Error::NoConvergence {
            what: "theta inversion",
            iterations: 200,
        });
    }
    Ok(NuPoint { nu, t_bar, theta_residual })
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SumReport {
    #[serde(rename = "T")]
    pub t: f64,
    #[serde(rename = "H")]
    pub h: f64,
    pub delta: f64,
    pub sum_even: f64,
    pub sum_odd: f64,
    /// `H ln^2(T / 2 pi) / (4 pi)`
    pub main_term: f64,
    pub count_even: usize,
    pub count_odd: usize,
    pub first_nu: u64,
    pub last_nu: u64,
}

/// `sum Z'(t_nu)` over even and odd `nu` separately, for `t_nu` in `[T, T + H]`
/// with `H = T^delta ln T`, `1e3 <= T <= 1e6`, `0 < delta <= 1/6`.
pub fn zprime_sums(t: f64, delta: f64, cfg: &EvaluatorConfig) -> Result<SumReport> {
    if !(1e3..=1e6).contains(&t) {
        return Err(domain("T", t, "1e3 <= T <= 1e6"));
    }
    if !(delta > 0.0 && delta <= 1.0 / 6.0) {
        return Err(domain("delta", delta, "0 < delta <= 1/6"));
    }
    let h = t.powf(delta) * t.ln();
    let nu_of = |x: f64| -> Result<f64> { Ok((theta(x)? - 0.5 * PI) / PI) };
    let mut first = nu_of(t)?.ceil().max(1.0) as u64;
    let mut last = nu_of(t + h)?.floor() as u64;
    // theta near an exact multiple can round either way; settle on the points themselves
    while first > 1 && nu_point(first - 1, cfg)?.t_bar >= t {
        first -= 1;
    }
    while nu_point(first, cfg)?.t_bar < t {
        first += 1;
    }
    while nu_point(last + 1, cfg)?.t_bar <= t + h {
        last += 1;
    }
    while last >= first && nu_point(last, cfg)?.t_bar > t + h {
        last -= 1;
    }
    if last < first {
        return Err(Error::EmptyWindow { lo: t, hi: t + h });
    }
    let (mut sum_even, mut sum_odd) = (0.0, 0.0);
    let (mut count_even, mut count_odd) = (0, 0);
    for nu in first..=last {
        let p = nu_point(nu, cfg)?;
        let d = z_prime(p.t_bar, cfg)?;
        if nu % 2 == 0 {
            sum_even += d;
            count_even += 1;
        } else {
            sum_odd += d;
            count_odd += 1;
        }
    }
    let l = (t / (2.0 * PI)).ln();
    Ok(SumReport {
        t,
        h,
        delta,
        sum_even,
        sum_odd,
        main_term: h * l * l / (4.0 * PI),
        count_even,
        count_odd,
        first_nu: first,
        last_nu: last,
    })
}
