use std::f64::consts::PI;
use std::sync::OnceLock;

use super::oracle::zeta_oracle;
use super::rs_coefficients::PSI_EVEN;
use super::theta::theta;
use super::{require_rs_range, EvaluatorConfig};
use crate::error::Result;

/// `CORRECTION_WEIGHTS[k][j] = d_j^(k)` in `C_k(p) = sum_j d_j^(k) Psi^(3k - 4j)(p) / pi^(2k - 2j)`.
const CORRECTION_WEIGHTS: [&[f64]; 5] = [
    &[1.0],
    &[-1.0 / 96.0],
    &[1.0 / 18_432.0, 1.0 / 64.0],
    &[-1.0 / 5_308_416.0, -1.0 / 3840.0, -1.0 / 64.0],
    &[1.0 / 2_038_431_744.0, 11.0 / 5_898_240.0, 19.0 / 24_576.0, 1.0 / 128.0],
];

/// Known bounds `|R_k(t)| <= d_k t^{-(2k+3)/4}` for the remainder after
/// `C_0 ..= C_k`, valid for `t >= 200`.
const REMAINDER_BOUND: [f64; 5] = [0.127, 0.053, 0.011, 0.031, 0.017];
const REMAINDER_BOUND_FROM: f64 = 200.0;

/// Largest ordinate the Euler-Maclaurin fallback is asked to serve.
const ORACLE_CEILING: f64 = 1e5;

/// Coefficients in `u = p - 1/2` of the `m`-th derivative of `Psi`.
fn derivative_coefficients(m: usize) -> Vec<f64> {
    let degree = 2 * (PSI_EVEN.len() - 1);
    let mut out = vec![0.0; degree + 1 - m.min(degree)];
    for (j, &a) in PSI_EVEN.iter().enumerate() {
        let power = 2 * j;
        if power < m {
            continue;
        }
        let falling = ((power - m + 1)..=power).fold(1.0, |f, i| f * i as f64);
        out[power - m] = a * falling;
    }
    out
}

/// Polynomials in `u = p - 1/2` for `C_0 ..= C_4`.
fn correction_polynomials() -> &'static [Vec<f64>; 5] {
    static POLYS: OnceLock<[Vec<f64>; 5]> = OnceLock::new();
    POLYS.get_or_init(|| {
        std::array::from_fn(|k| {
            let mut poly: Vec<f64> = Vec::new();
            for (j, &w) in CORRECTION_WEIGHTS[k].iter().enumerate() {
                let scale = w / PI.powi((2 * k - 2 * j) as i32);
                let d = derivative_coefficients(3 * k - 4 * j);
                if poly.len() < d.len() {
                    poly.resize(d.len(), 0.0);
                }
                for (i, c) in d.iter().enumerate() {
                    poly[i] += scale * c;
                }
            }
            // |u| <= 1/2, so trailing coefficients below 1e-22 * 2^i are noise.
            while poly.len() > 1 {
                let i = poly.len() - 1;
                if poly[i].abs() * 0.5f64.powi(i as i32) < 1e-22 {
                    poly.pop();
                } else {
                    break;
                }
            }
            poly
        })
    })
}

/// The Riemann-Siegel correction coefficient `C_k(p)` for `k <= 4`.
pub fn rs_correction(k: usize, p: f64) -> f64 {
    let u = p - 0.5;
    correction_polynomials()[k]
        .iter()
        .rev()
        .fold(0.0, |acc, &c| acc * u + c)
}

/// Bound on the truncation error of [`riemann_siegel_z`] with `C_0 ..= C_k`.
///
/// The bound is proven for `t >= 200`; below that the same expression is
/// returned as an estimate only.
pub fn rs_error_bound(t: f64, k: usize) -> f64 {
    let k = k.min(REMAINDER_BOUND.len() - 1);
    REMAINDER_BOUND[k] * t.powf(-((2 * k + 3) as f64) / 4.0)
}

/// Smallest ordinate from which the Riemann-Siegel truncation in `cfg` is
/// guaranteed to be within `cfg.oracle_tolerance`.
pub fn rs_reliable_from(cfg: &EvaluatorConfig) -> f64 {
    let k = cfg.rs_correction_terms.min(REMAINDER_BOUND.len() - 1);
    let exponent = 4.0 / (2 * k + 3) as f64;
    (REMAINDER_BOUND[k] / cfg.oracle_tolerance).powf(exponent).max(REMAINDER_BOUND_FROM)
}

/// Hardy's function `Z(t)` by the Riemann-Siegel formula: the main sum over
/// `n <= floor(sqrt(t / 2 pi))` plus the corrections `C_0 ..= C_k`,
/// `k = cfg.rs_correction_terms`.
pub fn riemann_siegel_z(t: f64, cfg: &EvaluatorConfig) -> Result<f64> {
    require_rs_range(t)?;
    let th = theta(t)?;
    Ok(riemann_siegel_with_theta(t, th, cfg.rs_correction_terms))
}

pub(crate) fn riemann_siegel_with_theta(t: f64, th: f64, terms: usize) -> f64 {
    let a = (t / (2.0 * PI)).sqrt();
    let n_max = a.floor() as usize;
    let p = a - n_max as f64;

    let mut main = 0.0;
    for n in 1..=n_max {
        let nf = n as f64;
        main += (th - t * nf.ln()).cos() / nf.sqrt();
    }

    let inv_a = 1.0 / a;
    let mut series = 0.0;
    let mut pow = 1.0;
    for k in 0..=terms.min(CORRECTION_WEIGHTS.len() - 1) {
        series += rs_correction(k, p) * pow;
        pow *= inv_a;
    }
    let sign = if n_max % 2 == 1 { 1.0 } else { -1.0 };
    2.0 * main + sign * series / a.sqrt()
}

/// `d/dt` of the correction part `(-1)^{N-1} a^{-1/2} sum_k C_k(p) a^{-k}`
/// of the Riemann-Siegel formula, `a = sqrt(t / 2 pi)`, `p = frac(a)`.
pub(crate) fn rs_remainder_derivative(t: f64, terms: usize) -> f64 {
    let a = (t / (2.0 * PI)).sqrt();
    let n_max = a.floor() as usize;
    let p = a - n_max as f64;
    let u = p - 0.5;
    // da/dt = dp/dt
    let da = 1.0 / (4.0 * PI * a);
    let mut total = 0.0;
    for (k, poly) in correction_polynomials()
        .iter()
        .enumerate()
        .take(terms.min(CORRECTION_WEIGHTS.len() - 1) + 1)
    {
        let value = poly.iter().rev().fold(0.0, |acc, &c| acc * u + c);
        let slope = poly
            .iter()
            .enumerate()
            .skip(1)
            .rev()
            .fold(0.0, |acc, (i, &c)| acc * u + i as f64 * c);
        let kf = k as f64;
        total += (slope - (kf + 0.5) * value / a) * a.powf(-kf - 0.5);
    }
    let sign = if n_max % 2 == 1 { 1.0 } else { -1.0 };
    sign * total * da
}

/// `Z(t)` for any `t > 0`: Euler-Maclaurin below `t = 10`, Riemann-Siegel above.
pub fn z_value(t: f64, cfg: &EvaluatorConfig) -> Result<f64> {
    if t < super::RS_MIN_T {
        zeta_oracle(t)
    } else {
        riemann_siegel_z(t, cfg)
    }
}

/// Where [`z_precise`] hands over from Euler-Maclaurin to Riemann-Siegel.
pub(crate) fn oracle_below(cfg: &EvaluatorConfig) -> f64 {
    rs_reliable_from(cfg).min(ORACLE_CEILING)
}

/// `Z(t)` to within `cfg.oracle_tolerance`: Riemann-Siegel wherever its
/// proven truncation bound allows, the Euler-Maclaurin evaluation elsewhere.
pub fn z_precise(t: f64, cfg: &EvaluatorConfig) -> Result<f64> {
    if t < oracle_below(cfg) {
        zeta_oracle(t)
    } else {
        riemann_siegel_z(t, cfg)
    }
}
