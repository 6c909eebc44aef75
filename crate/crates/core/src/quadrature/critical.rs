//! The integrals of `X` and `Z^2` over the critical line.

use serde::{Deserialize, Serialize};
use std::f64::consts::PI;
use std::str::FromStr;

use super::{integrate, CumulativeIntegral, IntegralResult, QuadratureSpec};
use crate::error::{domain, Error, Result};
use crate::zeta::{hl_x, z_value, z_wavelength, EvaluatorConfig};

pub const EULER_GAMMA: f64 = 0.577_215_664_901_532_9;

/// Lower limit of the quadrature form of `J(T)`; `int_0^1 Z^2` is left out.
const J_CUTOFF: f64 = 1.0;
const J_QUADRATURE_MAX: f64 = 1e5;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum JMode {
    Asymptotic,
    Quadrature,
}

impl FromStr for JMode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_lowercase().as_str() {
            "asymptotic" => Ok(JMode::Asymptotic),
            "quadrature" => Ok(JMode::Quadrature),
            other => Err(Error::Config(format!("unknown J mode {other:?}"))),
        }
    }
}

impl std::fmt::Display for JMode {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            JMode::Asymptotic => "asymptotic",
            JMode::Quadrature => "quadrature",
        })
    }
}

/// `Z(t)^2 = |zeta(1/2 + it)|^2`.
pub fn z_squared(t: f64, cfg: &EvaluatorConfig) -> Result<f64> {
    let z = z_value(t, cfg)?;
    Ok(z * z)
}

fn half_wavelength(t: f64) -> f64 {
    0.5 * z_wavelength(t)
}

/// `int_t^{t+H} X(u) du` for `t >= 100`, `0 <= H <= t / 2`.
pub fn inner_j(t: f64, h: f64, cfg: &EvaluatorConfig, spec: &QuadratureSpec) -> Result<IntegralResult> {
    if !(t >= 100.0) || !t.is_finite() {
        return Err(domain("t", t, "t >= 100"));
    }
    if !(0.0..=0.5 * t).contains(&h) {
        return Err(domain("H", h, "0 <= H <= t/2"));
    }
    let cfg = *cfg;
    integrate(move |u| hl_x(u, &cfg), t, t + h, z_wavelength, spec)
}

/// `int_T^{T+U} (int_t^{t+H} X(u) du)^2 dt`.
///
/// Requires `T >= 1000`, `sqrt(T) < U <= T^0.95` and `0 <= H <= T^{1/3}`.
pub fn lemma18_lhs(t0: f64, u: f64, h: f64, cfg: &EvaluatorConfig, spec: &QuadratureSpec) -> Result<IntegralResult> {
    if !(t0 >= 1e3) || !t0.is_finite() {
        return Err(domain("T", t0, "T >= 1000"));
    }
    if !(u > t0.sqrt() && u <= t0.powf(0.95)) {
        return Err(Error::Precondition(format!("need sqrt(T) < U <= T^0.95, got U = {u} at T = {t0}")));
    }
    if !(h >= 0.0 && h <= t0.cbrt()) {
        return Err(Error::Precondition(format!("need 0 <= H <= T^(1/3), got H = {h} at T = {t0}")));
    }
    squared_window_integral(t0, u, h, cfg, spec)
}

/// `int_T^{T+U} (int_t^{t+H} X(u) du)^2 dt` for `T >= 100`, `U > 0`, `H >= 0`.
///
/// The inner integral is read off one tabulated primitive of `X` on
/// `[T, T + U + H]`; its error enters through Cauchy-Schwarz.
pub fn squared_window_integral(
    t0: f64,
    u: f64,
    h: f64,
    cfg: &EvaluatorConfig,
    spec: &QuadratureSpec,
) -> Result<IntegralResult> {
    if !(t0 >= 100.0) || !t0.is_finite() {
        return Err(domain("T", t0, "T >= 100"));
    }
    if !(u > 0.0) || !u.is_finite() {
        return Err(domain("U", u, "U > 0"));
    }
    if !(h >= 0.0) || !h.is_finite() {
        return Err(domain("H", h, "H >= 0"));
    }
    if h == 0.0 {
        return Ok(IntegralResult::zero());
    }
    let c = *cfg;
    let prim = CumulativeIntegral::new(move |x| hl_x(x, &c), t0, t0 + u + h, z_wavelength, spec)?;
    let inner_err = 2.0 * prim.at(prim.hi())?.error_estimate;
    let outer = integrate(
        |t| {
            let j = prim.between(t, t + h)?.value;
            Ok(j * j)
        },
        t0,
        t0 + u,
        half_wavelength,
        spec,
    )?;
    Ok(IntegralResult {
        value: outer.value,
        error_estimate: outer.error_estimate + 2.0 * inner_err * (outer.value.abs() * u).sqrt(),
        evaluations: outer.evaluations * 15 + prim.evaluations(),
    })
}

/// Classical leading terms `T ln T + (2c - 1 - ln 2 pi) T` of `int_0^T Z^2`,
/// `c` being Euler's constant.
pub fn j_asymptotic(t: f64, euler_c: f64) -> f64 {
    t * t.ln() + (2.0 * euler_c - 1.0 - (2.0 * PI).ln()) * t
}

/// The Hardy-Littlewood integral `J(T) = int_0^T Z(t)^2 dt`.
///
/// Quadrature mode integrates from `t = 1` and is limited to `T <= 1e5`.
/// Asymptotic mode reports no error estimate and no evaluations.
pub fn hardy_littlewood_j(
    t: f64,
    mode: JMode,
    cfg: &EvaluatorConfig,
    spec: &QuadratureSpec,
) -> Result<IntegralResult> {
    if !(t >= 10.0) || !t.is_finite() {
        return Err(domain("T", t, "T >= 10"));
    }
    match mode {
        JMode::Asymptotic => Ok(IntegralResult {
            value: j_asymptotic(t, EULER_GAMMA),
            error_estimate: 0.0,
            evaluations: 0,
        }),
        JMode::Quadrature => {
            if t > J_QUADRATURE_MAX {
                return Err(domain("T", t, "T <= 1e5 in quadrature mode"));
            }
            let cfg = *cfg;
            integrate(move |x| z_squared(x, &cfg), J_CUTOFF, t, half_wavelength, spec)
        }
    }
}

/// `J(T)` tabulated once on `[1, t_max]` for repeated queries.
#[derive(Debug)]
pub struct ZSquaredPrimitive {
    table: CumulativeIntegral,
}

impl ZSquaredPrimitive {
    pub fn new(t_max: f64, cfg: &EvaluatorConfig, spec: &QuadratureSpec) -> Result<Self> {
        if !(10.0..=J_QUADRATURE_MAX).contains(&t_max) {
            return Err(domain("t_max", t_max, "10 <= t_max <= 1e5"));
        }
        let cfg = *cfg;
        let table = CumulativeIntegral::new(move |x| z_squared(x, &cfg), J_CUTOFF, t_max, half_wavelength, spec)?;
        Ok(Self { table })
    }

    pub fn t_max(&self) -> f64 {
        self.table.hi()
    }

    /// `J(t)` for `1 <= t <= t_max`.
    pub fn j(&self, t: f64) -> Result<IntegralResult> {
        self.table.at(t)
    }

    /// `int_a^b Z^2`.
    pub fn between(&self, a: f64, b: f64) -> Result<IntegralResult> {
        self.table.between(a, b)
    }

    /// `J'(t) = Z(t)^2`.
    pub fn derivative(&self, t: f64) -> Result<f64> {
        self.table.integrand(t)
    }
}
