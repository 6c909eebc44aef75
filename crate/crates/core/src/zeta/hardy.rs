//! The Hardy-Littlewood `X(t)`, `Xi(t)` and the gamma factor linking them to `Z(t)`.
//!
//! `|Gamma(1/4 + it/2)|` decays like `exp(-pi t / 4)` and `Xi` with it, so both
//! are handled through their scaled forms with `exp(pi t / 4)` divided out.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};
use std::f64::consts::PI;

use super::gamma::{ln_abs_gamma_quarter_scaled_stirling, ln_gamma_lanczos};
use super::riemann_siegel::riemann_siegel_z;
use super::{require_positive, require_rs_range, EvaluatorConfig};
use crate::error::Result;

/// `ln|Gamma(1/4 + it/2)|`.
///
/// Lanczos below `cfg.stirling_threshold`, the Stirling series above it.
pub fn log_abs_gamma_quarter(t: f64, cfg: &EvaluatorConfig) -> Result<f64> {
    require_positive("t", t)?;
    if t < cfg.stirling_threshold {
        Ok(ln_gamma_lanczos(Complex64::new(0.25, 0.5 * t)).re)
    } else {
        Ok(ln_abs_gamma_quarter_scaled_stirling(t) - 0.25 * PI * t)
    }
}

/// `ln|Gamma(1/4 + it/2)| + pi t / 4`, which stays of size `ln t`.
pub fn log_abs_gamma_quarter_scaled(t: f64, cfg: &EvaluatorConfig) -> Result<f64> {
    require_positive("t", t)?;
    if t < cfg.stirling_threshold {
        Ok(ln_gamma_lanczos(Complex64::new(0.25, 0.5 * t)).re + 0.25 * PI * t)
    } else {
        Ok(ln_abs_gamma_quarter_scaled_stirling(t))
    }
}

/// The positive factor `X(t) / Z(t) = pi^{-1/4} t^{1/4} exp(pi t/4) |Gamma(1/4 + it/2)| / 2`.
pub fn x_over_z(t: f64, cfg: &EvaluatorConfig) -> Result<f64> {
    let scaled = log_abs_gamma_quarter_scaled(t, cfg)?;
    Ok(0.5 * (0.25 * (t / PI).ln() + scaled).exp())
}

/// Hardy-Littlewood `X(t)` for `t >= 10`.
pub fn hl_x(t: f64, cfg: &EvaluatorConfig) -> Result<f64> {
    require_rs_range(t)?;
    Ok(x_over_z(t, cfg)? * riemann_siegel_z(t, cfg)?)
}

/// `Xi(t)` carried as `Xi(t) exp(pi t / 4)`; the bare value underflows
/// past `t` of a few hundred.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ScaledXi {
    pub t: f64,
    pub scaled: f64,
}

impl ScaledXi {
    /// The bare `Xi(t)`, possibly zero after underflow.
    pub fn value(&self) -> f64 {
        self.scaled * (-0.25 * PI * self.t).exp()
    }

    /// `ln|Xi(t)|`, finite whenever `Xi(t) != 0`.
    pub fn ln_abs(&self) -> f64 {
        self.scaled.abs().ln() - 0.25 * PI * self.t
    }
}

/// `Xi(t) = -Z(t) (1/4 + t^2) |Gamma(1/4 + it/2)| / (2 pi^{1/4})`.
pub fn xi_from_z(t: f64, cfg: &EvaluatorConfig) -> Result<ScaledXi> {
    require_rs_range(t)?;
    let z = riemann_siegel_z(t, cfg)?;
    let log_mag = (0.25 + t * t).ln() + log_abs_gamma_quarter_scaled(t, cfg)? - 0.25 * PI.ln();
    Ok(ScaledXi {
        t,
        scaled: -0.5 * z * log_mag.exp(),
    })
}

/// `X(t) = -t^{1/4} exp(pi t/4) Xi(t) / (1/4 + t^2)`.
pub fn x_from_xi(xi: &ScaledXi) -> f64 {
    let t = xi.t;
    -t.powf(0.25) * xi.scaled / (0.25 + t * t)
}
