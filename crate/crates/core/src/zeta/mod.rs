//! Real-analytic special functions on the critical line `s = 1/2 + it`.
//!
//! Everything here is a pure function of its arguments. Quantities that grow
//! or decay like `exp(±pi t / 4)` are carried with that factor removed so that
//! no intermediate overflows for `t` up to `1e8`.

mod derivative;
mod gamma;
mod hardy;
mod oracle;
mod riemann_siegel;
mod rs_coefficients;
mod theta;
mod trig_sum;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub use derivative::{z_prime, z_prime_in_window, z_prime_precise};
pub use gamma::{ln_gamma, ln_gamma_lanczos, ln_gamma_stirling};
pub use hardy::{
    hl_x, log_abs_gamma_quarter, log_abs_gamma_quarter_scaled, x_from_xi, x_over_z, xi_from_z, ScaledXi,
};
pub use oracle::{zeta_critical_line, zeta_oracle};
pub use riemann_siegel::{
    riemann_siegel_z, rs_correction, rs_error_bound, rs_reliable_from, z_precise, z_value,
};
pub use theta::{theta, theta_prime, z_wavelength};
pub use trig_sum::{trig_sum, TrigSumReport, TRIG_SUM_EXPONENT};

/// Smallest ordinate served by the Riemann-Siegel based evaluators.
pub const RS_MIN_T: f64 = 10.0;

/// Precision and truncation knobs for the critical-line evaluators.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct EvaluatorConfig {
    /// Highest Riemann-Siegel correction `C_k` included (`C_0 ..= C_k`).
    pub rs_correction_terms: usize,
    /// Ordinate above which `ln|Gamma(1/4 + it/2)|` uses the bare Stirling series.
    pub stirling_threshold: f64,
    /// Absolute accuracy requested from [`z_precise`].
    pub oracle_tolerance: f64,
}

impl Default for EvaluatorConfig {
    fn default() -> Self {
        Self {
            rs_correction_terms: 2,
            stirling_threshold: 50.0,
            oracle_tolerance: 1e-9,
        }
    }
}

impl EvaluatorConfig {
    pub const MAX_CORRECTION_TERMS: usize = 4;

    pub fn new(rs_correction_terms: usize, stirling_threshold: f64, oracle_tolerance: f64) -> Result<Self> {
        let cfg = Self {
            rs_correction_terms,
            stirling_threshold,
            oracle_tolerance,
        };
        cfg.validate()?;
        Ok(cfg)
    }

    /// The most accurate Riemann-Siegel truncation allowed.
    pub fn precise() -> Self {
        Self {
            rs_correction_terms: Self::MAX_CORRECTION_TERMS,
            ..Self::default()
        }
    }

    pub fn validate(&self) -> Result<()> {
        if self.rs_correction_terms > Self::MAX_CORRECTION_TERMS {
            return Err(Error::Config(format!(
                "rs_correction_terms = {} exceeds {}",
                self.rs_correction_terms,
                Self::MAX_CORRECTION_TERMS
            )));
        }
        if !(self.stirling_threshold > 2.0 * std::f64::consts::PI) || !self.stirling_threshold.is_finite() {
            return Err(Error::Config(format!(
                "stirling_threshold = {} must exceed 2*pi",
                self.stirling_threshold
            )));
        }
        if !(self.oracle_tolerance > 0.0) || !self.oracle_tolerance.is_finite() {
            return Err(Error::Config(format!(
                "oracle_tolerance = {} must be positive",
                self.oracle_tolerance
            )));
        }
        Ok(())
    }
}

/// All critical-line quantities at one ordinate.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct CriticalLineValue {
    pub t: f64,
    pub z: f64,
    pub theta: f64,
    pub x_hl: f64,
    pub log_abs_gamma: f64,
}

impl CriticalLineValue {
    pub fn at(t: f64, cfg: &EvaluatorConfig) -> Result<Self> {
        Ok(Self {
            t,
            z: riemann_siegel_z(t, cfg)?,
            theta: theta(t)?,
            x_hl: hl_x(t, cfg)?,
            log_abs_gamma: log_abs_gamma_quarter(t, cfg)?,
        })
    }
}

pub(crate) fn require_positive(name: &'static str, t: f64) -> Result<()> {
    if t > 0.0 && t.is_finite() {
        Ok(())
    } else {
        Err(crate::error::domain(name, t, "must be positive and finite"))
    }
}

pub(crate) fn require_rs_range(t: f64) -> Result<()> {
    if t >= RS_MIN_T && t.is_finite() {
        Ok(())
    } else {
        Err(crate::error::domain("t", t, "t >= 10"))
    }
}
