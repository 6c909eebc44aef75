//! The finite-`rho` functional
//!
//! `Phi(x, a, alpha, rho) = (1/rho) W^{-alpha} D`, where `W` is the integral
//! of `Z^2` over the ladder image of `[x rho, x rho + 2 l_1]` and `D` is the
//! Lemma-18 double integral over `[(x rho)^{1/a}, (x rho)^{1/a} + x rho]`
//! with inner width `a^{-alpha} ln^alpha(x rho)`. It tends to `x` as `rho` grows.

mod fermat;

use serde::{Deserialize, Serialize};
use std::f64::consts::PI;

use crate::error::{domain, Error, Result};
use crate::ladder::Ladder;
use crate::quadrature::{squared_window_integral, IntegralResult, QuadratureSpec};
use crate::zeta::EvaluatorConfig;

pub use fermat::{fermat_probe, fermat_rational, FermatProbeReport, FermatRational, TrajectoryPoint};

/// Smallest `x rho` accepted; below it the ladder is undefined.
pub const MIN_TAU: f64 = 100.0;
/// Where the asymptotic regime is taken to begin.
pub const ASYMPTOTIC_TAU: f64 = 1e3;
/// Runtime guard on the right end of the outer range.
pub const MAX_OUTER_END: f64 = 1e8;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct FunctionalParams {
    pub x: f64,
    pub a: f64,
    pub alpha: f64,
    pub rho: f64,
}

impl FunctionalParams {
    pub fn new(x: f64, a: f64, alpha: f64, rho: f64) -> Result<Self> {
        let p = Self { x, a, alpha, rho };
        p.validate()?;
        Ok(p)
    }

    pub fn validate(&self) -> Result<()> {
        if !(self.x > 0.0) || !self.x.is_finite() {
            return Err(domain("x", self.x, "x > 0"));
        }
        if !(self.a > 0.5 && self.a < 1.0) {
            return Err(domain("a", self.a, "1/2 < a < 1"));
        }
        if !(self.alpha > 0.0) || !self.alpha.is_finite() {
            return Err(domain("alpha", self.alpha, "alpha > 0"));
        }
        if !(self.rho > 0.0) || !self.rho.is_finite() {
            return Err(domain("rho", self.rho, "rho > 0"));
        }
        if !(self.tau() >= MIN_TAU) {
            return Err(domain("x rho", self.tau(), "x rho >= 100"));
        }
        Ok(())
    }

    /// `tau = x rho`.
    pub fn tau(&self) -> f64 {
        self.x * self.rho
    }

    /// Inner width `a^{-alpha} ln^alpha(tau)`.
    pub fn inner_width(&self) -> f64 {
        (self.tau().ln() / self.a).powf(self.alpha)
    }

    /// `[tau^{1/a}, tau^{1/a} + tau]`.
    pub fn outer_range(&self) -> (f64, f64) {
        let tau = self.tau();
        let base = tau.powf(1.0 / self.a);
        (base, base + tau)
    }

    /// True when both `rho` and `x rho` are at least `1e3`.
    pub fn in_asymptotic_regime(&self) -> bool {
        self.rho >= ASYMPTOTIC_TAU && self.tau() >= ASYMPTOTIC_TAU
    }
}

/// The window constant `2 l_1 = (2 pi^3)^{1/(2 alpha)} / a`.
pub fn window_halfwidth(a: f64, alpha: f64) -> Result<f64> {
    if !(a > 0.5) || !a.is_finite() {
        return Err(domain("a", a, "a > 1/2"));
    }
    if !(alpha > 0.0) || !alpha.is_finite() {
        return Err(domain("alpha", alpha, "alpha > 0"));
    }
    Ok((2.0 * PI.powi(3)).powf(0.5 / alpha) / a)
}

/// `int Z^2` from `[x rho]^1` to `[x rho + 2 l_1]^1`.
pub fn z_sq_window(params: &FunctionalParams, ladder: &Ladder) -> Result<IntegralResult> {
    params.validate()?;
    let tau = params.tau();
    let two_l = window_halfwidth(params.a, params.alpha)?;
    let lo = ladder.phi1_inverse(tau)?;
    let hi = ladder.phi1_inverse(tau + two_l)?;
    let r = ladder.segment_integral(lo, hi)?;
    if !(r.value > 0.0) {
        return Err(Error::Precondition(format!("window integral {} on [{lo}, {hi}] is not positive", r.value)));
    }
    Ok(r)
}

/// The outer integral of `(int_t^{t+H} X)^2` over the outer range.
pub fn double_integral(params: &FunctionalParams, cfg: &EvaluatorConfig, spec: &QuadratureSpec) -> Result<IntegralResult> {
    params.validate()?;
    let (lo, hi) = params.outer_range();
    if !(hi <= MAX_OUTER_END) {
        return Err(domain("(x rho)^{1/a} + x rho", hi, "at most 1e8"));
    }
    squared_window_integral(lo, hi - lo, params.inner_width(), cfg, spec)
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PhiValue {
    pub params: FunctionalParams,
    pub value: f64,
    /// Quadrature errors of both factors, propagated linearly.
    pub uncertainty: f64,
    pub window: IntegralResult,
    pub double: IntegralResult,
    /// Present when the point lies outside the asymptotic regime.
    pub caveat: Option<String>,
}

/// `Phi(x, a, alpha, rho)`.
///
/// Computed as `G(tau) / rho` with `tau = x rho` formed first, so
/// `Phi(x, a, alpha, rho) = x Phi(1, a, alpha, x rho)` up to rounding.
pub fn functional_phi(
    params: &FunctionalParams,
    ladder: &Ladder,
    cfg: &EvaluatorConfig,
    spec: &QuadratureSpec,
) -> Result<PhiValue> {
    params.validate()?;
    let window = z_sq_window(params, ladder)?;
    let double = double_integral(params, cfg, spec)?;
    let g = window.value.powf(-params.alpha) * double.value;
    let value = g / params.rho;
    let rel = params.alpha * window.error_estimate / window.value + double.error_estimate / double.value.abs();
    let caveat = (!params.in_asymptotic_regime()).then(|| {
        format!(
            "rho = {} and x rho = {} should both be at least 1e3; the o(1) term is uncontrolled",
            params.rho,
            params.tau()
        )
    });
    Ok(PhiValue {
        params: *params,
        value,
        uncertainty: value.abs() * rel,
        window,
        double,
        caveat,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ladder::LadderModel;

    #[test]
    fn window_constant() {
        assert!((window_halfwidth(1.0, 0.5).unwrap() - 2.0 * PI.powi(3)).abs() < 1e-9);
        assert!((window_halfwidth(1.0, 1.0).unwrap() - 7.874804972861965).abs() < 1e-12);
        let w = window_halfwidth(0.6, 1.3).unwrap();
        assert!((window_halfwidth(1.2, 1.3).unwrap() - w / 2.0).abs() < 1e-15);
        assert!(window_halfwidth(0.5, 1.0).is_err());
        assert!(window_halfwidth(0.7, 0.0).is_err());
    }

    #[test]
    fn params_validation() {
        assert!(FunctionalParams::new(1.0, 0.9, 1.0, 1e3).is_ok());
        assert!(FunctionalParams::new(1.0, 0.5, 1.0, 1e3).is_err());
        assert!(FunctionalParams::new(1.0, 1.0, 1.0, 1e3).is_err());
        assert!(FunctionalParams::new(0.0, 0.9, 1.0, 1e3).is_err());
        assert!(FunctionalParams::new(1.0, 0.9, -1.0, 1e3).is_err());
        assert!(FunctionalParams::new(0.05, 0.9, 1.0, 1e3).is_err());
        let p = FunctionalParams::new(1.0, 0.9, 1.0, 1e4).unwrap();
        assert!((p.inner_width() - 10.23).abs() < 5e-3);
        assert!(p.in_asymptotic_regime());
        assert!(!FunctionalParams::new(0.728, 0.9, 1.0, 1e3).unwrap().in_asymptotic_regime());
    }

    #[test]
    fn window_tracks_log_growth() {
        let l = Ladder::asymptotic(LadderModel::default()).unwrap();
        let p = FunctionalParams::new(1.0, 0.9, 1.0, 1e6).unwrap();
        let w = z_sq_window(&p, &l).unwrap().value;
        let want = window_halfwidth(0.9, 1.0).unwrap() * 1e6f64.ln();
        assert!(w > 0.0);
        assert!((w / want - 1.0).abs() < 0.1, "{w} vs {want}");
    }

    #[test]
    fn outer_range_guard() {
        let p = FunctionalParams::new(1.0, 0.55, 1.0, 1e7).unwrap();
        let err = double_integral(&p, &EvaluatorConfig::default(), &QuadratureSpec::default()).unwrap_err();
        assert!(matches!(err, Error::Domain { .. }));
    }
}
