use num_complex::Complex64;
use std::f64::consts::PI;

use super::gamma::ln_gamma;
use super::require_positive;
use crate::error::Result;

/// Below this ordinate theta is taken from the complex log-gamma; above it
/// the asymptotic series is used.
const ASYMPTOTIC_FROM: f64 = 10.0;

/// `(1 - 2^{1-2k}) |B_{2k}| / (4k (2k - 1))`, the coefficient of `t^{-(2k-1)}`.
const THETA_SERIES: [f64; 8] = [
    1.0 / 48.0,
    7.0 / 5760.0,
    31.0 / 80640.0,
    127.0 / 430_080.0,
    511.0 / 1_216_512.0,
    (1.0 - 1.0 / 2048.0) * (691.0 / 2730.0) / (24.0 * 11.0),
    (1.0 - 1.0 / 8192.0) * (7.0 / 6.0) / (28.0 * 13.0),
    (1.0 - 1.0 / 32768.0) * (3617.0 / 510.0) / (32.0 * 15.0),
];

/// Riemann-Siegel theta, `Im ln Gamma(1/4 + it/2) - (t/2) ln pi`.
pub fn theta(t: f64) -> Result<f64> {
    require_positive("t", t)?;
    if t >= ASYMPTOTIC_FROM {
        Ok(theta_asymptotic(t))
    } else {
        Ok(ln_gamma(Complex64::new(0.25, 0.5 * t)).im - 0.5 * t * PI.ln())
    }
}

fn theta_asymptotic(t: f64) -> f64 {
    let inv = 1.0 / t;
    let inv2 = inv * inv;
    let mut tail = 0.0;
    let mut pow = inv;
    for c in THETA_SERIES {
        tail += c * pow;
        pow *= inv2;
    }
    0.5 * t * (t / (2.0 * PI)).ln() - 0.5 * t - PI / 8.0 + tail
}

/// `d theta / dt`.
///
/// Below `t = 10` this is a central difference of [`theta`]; it is only used
/// there for panel sizing.
pub fn theta_prime(t: f64) -> Result<f64> {
    require_positive("t", t)?;
    if t >= ASYMPTOTIC_FROM {
        let inv2 = 1.0 / (t * t);
        let mut tail = 0.0;
        let mut pow = inv2;
        for (k, c) in THETA_SERIES.iter().enumerate() {
            tail -= (2 * k + 1) as f64 * c * pow;
            pow *= inv2;
        }
        Ok(0.5 * (t / (2.0 * PI)).ln() + tail)
    } else {
        let h = 1e-5 * t.max(1.0);
        let lo = (t - h).max(0.5 * t);
        Ok((theta(t + h)? - theta(lo)?) / (t + h - lo))
    }
}

/// Shortest oscillation period of `Z` near `t`: `2 pi / theta'(t)`, with
/// theta' clamped at its value at `t = 10` so the period stays finite where
/// theta is not yet increasing.
pub fn z_wavelength(t: f64) -> f64 {
    let floor = 0.5 * (ASYMPTOTIC_FROM / (2.0 * PI)).ln();
    let slope = if t >= ASYMPTOTIC_FROM {
        theta_prime(t).unwrap_or(floor)
    } else {
        floor
    };
    2.0 * PI / slope.max(floor)
}
