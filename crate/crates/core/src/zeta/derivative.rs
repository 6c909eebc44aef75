//! `Z'(t)` as a sum of Riemann's oscillators with amplitudes `ln(P_0 / n) / sqrt(n)`.

use std::f64::consts::PI;

use super::oracle::zeta_oracle;
use super::riemann_siegel::{oracle_below, rs_remainder_derivative};
use super::theta::theta;
use super::{require_rs_range, EvaluatorConfig};
use crate::error::{domain, Result};

/// `-2 sum_{n < P_0} n^{-1/2} ln(P_0 / n) sin(theta(t) - t ln n)`.
fn oscillator_sum(t: f64, th: f64, p0: f64) -> f64 {
    let mut acc = 0.0;
    let mut n = 1usize;
    while (n as f64) < p0 {
        let nf = n as f64;
        let ln_n = nf.ln();
        acc += (p0.ln() - ln_n) * (th - t * ln_n).sin() / nf.sqrt();
        n += 1;
    }
    -2.0 * acc
}

/// `Z'(t)` for `t >= 10`.
///
/// The oscillator sum with `P_0 = sqrt(t / 2 pi)` taken at `t` itself, plus
/// the derivative of the Riemann-Siegel correction terms `C_0 ..= C_k`. The
/// bare sum is off by `O(t^{-3/4})`, about `5e-3` near `t = 1000`.
pub fn z_prime(t: f64, cfg: &EvaluatorConfig) -> Result<f64> {
    require_rs_range(t)?;
    let th = theta(t)?;
    let p0 = (t / (2.0 * PI)).sqrt();
    Ok(oscillator_sum(t, th, p0) + rs_remainder_derivative(t, cfg.rs_correction_terms))
}

/// `Z'(t)` matching the accuracy of [`super::z_precise`]: a fourth-order
/// central difference of the Euler-Maclaurin `Z` (step `1e-3`) where that
/// evaluator is used, [`z_prime`] elsewhere.
pub fn z_prime_precise(t: f64, cfg: &EvaluatorConfig) -> Result<f64> {
    require_rs_range(t)?;
    if t < oracle_below(cfg) {
        let h = 1e-3;
        let d1 = zeta_oracle(t + h)? - zeta_oracle(t - h)?;
        let d2 = zeta_oracle(t + 2.0 * h)? - zeta_oracle(t - 2.0 * h)?;
        Ok((8.0 * d1 - d2) / (12.0 * h))
    } else {
        z_prime(t, cfg)
    }
}

/// The bare oscillator sum at `t` for a working window that starts at
/// `window_start`, `P_0 = sqrt(window_start / 2 pi)`. Accurate to
/// `O(T^{-1/4} ln T)` for `t` in `[T, T + T^{1/4}]`.
pub fn z_prime_in_window(t: f64, window_start: f64) -> Result<f64> {
    require_rs_range(window_start)?;
    if !(t >= window_start) || !t.is_finite() {
        return Err(domain("t", t, "t >= window start"));
    }
    let p0 = (window_start / (2.0 * PI)).sqrt();
    Ok(oscillator_sum(t, theta(t)?, p0))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::zeta::riemann_siegel_z;

    fn central_difference(t: f64, cfg: &EvaluatorConfig) -> f64 {
        let h = 1e-5;
        (riemann_siegel_z(t + h, cfg).unwrap() - riemann_siegel_z(t - h, cfg).unwrap()) / (2.0 * h)
    }

    #[test]
    fn matches_finite_difference() {
        let cfg = EvaluatorConfig::default();
        for t in [1000.0, 1234.567, 5000.0, 9999.0] {
            let got = z_prime(t, &cfg).unwrap();
            let fd = central_difference(t, &cfg);
            assert!((got - fd).abs() < 1e-3, "t = {t}: {got} vs {fd}");
        }
    }

    #[test]
    fn window_form_close_to_full_derivative() {
        let cfg = EvaluatorConfig::default();
        let t0 = 5000.0;
        for dt in [0.0, 1.3, 4.0] {
            let full = z_prime(t0 + dt, &cfg).unwrap();
            let win = z_prime_in_window(t0 + dt, t0).unwrap();
            // O(T^{-1/4} ln T) with a unit constant
            assert!((full - win).abs() < t0.powf(-0.25) * t0.ln());
        }
    }

    #[test]
    fn precise_form_near_first_zero() {
        // mpmath: siegelz(14.134725141734695, derivative=1)
        let d = z_prime_precise(14.134725141734695, &EvaluatorConfig::default()).unwrap();
        assert!((d - 0.793_160_433_356_506_3).abs() < 1e-9, "{d}");
    }

    #[test]
    fn rejects_bad_input() {
        let cfg = EvaluatorConfig::default();
        assert!(z_prime(9.0, &cfg).is_err());
        assert!(z_prime_in_window(99.0, 100.0).is_err());
    }
}
