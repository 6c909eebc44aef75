use num_complex::Complex64;

const HALF_LN_TWO_PI: f64 = 0.918_938_533_204_672_8;

/// `B_{2k} / (2k (2k - 1))` for k = 1..=10.
const STIRLING: [f64; 10] = [
    1.0 / 12.0,
    -1.0 / 360.0,
    1.0 / 1260.0,
    -1.0 / 1680.0,
    1.0 / 1188.0,
    -691.0 / 360_360.0,
    1.0 / 156.0,
    -3617.0 / 122_400.0,
    43867.0 / 244_188.0,
    -174_611.0 / 125_400.0,
];

// g = 7, n = 9
const LANCZOS_G: f64 = 7.0;
const LANCZOS: [f64; 9] = [
    0.999_999_999_999_809_93,
    676.520_368_121_885_1,
    -1_259.139_216_722_402_8,
    771.323_428_777_653_13,
    -176.615_029_162_140_59,
    12.507_343_278_686_905,
    -0.138_571_095_265_720_12,
    9.984_369_578_019_571_6e-6,
    1.505_632_735_149_311_6e-7,
];

/// Stirling series for `ln Gamma(z)` without argument shifting.
///
/// Accurate to double precision once `|z| >= 15` with `Re z > 0`; the
/// imaginary part follows the principal branch, continuous in the right
/// half plane.
pub fn ln_gamma_stirling(z: Complex64) -> Complex64 {
    let inv = z.inv();
    let inv2 = inv * inv;
    let mut corr = Complex64::new(0.0, 0.0);
    let mut pow = inv;
    for c in STIRLING {
        let term = pow * c;
        corr += term;
        if term.norm() < 1e-18 * corr.norm() {
            break;
        }
        pow *= inv2;
    }
    (z - 0.5) * z.ln() - z + HALF_LN_TWO_PI + corr
}

/// Principal `ln Gamma(z)` for `Re z > 0`, shifting `z` upward until the
/// Stirling series is accurate.
pub fn ln_gamma(z: Complex64) -> Complex64 {
    let mut shift = Complex64::new(0.0, 0.0);
    let mut w = z;
    while w.norm() < 15.0 {
        shift += w.ln();
        w += 1.0;
    }
    ln_gamma_stirling(w) - shift
}

/// Lanczos approximation of `ln Gamma(z)`, relative accuracy ~1e-15 for
/// `Re z > 0`. Only the real part is branch-safe; the imaginary part is
/// correct modulo `2 pi`.
pub fn ln_gamma_lanczos(z: Complex64) -> Complex64 {
    if z.re < 0.5 {
        return ln_gamma_lanczos(z + 1.0) - z.ln();
    }
    let z = z - 1.0;
    let mut x = Complex64::new(LANCZOS[0], 0.0);
    for (i, &c) in LANCZOS.iter().enumerate().skip(1) {
        x += c / (z + i as f64);
    }
    let t = z + LANCZOS_G + 0.5;
    HALF_LN_TWO_PI + (z + 0.5) * t.ln() - t + x.ln()
}

/// `Re[(z - 1/2) ln z - z] + pi t / 4` for `z = 1/4 + it/2`, formed without
/// the cancellation between the two `pi t / 4` sized pieces.
pub(crate) fn stirling_quarter_scaled_leading(t: f64) -> f64 {
    let half_t = 0.5 * t;
    let ln_modulus = 0.5 * (half_t * half_t + 0.0625).ln();
    // arg z = pi/2 - atan(1/(2t))
    -0.25 * ln_modulus + half_t * (0.5 / t).atan() - 0.25
}

/// `ln|Gamma(1/4 + it/2)| + pi t / 4` from the Stirling series.
pub(crate) fn ln_abs_gamma_quarter_scaled_stirling(t: f64) -> f64 {
    let z = Complex64::new(0.25, 0.5 * t);
    let inv = z.inv();
    let inv2 = inv * inv;
    let mut corr = 0.0;
    let mut pow = inv;
    for c in STIRLING {
        let term = (pow * c).re;
        corr += term;
        pow *= inv2;
        if pow.norm() < 1e-18 {
            break;
        }
    }
    stirling_quarter_scaled_leading(t) + HALF_LN_TWO_PI + corr
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::PI;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn real_axis_factorials() {
        // ln(9!) = ln 362880
        let v = ln_gamma(c(10.0, 0.0));
        assert!((v.re - 362_880f64.ln()).abs() < 1e-13);
        assert!(v.im.abs() < 1e-15);
        let l = ln_gamma_lanczos(c(10.0, 0.0));
        assert!((l.re - 362_880f64.ln()).abs() < 1e-12);
        // Gamma(1/2) = sqrt(pi)
        assert!((ln_gamma(c(0.5, 0.0)).re - 0.5 * PI.ln()).abs() < 1e-14);
    }

    #[test]
    fn reflection_modulus_on_half_line() {
        // |Gamma(1/2 + iy)|^2 = pi / cosh(pi y)
        for y in [0.3, 2.0, 7.5, 19.0] {
            let lhs = 2.0 * ln_gamma(c(0.5, y)).re;
            let rhs = PI.ln() - (PI * y).cosh().ln();
            assert!((lhs - rhs).abs() < 1e-12, "y = {y}: {lhs} vs {rhs}");
            let lz = 2.0 * ln_gamma_lanczos(c(0.5, y)).re;
            assert!((lz - rhs).abs() < 1e-12, "lanczos y = {y}");
        }
    }

    #[test]
    fn recurrence_holds_off_axis() {
        let z = c(0.25, 3.7);
        let lhs = ln_gamma(z + 1.0);
        let rhs = ln_gamma(z) + z.ln();
        assert!((lhs - rhs).norm() < 1e-13);
    }

    #[test]
    fn scaled_quarter_matches_direct_form() {
        for t in [60.0, 300.0, 2000.0] {
            let direct = ln_gamma_stirling(c(0.25, 0.5 * t)).re + 0.25 * PI * t;
            let scaled = ln_abs_gamma_quarter_scaled_stirling(t);
            assert!((direct - scaled).abs() < 1e-11 * t, "t = {t}");
        }
    }
}
