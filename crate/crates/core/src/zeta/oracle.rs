//! Slow reference evaluation of `zeta(1/2 + it)` by Euler-Maclaurin summation.
//!
//! Independent of the Riemann-Siegel path: the only shared ingredient is
//! theta, which turns `zeta` into `Z`.

use num_complex::Complex64;
use std::f64::consts::PI;
use std::sync::OnceLock;

use super::theta::theta;
use crate::error::{domain, Result};

const MIN_T: f64 = 0.1;
const MAX_T: f64 = 1e5;
const MAX_CORRECTIONS: usize = 60;

/// `B_2, B_4, ..., B_20`.
const BERNOULLI: [f64; 10] = [
    1.0 / 6.0,
    -1.0 / 30.0,
    1.0 / 42.0,
    -1.0 / 30.0,
    5.0 / 66.0,
    -691.0 / 2730.0,
    7.0 / 6.0,
    -3617.0 / 510.0,
    43867.0 / 798.0,
    -174_611.0 / 330.0,
];

/// `B_{2k} / (2k)!` for k = 1..=MAX_CORRECTIONS. Past the tabulated values it
/// comes from `(-1)^{k+1} 2 zeta(2k) / (2 pi)^{2k}`, where 60 terms of the
/// zeta series already reach double precision.
fn bernoulli_over_factorial() -> &'static [f64] {
    static TABLE: OnceLock<Vec<f64>> = OnceLock::new();
    TABLE.get_or_init(|| {
        let two_pi_sq = (2.0 * PI) * (2.0 * PI);
        let mut scale = 1.0;
        let mut factorial = 1.0;
        (1..=MAX_CORRECTIONS)
            .map(|k| {
                scale /= two_pi_sq;
                factorial *= ((2 * k - 1) * (2 * k)) as f64;
                if let Some(b) = BERNOULLI.get(k - 1) {
                    return b / factorial;
                }
                let exponent = (2 * k) as f64;
                let zeta: f64 = (2..=60).rev().map(|n| (n as f64).powf(-exponent)).sum::<f64>() + 1.0;
                let sign = if k % 2 == 1 { 1.0 } else { -1.0 };
                sign * 2.0 * zeta * scale
            })
            .collect()
    })
}

// Double-double helpers: a value is `hi + lo` with `|lo| <= ulp(hi) / 2`.
type Dd = (f64, f64);

const LN2: Dd = (std::f64::consts::LN_2, 2.319_046_813_846_299_6e-17);
const TWO_PI: Dd = (2.0 * PI, 2.449_293_598_294_706_4e-16);

fn two_sum(a: f64, b: f64) -> Dd {
    let s = a + b;
    let v = s - a;
    (s, (a - (s - v)) + (b - v))
}

fn two_prod(a: f64, b: f64) -> Dd {
    let p = a * b;
    (p, a.mul_add(b, -p))
}

fn dd_add(x: Dd, y: Dd) -> Dd {
    let (s, e) = two_sum(x.0, y.0);
    let (hi, lo) = two_sum(s, e + x.1 + y.1);
    (hi, lo)
}

fn dd_mul(x: Dd, y: Dd) -> Dd {
    let (p, e) = two_prod(x.0, y.0);
    two_sum(p, e + x.0 * y.1 + x.1 * y.0)
}

fn dd_div(x: Dd, d: f64) -> Dd {
    let q = x.0 / d;
    let (p, e) = two_prod(q, d);
    two_sum(q, (x.0 - p - e + x.1) / d)
}

/// `exp(l)` to about 30 digits for moderate `l`.
fn dd_exp(l: f64) -> Dd {
    let k = (l / LN2.0).round();
    let (p, pe) = two_prod(k, LN2.0);
    let (s, se) = two_sum(l, -p);
    let r = two_sum(s, se - pe - k * LN2.1);
    let mut sum: Dd = (1.0, 0.0);
    let mut term: Dd = (1.0, 0.0);
    for i in 1..40 {
        term = dd_div(dd_mul(term, r), i as f64);
        sum = dd_add(sum, term);
        if term.0.abs() < 1e-33 {
            break;
        }
    }
    let scale = 2f64.powi(k as i32);
    (sum.0 * scale, sum.1 * scale)
}

/// `ln n` as `(ln n rounded, remainder)`, one Newton step on a double-double exp.
fn dd_ln(n: f64) -> Dd {
    let l = n.ln();
    let e = dd_exp(l);
    (l, ((n - e.0) - e.1) / e.0)
}

/// `n^{-s}` for `s = 1/2 + it`. The phase `t ln n` is formed and reduced
/// mod `2 pi` in double-double: at `t ~ 1e5` a plain product is off by
/// `1e-11` per term.
fn inverse_power(n: f64, t: f64) -> Complex64 {
    let ln_n = dd_ln(n);
    let (ph, pe) = two_prod(t, ln_n.0);
    let low = pe + t * ln_n.1;
    let q = (ph / TWO_PI.0).round();
    let (a, ae) = two_prod(q, TWO_PI.0);
    let r = (ph - a) - ae - q * TWO_PI.1 + low;
    let (s, c) = r.sin_cos();
    let mag = 1.0 / n.sqrt();
    Complex64::new(mag * c, -mag * s)
}

/// `zeta(1/2 + it)` for `0.1 <= t <= 1e5`.
pub fn zeta_critical_line(t: f64) -> Result<Complex64> {
    if !(MIN_T..=MAX_T).contains(&t) {
        return Err(domain("t", t, "0.1 <= t <= 1e5"));
    }
    let s = Complex64::new(0.5, t);
    let cutoff = (t / PI).ceil().max(20.0);
    let n_cut = cutoff as usize;

    let mut head = Complex64::new(0.0, 0.0);
    for n in (1..n_cut).rev() {
        head += inverse_power(n as f64, t);
    }

    let n_pow = inverse_power(cutoff, t);
    let mut sum = head + n_pow * cutoff / (s - 1.0) + n_pow * 0.5;

    let inv_n2 = 1.0 / (cutoff * cutoff);
    // rising = s (s+1) ... (s+2k-2); power = N^{-s-2k+1}
    let mut rising = s;
    let mut power = n_pow / cutoff;
    for (k, &b) in bernoulli_over_factorial().iter().enumerate() {
        let term = rising * power * b;
        sum += term;
        if term.norm() < 1e-17 * sum.norm().max(1e-3) {
            break;
        }
        let kf = (k + 1) as f64;
        rising *= (s + (2.0 * kf - 1.0)) * (s + 2.0 * kf);
        power *= inv_n2;
    }
    Ok(sum)
}

/// `Z(t) = Re(exp(i theta(t)) zeta(1/2 + it))` for `0.1 <= t <= 1e5`.
pub fn zeta_oracle(t: f64) -> Result<f64> {
    let zeta = zeta_critical_line(t)?;
    let rot = Complex64::from_polar(1.0, theta(t)?);
    Ok((rot * zeta).re)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bernoulli_table_head() {
        let b = bernoulli_over_factorial();
        assert!((b[0] - 1.0 / 12.0).abs() < 1e-16);
        assert!((b[1] + 1.0 / 720.0).abs() < 1e-17);
        assert!((b[2] - 1.0 / 30_240.0).abs() < 1e-19);
    }

    #[test]
    fn double_double_log() {
        // ln 10 = 2.302585092994045684017991454684364...
        let (hi, lo) = dd_ln(10.0);
        assert_eq!(hi, 10f64.ln());
        assert!((lo - (-2.170_756_223_382_249_4e-16)).abs() < 1e-30);
        let e = dd_exp(1.0);
        assert!((e.0 - std::f64::consts::E).abs() == 0.0);
        assert!((e.1 - 1.445_646_891_729_250_2e-16).abs() < 1e-30);
    }

    #[test]
    fn rotated_zeta_is_real() {
        for t in [0.5, 7.0, 14.0, 123.4, 5000.0] {
            let zeta = zeta_critical_line(t).unwrap();
            let rot = Complex64::from_polar(1.0, theta(t).unwrap()) * zeta;
            assert!(rot.im.abs() < 1e-10, "t = {t}: imaginary part {}", rot.im);
        }
    }

    #[test]
    fn known_values() {
        // Reference Z values from a 40-digit evaluation.
        for (t, want) in [
            (0.1, -1.433_807_867_750_898_7),
            (10.0, -1.549_194_546_181_022_4),
            (50.0, -0.340_735_005_955_024_98),
            (100.0, 2.692_697_056_664_463_5),
            (1000.0, 0.997_794_637_521_586_6),
            (5000.0, -0.804_257_236_352_939_8),
            (50_000.0, 2.970_043_337_302_32),
            (99_999.0, -0.630_892_220_062_311_9),
        ] {
            let got = zeta_oracle(t).unwrap();
            assert!((got - want).abs() < 1e-10, "Z({t}) = {got}, want {want}");
        }
    }

    #[test]
    fn rejects_outside_range() {
        assert!(zeta_oracle(0.05).is_err());
        assert!(zeta_oracle(2e5).is_err());
    }
}
