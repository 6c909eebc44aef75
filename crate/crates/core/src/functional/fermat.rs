use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use super::{functional_phi, FunctionalParams};
use crate::error::{Error, Result};
use crate::ladder::Ladder;
use crate::quadrature::QuadratureSpec;
use crate::zeta::EvaluatorConfig;

/// `(x^n + y^n) / z^n` held exactly.
#[derive(Debug, Clone, PartialEq)]
pub struct FermatRational {
    pub x_nat: BigUint,
    pub y_nat: BigUint,
    pub z_nat: BigUint,
    pub n: u32,
    pub value: BigRational,
    /// `x^n + y^n == z^n`, decided on integers.
    pub equals_one: bool,
}

impl FermatRational {
    pub fn to_f64(&self) -> f64 {
        self.value.to_f64().unwrap_or(f64::NAN)
    }
}

pub fn fermat_rational(x: &BigUint, y: &BigUint, z: &BigUint, n: u32) -> Result<FermatRational> {
    if n < 3 {
        return Err(Error::Precondition(format!("need n >= 3, got {n}")));
    }
    if x.is_zero() || y.is_zero() || z.is_zero() {
        return Err(Error::Precondition("x, y and z must be positive".into()));
    }
    let lhs = x.pow(n) + y.pow(n);
    let rhs = z.pow(n);
    let equals_one = lhs == rhs;
    Ok(FermatRational {
        x_nat: x.clone(),
        y_nat: y.clone(),
        z_nat: z.clone(),
        n,
        value: BigRational::new(BigInt::from(lhs), BigInt::from(rhs)),
        equals_one,
    })
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TrajectoryPoint {
    pub rho: f64,
    pub phi: f64,
    pub error_estimate: f64,
    pub target: f64,
    pub abs_deviation: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct FermatProbeReport {
    pub x_nat: String,
    pub y_nat: String,
    pub z_nat: String,
    pub n: u32,
    pub numerator: String,
    pub denominator: String,
    pub exact_equal_one: bool,
    pub rational_float: f64,
    pub a: f64,
    pub alpha: f64,
    pub trajectory: Vec<TrajectoryPoint>,
    pub verdict_text: String,
}

impl FermatProbeReport {
    pub const CSV_HEADER: &'static str = "rho,phi_value,error_estimate,target,abs_deviation";
}

/// Exact verdict on `x^n + y^n = z^n` plus `Phi((x^n + y^n)/z^n, a, alpha, rho)`
/// for each `rho` in `rho_list` (strictly ascending).
#[allow(clippy::too_many_arguments)]
pub fn fermat_probe(
    x: &BigUint,
    y: &BigUint,
    z: &BigUint,
    n: u32,
    a: f64,
    alpha: f64,
    rho_list: &[f64],
    ladder: &Ladder,
    cfg: &EvaluatorConfig,
    spec: &QuadratureSpec,
) -> Result<FermatProbeReport> {
    let fr = fermat_rational(x, y, z, n)?;
    if rho_list.is_empty() || !rho_list.windows(2).all(|w| w[0] < w[1]) {
        return Err(Error::Precondition("rho list must be nonempty and strictly ascending".into()));
    }
    let target = fr.to_f64();
    let mut trajectory = Vec::with_capacity(rho_list.len());
    for &rho in rho_list {
        let p = FunctionalParams::new(target, a, alpha, rho)?;
        let phi = functional_phi(&p, ladder, cfg, spec)?;
        trajectory.push(TrajectoryPoint {
            rho,
            phi: phi.value,
            error_estimate: phi.uncertainty,
            target,
            abs_deviation: (phi.value - target).abs(),
        });
    }
    let verdict_text = if fr.equals_one {
        format!("{x}^{n} + {y}^{n} = {z}^{n} exactly; the rational equals 1")
    } else {
        format!(
            "{x}^{n} + {y}^{n} != {z}^{n} (exact integer comparison); the rational is {} = {target:.6}. \
             The functional tends to the rational, so by the Fermat-Wiles theorem its limit is never 1. \
             Finite-rho values only illustrate this; they decide nothing.",
            fr.value
        )
    };
    Ok(FermatProbeReport {
        x_nat: x.to_string(),
        y_nat: y.to_string(),
        z_nat: z.to_string(),
        n,
        numerator: fr.value.numer().to_string(),
        denominator: fr.value.denom().to_string(),
        exact_equal_one: fr.equals_one,
        rational_float: target,
        a,
        alpha,
        trajectory,
        verdict_text,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn b(v: u64) -> BigUint {
        BigUint::from(v)
    }

    #[test]
    fn small_rationals() {
        let r = fermat_rational(&b(3), &b(4), &b(5), 3).unwrap();
        assert!(!r.equals_one);
        assert_eq!(r.value, BigRational::new(91.into(), 125.into()));
        assert_eq!(r.to_f64(), 0.728);
        let r = fermat_rational(&b(1), &b(1), &b(1), 3).unwrap();
        assert_eq!(r.to_f64(), 2.0);
        assert!(fermat_rational(&b(3), &b(4), &b(5), 2).is_err());
        assert!(fermat_rational(&b(0), &b(4), &b(5), 3).is_err());
    }

    #[test]
    fn near_miss_is_decided_exactly() {
        // 6^3 + 8^3 = 9^3 - 1
        let r = fermat_rational(&b(6), &b(8), &b(9), 3).unwrap();
        assert!(!r.equals_one);
        assert_eq!(r.value, BigRational::new(728.into(), 729.into()));
        let big = BigUint::from(10u32).pow(40);
        let r = fermat_rational(&big, &big, &(&big + 1u32), 7).unwrap();
        assert!(!r.equals_one);
    }

    #[test]
    fn probe_rejects_unsorted_rho() {
        let l = Ladder::asymptotic(Default::default()).unwrap();
        let e = fermat_probe(&b(3), &b(4), &b(5), 3, 0.9, 1.0, &[1e4, 1e3], &l, &Default::default(), &Default::default());
        assert!(e.is_err());
    }
}
