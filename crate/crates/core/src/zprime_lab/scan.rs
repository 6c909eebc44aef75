use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use std::str::FromStr;

use crate::error::{domain, Error, Result};
use crate::zeta::{z_precise, z_prime_precise, z_wavelength, EvaluatorConfig};

const BISECTION_WIDTH: f64 = 1e-9;
const DEDUPE: f64 = 1e-7;
const CERTIFY: f64 = 1e-6;
/// Wavelengths per scanning chunk.
const CHUNK_WAVELENGTHS: f64 = 64.0;

pub const ZERO_CSV_HEADER: &str = "ordinate,which,refinement_residual";

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Which {
    Z,
    Zprime,
}

impl Which {
    fn eval(self, t: f64, cfg: &EvaluatorConfig) -> Result<f64> {
        match self {
            Which::Z => z_precise(t, cfg),
            Which::Zprime => z_prime_precise(t, cfg),
        }
    }
}

impl FromStr for Which {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_lowercase().as_str() {
            "z" => Ok(Which::Z),
            "zprime" | "z'" | "dz" => Ok(Which::Zprime),
            other => Err(Error::Config(format!("unknown function {other:?}; expected Z or Zprime"))),
        }
    }
}

impl std::fmt::Display for Which {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Which::Z => "Z",
            Which::Zprime => "Zprime",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ZeroRecord {
    pub ordinate: f64,
    pub which: Which,
    /// `|f|` at the reported ordinate.
    pub refinement_residual: f64,
}

fn bisect(which: Which, mut a: f64, mut fa: f64, mut b: f64, cfg: &EvaluatorConfig) -> Result<f64> {
    while b - a > BISECTION_WIDTH {
        let m = 0.5 * (a + b);
        if m <= a || m >= b {
            break;
        }
        let fm = which.eval(m, cfg)?;
        if (fm < 0.0) == (fa < 0.0) {
            a = m;
            fa = fm;
        } else {
            b = m;
        }
    }
    Ok(0.5 * (a + b))
}

fn scan_chunk(which: Which, lo: f64, hi: f64, steps: u32, cfg: &EvaluatorConfig) -> Result<Vec<f64>> {
    let mut found = Vec::new();
    let mut x = lo;
    let mut fx = which.eval(x, cfg)?;
    while x < hi {
        let next = (x + z_wavelength(x) / steps as f64).min(hi);
        let fnext = which.eval(next, cfg)?;
        if (fx < 0.0) != (fnext < 0.0) {
            found.push(bisect(which, x, fx, next, cfg)?);
        }
        x = next;
        fx = fnext;
    }
    Ok(found)
}

/// Sign changes of `Z` or `Z'` in `[lo, hi]`, `10 <= lo < hi <= 1e6`.
///
/// Samples `step_per_wavelength` times per local wavelength in fixed chunks
/// that overlap by one wavelength, bisects each bracket to `1e-9`, merges
/// duplicates closer than `1e-7`, and keeps only ordinates `z` with
/// `f(z - 1e-6) f(z + 1e-6) < 0`.
pub fn scan_odd_zeros(
    which: Which,
    lo: f64,
    hi: f64,
    step_per_wavelength: u32,
    cfg: &EvaluatorConfig,
) -> Result<Vec<ZeroRecord>> {
    if !(lo >= 10.0) || !lo.is_finite() {
        return Err(domain("lo", lo, "lo >= 10"));
    }
    if !(hi > lo && hi <= 1e6) {
        return Err(domain("hi", hi, "lo < hi <= 1e6"));
    }
    if step_per_wavelength < 8 {
        return Err(domain("step_per_wavelength", step_per_wavelength as f64, "at least 8"));
    }
    let mut starts = vec![lo];
    while let Some(&s) = starts.last() {
        let next = s + CHUNK_WAVELENGTHS * z_wavelength(s);
        if next >= hi {
            break;
        }
        starts.push(next);
    }
    let chunks: Vec<Vec<f64>> = starts
        .par_iter()
        .enumerate()
        .map(|(i, &s)| {
            let end = starts.get(i + 1).map_or(hi, |&e| (e + z_wavelength(e)).min(hi));
            scan_chunk(which, s, end, step_per_wavelength, cfg)
        })
        .collect::<Result<_>>()?;
    let mut all: Vec<f64> = chunks.into_iter().flatten().collect();
    all.sort_by(f64::total_cmp);
    all.dedup_by(|b, a| (*b - *a).abs() < DEDUPE);
    let records: Vec<Option<ZeroRecord>> = all
        .par_iter()
        .map(|&z| {
            let left = which.eval(z - CERTIFY, cfg)?;
            let right = which.eval(z + CERTIFY, cfg)?;
            if left * right < 0.0 {
                Ok(Some(ZeroRecord {
                    ordinate: z,
                    which,
                    refinement_residual: which.eval(z, cfg)?.abs(),
                }))
            } else {
                Ok(None)
            }
        })
        .collect::<Result<_>>()?;
    Ok(records.into_iter().flatten().collect())
}
