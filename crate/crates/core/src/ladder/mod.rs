//! Jacob's ladder `phi_1` and its reverse iterations.
//!
//! `phi_1(T)` is the `y` with `F(y) = J(T)`, where
//! `F(y) = y ln y + (c - ln 2 pi) y + c_0` and `J` is the Hardy-Littlewood
//! integral. In asymptotic mode `J(y) = F(y) - (1 - c) y` up to `c_0`, which
//! makes `J(phi_1^{-1}(G)) - J(G) = (1 - c) G` an identity.

mod partition;
mod solver;

use serde::{Deserialize, Serialize};
use std::f64::consts::PI;

use crate::error::{domain, Error, Result};
use crate::quadrature::{j_asymptotic, IntegralResult, JMode, QuadratureSpec, ZSquaredPrimitive, EULER_GAMMA};
use crate::zeta::EvaluatorConfig;

pub use partition::{PartitionReport, PartitionRow};
pub use solver::solve_increasing;

const MIN_T: f64 = 100.0;
pub const MAX_ITERATES: usize = 20;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct LadderModel {
    pub euler_c: f64,
    pub c0_offset: f64,
    pub j_mode: JMode,
    pub solver_rel_tol: f64,
}

impl Default for LadderModel {
    fn default() -> Self {
        Self {
            euler_c: EULER_GAMMA,
            c0_offset: 0.0,
            j_mode: JMode::Asymptotic,
            solver_rel_tol: 1e-12,
        }
    }
}

impl LadderModel {
    pub fn with_mode(j_mode: JMode) -> Self {
        Self {
            j_mode,
            ..Self::default()
        }
    }

    pub fn validate(&self) -> Result<()> {
        if (self.euler_c - EULER_GAMMA).abs() > 1e-12 {
            return Err(Error::Config(format!("euler_c = {} is not Euler's constant", self.euler_c)));
        }
        if !(self.solver_rel_tol > 0.0) || !self.solver_rel_tol.is_finite() {
            return Err(Error::Config(format!("solver_rel_tol = {} must be positive", self.solver_rel_tol)));
        }
        if !self.c0_offset.is_finite() {
            return Err(Error::Config("c0_offset must be finite".into()));
        }
        Ok(())
    }

    /// `F(y) = y ln y + (c - ln 2 pi) y + c_0`.
    pub fn f(&self, y: f64) -> f64 {
        y * y.ln() + (self.euler_c - (2.0 * PI).ln()) * y + self.c0_offset
    }

    pub fn f_prime(&self, y: f64) -> f64 {
        y.ln() + 1.0 + self.euler_c - (2.0 * PI).ln()
    }

    fn one_minus_c(&self) -> f64 {
        1.0 - self.euler_c
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ReverseIterateChain {
    pub base_t: f64,
    /// `[T, T^1, ..., T^k]`
    pub iterates: Vec<f64>,
    pub k: usize,
}

enum JSource {
    Asymptotic,
    Quadrature(ZSquaredPrimitive),
}

/// A ladder model together with the `J` it is built on.
pub struct Ladder {
    model: LadderModel,
    source: JSource,
}

impl std::fmt::Debug for Ladder {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("Ladder").field("model", &self.model).finish()
    }
}

impl Ladder {
    /// Asymptotic-mode ladder; fails if `model.j_mode` asks for quadrature.
    pub fn asymptotic(model: LadderModel) -> Result<Self> {
        model.validate()?;
        if model.j_mode != JMode::Asymptotic {
            return Err(Error::Config("quadrature mode needs a tabulated J; use Ladder::new".into()));
        }
        Ok(Self {
            model,
            source: JSource::Asymptotic,
        })
    }

    /// In quadrature mode `J` is tabulated on `[1, t_max]`, `t_max <= 1e5`.
    pub fn new(model: LadderModel, cfg: &EvaluatorConfig, spec: &QuadratureSpec, t_max: f64) -> Result<Self> {
        model.validate()?;
        let source = match model.j_mode {
            JMode::Asymptotic => JSource::Asymptotic,
            JMode::Quadrature => JSource::Quadrature(ZSquaredPrimitive::new(t_max, cfg, spec)?),
        };
        Ok(Self { model, source })
    }

    /// A ladder whose table reaches past the `k`-th reverse iterate of `t`.
    pub fn for_chain(model: LadderModel, cfg: &EvaluatorConfig, spec: &QuadratureSpec, t: f64, k: usize) -> Result<Self> {
        let reach = t * (1.0 + 1.5 * (k + 1) as f64 * model.one_minus_c() / t.ln());
        Self::new(model, cfg, spec, reach.min(1e5))
    }

    pub fn model(&self) -> &LadderModel {
        &self.model
    }

    /// `J(t)` in the ladder's mode.
    pub fn j(&self, t: f64) -> Result<f64> {
        match &self.source {
            JSource::Asymptotic => Ok(j_asymptotic(t, self.model.euler_c)),
            JSource::Quadrature(p) => Ok(p.j(t)?.value),
        }
    }

    fn j_prime(&self, t: f64) -> Result<f64> {
        match &self.source {
            JSource::Asymptotic => Ok(t.ln() + 2.0 * self.model.euler_c - (2.0 * PI).ln()),
            JSource::Quadrature(p) => p.derivative(t),
        }
    }

    fn j_limit(&self) -> f64 {
        match &self.source {
            JSource::Asymptotic => f64::INFINITY,
            JSource::Quadrature(p) => p.t_max(),
        }
    }

    /// `int_a^b Z^2` in the ladder's mode.
    pub fn delta_j(&self, a: f64, b: f64) -> Result<f64> {
        Ok(self.segment_integral(a, b)?.value)
    }

    /// `int_a^b Z^2` with its error estimate; exact (zero error) in asymptotic mode.
    pub fn segment_integral(&self, a: f64, b: f64) -> Result<IntegralResult> {
        match &self.source {
            JSource::Asymptotic => Ok(IntegralResult {
                value: self.j(b)? - self.j(a)?,
                error_estimate: 0.0,
                evaluations: 0,
            }),
            JSource::Quadrature(p) => p.between(a, b),
        }
    }

    /// `phi_1(T)`, the `y` with `F(y) = J(T)`, for `T >= 100`.
    pub fn phi1(&self, t: f64) -> Result<f64> {
        if !(t >= MIN_T) || !t.is_finite() {
            return Err(domain("T", t, "T >= 100"));
        }
        if t > self.j_limit() {
            return Err(domain("T", t, "T within the tabulated J range"));
        }
        let target = self.j(t)?;
        let m = &self.model;
        let shift = m.one_minus_c() / t.ln();
        let mut lo = t * (1.0 - 3.0 * shift);
        let mut hi = t;
        for _ in 0..8 {
            if m.f(hi) >= target {
                break;
            }
            hi *= 1.0 + shift;
        }
        for _ in 0..8 {
            if m.f(lo) <= target || lo < 2.0 {
                break;
            }
            lo = (lo * (1.0 - shift)).max(2.0);
        }
        solve_increasing(
            |y| Ok(m.f(y)),
            |y| Ok(m.f_prime(y)),
            target,
            lo,
            hi,
            t * (1.0 - shift),
            m.solver_rel_tol,
        )
    }

    /// `[G]^1 = phi_1^{-1}(G)`, the `Y` with `J(Y) = F(G)`, for `G >= 100`.
    pub fn phi1_inverse(&self, g: f64) -> Result<f64> {
        if !(g >= MIN_T) || !g.is_finite() {
            return Err(domain("G", g, "G >= 100"));
        }
        let m = &self.model;
        let target = m.f(g);
        let shift = m.one_minus_c() / g.ln();
        let limit = self.j_limit();
        let lo = g.min(limit);
        let mut hi = (g * (1.0 + 3.0 * shift)).min(limit);
        for _ in 0..8 {
            if self.j(hi)? >= target || hi >= limit {
                break;
            }
            hi = (hi * (1.0 + shift)).min(limit);
        }
        solve_increasing(
            |y| self.j(y),
            |y| self.j_prime(y),
            target,
            lo,
            hi,
            g * (1.0 + shift),
            m.solver_rel_tol,
        )
    }

    /// `T, [T]^1, [[T]^1]^1, ...` up to the `k`-th reverse iterate, `1 <= k <= 20`.
    pub fn reverse_iterates(&self, t: f64, k: usize) -> Result<ReverseIterateChain> {
        if !(1..=MAX_ITERATES).contains(&k) {
            return Err(Error::Precondition(format!("need 1 <= k <= {MAX_ITERATES}, got {k}")));
        }
        let mut iterates = Vec::with_capacity(k + 1);
        iterates.push(t);
        for r in 0..k {
            let next = self.phi1_inverse(iterates[r])?;
            if !(next > iterates[r]) {
                return Err(Error::NoConvergence {
                    what: "reverse iteration ordering",
                    iterations: r + 1,
                });
            }
            iterates.push(next);
        }
        Ok(ReverseIterateChain { base_t: t, iterates, k })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ladder() -> Ladder {
        Ladder::asymptotic(LadderModel::default()).unwrap()
    }

    #[test]
    fn phi1_lags_behind() {
        let l = ladder();
        for t in [1e2, 1e4, 1e6, 1e9] {
            assert!(l.phi1(t).unwrap() < t);
        }
        let t = 1e6;
        let lag = (t - l.phi1(t).unwrap()) * t.ln() / ((1.0 - EULER_GAMMA) * t);
        assert!((0.8..=1.2).contains(&lag), "{lag}");
    }

    #[test]
    fn inverse_round_trip() {
        let l = ladder();
        for g in [1e2, 1e4, 3.3e5, 1e8] {
            let y = l.phi1_inverse(g).unwrap();
            assert!(y > g);
            assert!((l.phi1(y).unwrap() - g).abs() / g < 1e-10);
        }
    }

    #[test]
    fn chain_is_ordered_and_k1_is_inverse() {
        let l = ladder();
        let c = l.reverse_iterates(1e6, 5).unwrap();
        assert_eq!(c.iterates.len(), 6);
        assert!(c.iterates.windows(2).all(|w| w[0] < w[1]));
        let one = l.reverse_iterates(1e4, 1).unwrap();
        assert_eq!(one.iterates[1], l.phi1_inverse(1e4).unwrap());
        assert!(l.reverse_iterates(1e4, 0).is_err());
        assert!(l.reverse_iterates(1e4, 21).is_err());
    }

    #[test]
    fn rejects_small_arguments_and_bad_models() {
        let l = ladder();
        assert!(l.phi1(50.0).is_err());
        assert!(l.phi1_inverse(99.0).is_err());
        let bad = LadderModel {
            solver_rel_tol: 0.0,
            ..LadderModel::default()
        };
        assert!(Ladder::asymptotic(bad).is_err());
        assert!(Ladder::asymptotic(LadderModel::with_mode(JMode::Quadrature)).is_err());
    }
}
