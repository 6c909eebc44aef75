//! Panel-wise Gauss-Kronrod integration sized to the local oscillation of
//! the integrand.
//!
//! The interval is cut into panels before any evaluation, each panel is
//! integrated (and bisected if needed) independently, and the panel sums are
//! combined by pairwise summation in index order. The result is therefore
//! bit-identical for any size of the worker pool.

mod critical;
mod cumulative;
mod gauss_kronrod;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use gauss_kronrod::{gk15, NODES};

pub use critical::{
    hardy_littlewood_j, inner_j, j_asymptotic, lemma18_lhs, squared_window_integral,
    z_squared, JMode, ZSquaredPrimitive,
    EULER_GAMMA,
};
pub use cumulative::CumulativeIntegral;

const MAX_DEPTH: u32 = 40;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct QuadratureSpec {
    /// Per-panel tolerance, relative to the panel's integral of `|f|`.
    pub rel_tol: f64,
    /// Gauss nodes per local wavelength; a panel spans `7 / points_per_wavelength` wavelengths.
    pub points_per_wavelength: f64,
    pub max_panels: usize,
}

impl QuadratureSpec {
    pub const DEFAULT_MAX_PANELS: usize = 1 << 22;

    pub fn smooth() -> Self {
        Self {
            rel_tol: 1e-6,
            points_per_wavelength: 8.0,
            max_panels: Self::DEFAULT_MAX_PANELS,
        }
    }

    pub fn oscillatory() -> Self {
        Self {
            rel_tol: 1e-4,
            ..Self::smooth()
        }
    }

    pub fn validate(&self) -> Result<()> {
        if !(self.rel_tol > 0.0) || !self.rel_tol.is_finite() {
            return Err(Error::Config(format!("rel_tol = {} must be positive", self.rel_tol)));
        }
        if !(self.points_per_wavelength >= 4.0) || !self.points_per_wavelength.is_finite() {
            return Err(Error::Config(format!(
                "points_per_wavelength = {} must be at least 4",
                self.points_per_wavelength
            )));
        }
        if self.max_panels == 0 {
            return Err(Error::Config("max_panels must be positive".into()));
        }
        Ok(())
    }

    /// Panel width where the local wavelength is `wavelength`.
    pub(crate) fn panel_width(&self, wavelength: f64) -> f64 {
        7.0 * wavelength / self.points_per_wavelength
    }
}

impl Default for QuadratureSpec {
    fn default() -> Self {
        Self::oscillatory()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct IntegralResult {
    pub value: f64,
    pub error_estimate: f64,
    pub evaluations: u64,
}

impl IntegralResult {
    pub fn zero() -> Self {
        Self {
            value: 0.0,
            error_estimate: 0.0,
            evaluations: 0,
        }
    }
}

/// Sum in a fixed binary tree over the slice order.
pub fn pairwise_sum(xs: &[f64]) -> f64 {
    if xs.len() <= 8 {
        return xs.iter().sum();
    }
    let mid = xs.len() / 2;
    pairwise_sum(&xs[..mid]) + pairwise_sum(&xs[mid..])
}

/// Panel boundaries `lo = x_0 < x_1 < ... < x_n = hi`, each panel at most
/// `7 wavelength(x_i) / points_per_wavelength` wide.
pub(crate) fn panel_edges<W>(lo: f64, hi: f64, wavelength: &W, spec: &QuadratureSpec) -> Result<Vec<f64>>
where
    W: Fn(f64) -> f64,
{
    let mut edges = vec![lo];
    let mut x = lo;
    while x < hi {
        let lambda = wavelength(x);
        if !(lambda > 0.0) || !lambda.is_finite() {
            return Err(Error::Precondition(format!("local wavelength {lambda} at {x} is not positive")));
        }
        let next = x + spec.panel_width(lambda);
        x = if next >= hi || hi - next < 1e-9 * spec.panel_width(lambda) { hi } else { next };
        edges.push(x);
        if edges.len() > spec.max_panels + 1 {
            return Err(Error::Budget {
                max_panels: spec.max_panels,
                lo,
                hi,
            });
        }
    }
    Ok(edges)
}

#[derive(Debug, Clone, Copy, Default)]
pub(crate) struct PanelSum {
    pub value: f64,
    pub error: f64,
    pub evaluations: u64,
    pub panels: usize,
}

/// Integrate one panel, bisecting until the Gauss-Kronrod difference is
/// within `rel_tol` of the subpanel's integral of `|f|`, or of its share of
/// the whole panel's, whichever is larger. The second form lets bisection
/// terminate around isolated singularities.
pub(crate) fn refine_panel<F>(f: &F, a: f64, b: f64, rel_tol: f64, max_panels: usize) -> Result<PanelSum>
where
    F: Fn(f64) -> Result<f64>,
{
    struct Ctx<'a, F> {
        f: &'a F,
        rel_tol: f64,
        density: f64,
        budget: usize,
    }

    fn go<F: Fn(f64) -> Result<f64>>(ctx: &mut Ctx<'_, F>, a: f64, b: f64, depth: u32) -> Result<PanelSum> {
        let rule = gk15(ctx.f, a, b)?;
        if depth == 0 {
            ctx.density = rule.abs / (b - a).abs();
        }
        let err = rule.error();
        let tol = ctx.rel_tol * rule.abs.max(ctx.density * (b - a).abs());
        if err <= tol {
            return Ok(PanelSum {
                value: rule.kronrod,
                error: err,
                evaluations: NODES as u64,
                panels: 1,
            });
        }
        if depth >= MAX_DEPTH || ctx.budget < 2 {
            return Err(Error::NoConvergence {
                what: "panel bisection",
                iterations: depth as usize,
            });
        }
        ctx.budget -= 1;
        let mid = 0.5 * (a + b);
        let left = go(ctx, a, mid, depth + 1)?;
        let right = go(ctx, mid, b, depth + 1)?;
        Ok(PanelSum {
            value: left.value + right.value,
            error: left.error + right.error,
            evaluations: left.evaluations + right.evaluations + NODES as u64,
            panels: left.panels + right.panels,
        })
    }

    let mut ctx = Ctx {
        f,
        rel_tol,
        density: 0.0,
        budget: max_panels,
    };
    go(&mut ctx, a, b, 0)
}

/// Integrate every panel between consecutive `edges`, in parallel.
pub(crate) fn integrate_panels<F>(f: &F, edges: &[f64], spec: &QuadratureSpec) -> Result<Vec<PanelSum>>
where
    F: Fn(f64) -> Result<f64> + Sync,
{
    let sums: Vec<PanelSum> = edges
        .par_windows(2)
        .map(|w| refine_panel(f, w[0], w[1], spec.rel_tol, spec.max_panels))
        .collect::<Result<_>>()
        .map_err(|e| budget_context(e, edges, spec))?;
    let panels: usize = sums.iter().map(|s| s.panels).sum();
    if panels > spec.max_panels {
        return Err(Error::Budget {
            max_panels: spec.max_panels,
            lo: edges[0],
            hi: edges[edges.len() - 1],
        });
    }
    Ok(sums)
}

fn budget_context(e: Error, edges: &[f64], spec: &QuadratureSpec) -> Error {
    match e {
        Error::NoConvergence { .. } => Error::Budget {
            max_panels: spec.max_panels,
            lo: edges[0],
            hi: edges[edges.len() - 1],
        },
        other => other,
    }
}

/// `int_lo^hi f`, with panels sized by `wavelength`.
pub fn integrate<F, W>(f: F, lo: f64, hi: f64, wavelength: W, spec: &QuadratureSpec) -> Result<IntegralResult>
where
    F: Fn(f64) -> Result<f64> + Sync,
    W: Fn(f64) -> f64,
{
    spec.validate()?;
    if !(lo <= hi) || !lo.is_finite() || !hi.is_finite() {
        return Err(Error::Precondition(format!("need finite lo <= hi, got [{lo}, {hi}]")));
    }
    if lo == hi {
        return Ok(IntegralResult::zero());
    }
    let edges = panel_edges(lo, hi, &wavelength, spec)?;
    let sums = integrate_panels(&f, &edges, spec)?;
    let values: Vec<f64> = sums.iter().map(|s| s.value).collect();
    let errors: Vec<f64> = sums.iter().map(|s| s.error).collect();
    Ok(IntegralResult {
        value: pairwise_sum(&values),
        error_estimate: pairwise_sum(&errors),
        evaluations: sums.iter().map(|s| s.evaluations).sum(),
    })
}
