use rayon::prelude::*;

use super::{integrate_panels, panel_edges, refine_panel, IntegralResult, PanelSum, QuadratureSpec};
use crate::error::{Error, Result};

type Integrand = Box<dyn Fn(f64) -> Result<f64> + Send + Sync>;

/// Degree of the per-panel Chebyshev interpolant.
const DEGREE: usize = 19;
/// Largest trailing coefficients accepted, relative to the largest one.
const TAIL_TOL: f64 = 1e-9;

/// Chebyshev coefficients of `s -> int_{-1}^s f(a + (s + 1)(b - a)/2) ds` on one panel.
type PanelPrimitive = [f64; DEGREE + 2];

/// Interpolate `f` at the Chebyshev-Lobatto points of `[a, b]` and integrate
/// the interpolant. Kept only if its panel integral agrees with the
/// Gauss-Kronrod sum and its last coefficients have decayed.
fn chebyshev_primitive<F>(f: &F, a: f64, b: f64, panel: &PanelSum) -> Result<Option<PanelPrimitive>>
where
    F: Fn(f64) -> Result<f64>,
{
    if panel.panels != 1 {
        return Ok(None);
    }
    let n = DEGREE;
    let (mid, half) = (0.5 * (a + b), 0.5 * (b - a));
    let mut vals = [0.0; DEGREE + 1];
    for (j, v) in vals.iter_mut().enumerate() {
        *v = f(mid + half * (std::f64::consts::PI * j as f64 / n as f64).cos())?;
    }
    // f = sum_k c_k T_k on [-1, 1]
    let mut c = [0.0; DEGREE + 2];
    for (k, ck) in c.iter_mut().take(n + 1).enumerate() {
        let mut acc = 0.0;
        for (j, v) in vals.iter().enumerate() {
            let w = if j == 0 || j == n { 0.5 } else { 1.0 };
            acc += w * v * (std::f64::consts::PI * (j * k) as f64 / n as f64).cos();
        }
        *ck = acc * 2.0 / n as f64;
    }
    c[0] *= 0.5;
    c[n] *= 0.5;
    let scale = c.iter().fold(0.0f64, |m, x| m.max(x.abs()));
    if c[n - 1].abs() + c[n].abs() > TAIL_TOL * scale {
        return Ok(None);
    }
    // int T_0 = T_1, int T_1 = T_2 / 4, int T_k = T_{k+1} / 2(k+1) - T_{k-1} / 2(k-1)
    let mut p = [0.0; DEGREE + 2];
    p[1] += c[0];
    p[2] += 0.25 * c[1];
    for k in 2..=n {
        p[k + 1] += c[k] / (2.0 * (k + 1) as f64);
        p[k - 1] -= c[k] / (2.0 * (k - 1) as f64);
    }
    // vanish at s = -1
    p[0] = -p.iter().enumerate().skip(1).map(|(k, x)| if k % 2 == 0 { *x } else { -x }).sum::<f64>();
    for x in p.iter_mut() {
        *x *= half;
    }
    let total = clenshaw(&p, 1.0);
    let abs = panel.value.abs().max(f64::MIN_POSITIVE);
    if (total - panel.value).abs() > panel.error.max(64.0 * f64::EPSILON * abs) {
        return Ok(None);
    }
    Ok(Some(p))
}

fn clenshaw(c: &[f64], s: f64) -> f64 {
    let (mut b1, mut b2) = (0.0, 0.0);
    for &ck in c.iter().skip(1).rev() {
        let b0 = 2.0 * s * b1 - b2 + ck;
        b2 = b1;
        b1 = b0;
    }
    s * b1 - b2 + c[0]
}

/// A primitive `x -> int_lo^x f` on `[lo, hi]`.
///
/// Panel sums are computed once; a query adds the prefix up to the panel
/// holding `x` and the integral over the partial panel. That partial
/// integral comes from a stored Chebyshev primitive where one passed its
/// checks at build time, otherwise from fresh quadrature. Either way the
/// result is continuous in `x` up to the panel tolerance.
pub struct CumulativeIntegral {
    f: Integrand,
    edges: Vec<f64>,
    prefix: Vec<f64>,
    prefix_err: Vec<f64>,
    panel_err: Vec<f64>,
    primitives: Vec<Option<PanelPrimitive>>,
    spec: QuadratureSpec,
    evaluations: u64,
}

impl CumulativeIntegral {
    pub fn new<F, W>(f: F, lo: f64, hi: f64, wavelength: W, spec: &QuadratureSpec) -> Result<Self>
    where
        F: Fn(f64) -> Result<f64> + Send + Sync + 'static,
        W: Fn(f64) -> f64,
    {
        spec.validate()?;
        if !(lo < hi) || !lo.is_finite() || !hi.is_finite() {
            return Err(Error::Precondition(format!("need finite lo < hi, got [{lo}, {hi}]")));
        }
        let edges = panel_edges(lo, hi, &wavelength, spec)?;
        let sums = integrate_panels(&f, &edges, spec)?;
        let mut prefix = Vec::with_capacity(edges.len());
        let mut prefix_err = Vec::with_capacity(edges.len());
        let (mut acc, mut acc_err) = (0.0, 0.0);
        prefix.push(0.0);
        prefix_err.push(0.0);
        for s in &sums {
            acc += s.value;
            acc_err += s.error;
            prefix.push(acc);
            prefix_err.push(acc_err);
        }
        let primitives: Vec<Option<PanelPrimitive>> = edges
            .par_windows(2)
            .zip(sums.par_iter())
            .map(|(w, s)| chebyshev_primitive(&f, w[0], w[1], s))
            .collect::<Result<_>>()?;
        let evaluations = sums.iter().map(|s| s.evaluations).sum::<u64>() + (sums.len() * (DEGREE + 1)) as u64;
        Ok(Self {
            f: Box::new(f),
            edges,
            prefix,
            prefix_err,
            panel_err: sums.iter().map(|s| s.error).collect(),
            primitives,
            spec: *spec,
            evaluations,
        })
    }

    pub fn lo(&self) -> f64 {
        self.edges[0]
    }

    pub fn hi(&self) -> f64 {
        self.edges[self.edges.len() - 1]
    }

    pub fn panels(&self) -> usize {
        self.edges.len() - 1
    }

    /// Integrand evaluations spent building the table.
    pub fn evaluations(&self) -> u64 {
        self.evaluations
    }

    /// The integrand itself.
    pub fn integrand(&self, x: f64) -> Result<f64> {
        (self.f)(x)
    }

    /// `int_lo^x f`.
    pub fn at(&self, x: f64) -> Result<IntegralResult> {
        if !(x >= self.lo() && x <= self.hi()) {
            return Err(Error::Precondition(format!(
                "{x} lies outside the tabulated range [{}, {}]",
                self.lo(),
                self.hi()
            )));
        }
        let k = self.edges.partition_point(|&e| e <= x) - 1;
        let (base, base_err) = (self.prefix[k], self.prefix_err[k]);
        if x == self.edges[k] {
            return Ok(IntegralResult {
                value: base,
                error_estimate: base_err,
                evaluations: 0,
            });
        }
        if let Some(p) = &self.primitives[k] {
            let (a, b) = (self.edges[k], self.edges[k + 1]);
            let s = (2.0 * x - a - b) / (b - a);
            return Ok(IntegralResult {
                value: base + clenshaw(p, s),
                error_estimate: base_err + self.panel_err[k],
                evaluations: 0,
            });
        }
        let part = refine_panel(&self.f, self.edges[k], x, self.spec.rel_tol, self.spec.max_panels)?;
        Ok(IntegralResult {
            value: base + part.value,
            error_estimate: base_err + part.error,
            evaluations: part.evaluations,
        })
    }

    /// `int_a^b f` for `lo <= a <= b <= hi`.
    pub fn between(&self, a: f64, b: f64) -> Result<IntegralResult> {
        let lower = self.at(a)?;
        let upper = self.at(b)?;
        Ok(IntegralResult {
            value: upper.value - lower.value,
            error_estimate: upper.error_estimate + lower.error_estimate,
            evaluations: upper.evaluations + lower.evaluations,
        })
    }
}

impl std::fmt::Debug for CumulativeIntegral {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("CumulativeIntegral")
            .field("lo", &self.lo())
            .field("hi", &self.hi())
            .field("panels", &self.panels())
            .finish()
    }
}
