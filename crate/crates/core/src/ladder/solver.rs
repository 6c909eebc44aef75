use crate::error::{Error, Result};

const MAX_ITERATIONS: usize = 200;

/// Solve `g(x) = target` for increasing `g` on `[lo, hi]`.
///
/// Newton steps from `guess` using `dg`, falling back to bisection whenever
/// a step leaves the current bracket or the slope is not positive. Stops
/// once a step or the bracket is below `rel_tol` relative to `x`.
pub fn solve_increasing<G, D>(
    mut g: G,
    mut dg: D,
    target: f64,
    mut lo: f64,
    mut hi: f64,
    guess: f64,
    rel_tol: f64,
) -> Result<f64>
where
    G: FnMut(f64) -> Result<f64>,
    D: FnMut(f64) -> Result<f64>,
{
    let g_lo = g(lo)? - target;
    let g_hi = g(hi)? - target;
    if g_lo > 0.0 || g_hi < 0.0 {
        return Err(Error::NoBracket { target, lo, hi });
    }
    if g_lo == 0.0 {
        return Ok(lo);
    }
    if g_hi == 0.0 {
        return Ok(hi);
    }
    let mut x = if guess > lo && guess < hi { guess } else { 0.5 * (lo + hi) };
    for _ in 0..MAX_ITERATIONS {
        let r = g(x)? - target;
        if r == 0.0 {
            return Ok(x);
        }
        if r < 0.0 {
            lo = x;
        } else {
            hi = x;
        }
        let slope = dg(x)?;
        let newton = x - r / slope;
        let next = if slope > 0.0 && newton > lo && newton < hi {
            newton
        } else {
            0.5 * (lo + hi)
        };
        if (next - x).abs() <= rel_tol * next.abs() || hi - lo <= rel_tol * hi.abs() {
            return Ok(next);
        }
        x = next;
    }
    Err(Error::NoConvergence {
        what: "monotone solver",
        iterations: MAX_ITERATIONS,
    })
}
