use serde::{Deserialize, Serialize};

use super::{Ladder, ReverseIterateChain};
use crate::error::Result;
use crate::quadrature::JMode;

/// One segment `[T^{r-1}, T^r]` of the partition generated by a chain.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PartitionRow {
    pub r: usize,
    pub t_prev: f64,
    pub t_r: f64,
    pub spacing: f64,
    /// `int_{T^{r-1}}^{T^r} Z^2`
    pub delta_j: f64,
    /// `(1 - c) T^{r-1}`
    pub target: f64,
    /// `delta_j / target`
    pub ratio: f64,
    /// `spacing / ((1 - c) pi(T^r))` with `pi(x) = x / ln x`
    pub spacing_over_pi: f64,
    /// `spacing_r / spacing_{r-1}`, from `r = 2`
    pub spacing_ratio: Option<f64>,
    /// `delta_j_r / delta_j_{r-1}`, from `r = 2`
    pub segment_ratio: Option<f64>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PartitionReport {
    pub mode: JMode,
    pub chain: ReverseIterateChain,
    pub rows: Vec<PartitionRow>,
    /// `sum_r spacing_r - (T^k - T)`
    pub telescoping_gap: f64,
    /// `T^k / T`
    pub span_ratio: f64,
}

impl PartitionReport {
    pub const CSV_HEADER: &'static str =
        "r,t_r,spacing,delta_j,target,ratio,spacing_over_pi,spacing_ratio,segment_ratio";
}

impl Ladder {
    /// Reverse iterates of `t` with the per-segment integrals of `Z^2` and the
    /// ratios against their asymptotic targets.
    pub fn partition_report(&self, t: f64, k: usize) -> Result<PartitionReport> {
        let chain = self.reverse_iterates(t, k)?;
        let omc = 1.0 - self.model.euler_c;
        let mut rows: Vec<PartitionRow> = Vec::with_capacity(k);
        for r in 1..=k {
            let (a, b) = (chain.iterates[r - 1], chain.iterates[r]);
            let spacing = b - a;
            let delta_j = self.delta_j(a, b)?;
            let target = omc * a;
            let prev = rows.last();
            rows.push(PartitionRow {
                r,
                t_prev: a,
                t_r: b,
                spacing,
                delta_j,
                target,
                ratio: delta_j / target,
                spacing_over_pi: spacing / (omc * b / b.ln()),
                spacing_ratio: prev.map(|p| spacing / p.spacing),
                segment_ratio: prev.map(|p| delta_j / p.delta_j),
            });
        }
        let total: f64 = rows.iter().map(|row| row.spacing).sum();
        Ok(PartitionReport {
            mode: self.model.j_mode,
            telescoping_gap: total - (chain.iterates[k] - t),
            span_ratio: chain.iterates[k] / t,
            chain,
            rows,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::super::LadderModel;
    use super::*;

    #[test]
    fn asymptotic_increments_are_exact() {
        let l = Ladder::asymptotic(LadderModel::default()).unwrap();
        let rep = l.partition_report(1e6, 5).unwrap();
        for row in &rep.rows {
            assert!((row.delta_j - row.target).abs() / row.t_prev < 1e-8);
        }
        for row in &rep.rows[1..] {
            assert!((row.spacing_ratio.unwrap() - 1.0).abs() < 0.05);
            assert!((row.segment_ratio.unwrap() - 1.0).abs() < 0.05);
        }
        assert!(rep.telescoping_gap.abs() <= 1e-9 * rep.chain.iterates[5]);
        let omc = 1.0 - l.model().euler_c;
        assert!(rep.span_ratio < 1.0 + 1.5 * 5.0 * omc / 1e6f64.ln());
    }
}
