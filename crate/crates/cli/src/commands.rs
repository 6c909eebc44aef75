//! Subcommand bodies. Each returns its artifact as text so that runs can be
//! compared byte for byte.

use std::f64::consts::PI;
use std::path::PathBuf;

use zll_core::functional::{fermat_probe, functional_phi, window_halfwidth, FermatProbeReport, FunctionalParams};
use zll_core::ladder::{Ladder, LadderModel, PartitionReport};
use zll_core::quadrature::{hardy_littlewood_j, j_asymptotic, lemma18_lhs, JMode, QuadratureSpec, EULER_GAMMA};
use zll_core::zeta::{theta, theta_prime, x_over_z, z_precise, EvaluatorConfig};
use zll_core::zprime_lab::{scan_odd_zeros, zprime_sums, ZERO_CSV_HEADER};

use crate::args::Command;
use crate::error::CliError;
use crate::numbers::FermatInput;
use crate::output::{csv, num, opt};

#[derive(Debug, Clone, PartialEq)]
pub struct Artifact {
    /// CSV, or JSON for the report commands.
    pub body: String,
    pub series: Vec<(f64, f64)>,
    pub side_csv: Option<(PathBuf, String)>,
}

impl Artifact {
    fn new(body: String, series: Vec<(f64, f64)>) -> Self {
        Self {
            body,
            series,
            side_csv: None,
        }
    }
}

fn json<T: serde::Serialize>(v: &T) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("plain data serializes");
    s.push('\n');
    s
}

/// A ladder whose `J` reaches past `[g]^1` for every `g <= g_max`.
fn ladder_for(mode: JMode, g_max: f64, cfg: &EvaluatorConfig, spec: &QuadratureSpec) -> Result<Ladder, CliError> {
    Ok(Ladder::for_chain(LadderModel::with_mode(mode), cfg, spec, g_max, 1)?)
}

pub fn execute(cmd: &Command, cfg: &EvaluatorConfig, spec: &QuadratureSpec) -> Result<Artifact, CliError> {
    match cmd {
        Command::ZEval { t } => {
            let mut rows = Vec::new();
            let mut series = Vec::new();
            for &t in t.iter() {
                let z = z_precise(t, cfg)?;
                let x = x_over_z(t, cfg)? * z;
                rows.push(vec![num(t), num(z), num(theta(t)?), num(x)]);
                series.push((t, z));
            }
            Ok(Artifact::new(csv("t,z,theta,x", rows), series))
        }
        Command::Theta { t } => {
            let mut rows = Vec::new();
            let mut series = Vec::new();
            for &t in t.iter() {
                let th = theta(t)?;
                rows.push(vec![num(t), num(th), num(theta_prime(t)?)]);
                series.push((t, th));
            }
            Ok(Artifact::new(csv("t,theta,theta_prime", rows), series))
        }
        Command::XFn { t } => {
            let limit = (0.5 * PI).powf(0.25);
            let mut rows = Vec::new();
            let mut series = Vec::new();
            for &t in t.iter() {
                let z = z_precise(t, cfg)?;
                let ratio = x_over_z(t, cfg)?;
                rows.push(vec![num(t), num(ratio * z), num(z), num(ratio), num(ratio - limit)]);
                series.push((t, ratio - limit));
            }
            Ok(Artifact::new(csv("t,x,z,x_over_z,limit_gap", rows), series))
        }
        Command::Lemma18 { big_t, a, alpha } => {
            let u = big_t.powf(*a);
            let h = big_t.ln().powf(*alpha);
            let r = lemma18_lhs(*big_t, u, h, cfg, spec)?;
            let prediction = PI * (2.0 * PI).sqrt() * h * u;
            let row = vec![
                num(*big_t),
                num(u),
                num(h),
                num(r.value),
                num(r.error_estimate),
                num(prediction),
                num(r.value / prediction),
                r.evaluations.to_string(),
            ];
            Ok(Artifact::new(
                csv("T,U,H,lhs,error_estimate,prediction,ratio,evaluations", [row]),
                vec![(*big_t, r.value / prediction)],
            ))
        }
        Command::HlIntegral { big_t, mode } => {
            let mut rows = Vec::new();
            let mut series = Vec::new();
            for &t in big_t.iter() {
                let r = hardy_littlewood_j(t, *mode, cfg, spec)?;
                let asym = j_asymptotic(t, EULER_GAMMA);
                rows.push(vec![
                    num(t),
                    mode.to_string(),
                    num(r.value),
                    num(r.error_estimate),
                    r.evaluations.to_string(),
                    num(asym),
                    num(r.value / asym - 1.0),
                ]);
                series.push((t, r.value));
            }
            Ok(Artifact::new(
                csv("T,mode,j,error_estimate,evaluations,asymptotic,relative_gap", rows),
                series,
            ))
        }
        Command::Ladder { big_t, k, mode } => {
            let model = LadderModel::with_mode(*mode);
            let ladder = Ladder::for_chain(model, cfg, spec, *big_t, *k)?;
            let rep = ladder.partition_report(*big_t, *k)?;
            Ok(Artifact::new(partition_csv(&rep), rep.rows.iter().map(|r| (r.r as f64, r.t_r)).collect()))
        }
        Command::Functional { x, a, alpha, rho, mode } => {
            let params: Vec<FunctionalParams> = rho
                .iter()
                .map(|&r| FunctionalParams::new(*x, *a, *alpha, r))
                .collect::<zll_core::Result<_>>()?;
            let g_max = params.iter().map(|p| p.tau()).fold(0.0, f64::max) + window_halfwidth(*a, *alpha)?;
            let ladder = ladder_for(*mode, g_max, cfg, spec)?;
            let mut rows = Vec::new();
            let mut series = Vec::new();
            for p in &params {
                let v = functional_phi(p, &ladder, cfg, spec)?;
                rows.push(vec![num(p.rho), num(v.value), num(v.uncertainty), num(*x), num((v.value - x).abs())]);
                series.push((p.rho, v.value));
            }
            Ok(Artifact::new(csv(FermatProbeReport::CSV_HEADER, rows), series))
        }
        Command::Fermat {
            x,
            y,
            z,
            n,
            a,
            alpha,
            rho,
            mode,
            csv: side,
        } => {
            let input = FermatInput::new(x, y, z, n)?;
            // the exact verdict never waits for the ladder
            let value = zll_core::functional::fermat_rational(&input.x, &input.y, &input.z, input.n)?.to_f64();
            let g_max = value * rho.iter().fold(0.0, |m: f64, r| m.max(*r)) + window_halfwidth(*a, *alpha)?;
            let ladder = ladder_for(*mode, g_max.max(100.0), cfg, spec)?;
            let rep = fermat_probe(&input.x, &input.y, &input.z, input.n, *a, *alpha, rho, &ladder, cfg, spec)?;
            let mut art = Artifact::new(json(&rep), rep.trajectory.iter().map(|p| (p.rho, p.phi)).collect());
            art.side_csv = side.clone().map(|path| (path, trajectory_csv(&rep)));
            Ok(art)
        }
        Command::ZprimeSums { big_t, delta } => {
            let rep = zprime_sums(*big_t, *delta, cfg)?;
            Ok(Artifact::new(json(&rep), vec![(rep.t, rep.sum_even), (rep.t, rep.sum_odd)]))
        }
        Command::ScanZeros { which, lo, hi, steps } => {
            let zeros = scan_odd_zeros(*which, *lo, *hi, *steps, cfg)?;
            let rows = zeros
                .iter()
                .map(|z| vec![num(z.ordinate), z.which.to_string(), num(z.refinement_residual)]);
            let series = zeros.iter().enumerate().map(|(i, z)| ((i + 1) as f64, z.ordinate)).collect();
            Ok(Artifact::new(csv(ZERO_CSV_HEADER, rows), series))
        }
    }
}

pub fn partition_csv(rep: &PartitionReport) -> String {
    let first = vec![
        "0".to_string(),
        num(rep.chain.base_t),
        String::new(),
        String::new(),
        String::new(),
        String::new(),
        String::new(),
        String::new(),
        String::new(),
    ];
    let rows = rep.rows.iter().map(|r| {
        vec![
            r.r.to_string(),
            num(r.t_r),
            num(r.spacing),
            num(r.delta_j),
            num(r.target),
            num(r.ratio),
            num(r.spacing_over_pi),
            opt(r.spacing_ratio),
            opt(r.segment_ratio),
        ]
    });
    csv(PartitionReport::CSV_HEADER, std::iter::once(first).chain(rows))
}

pub fn trajectory_csv(rep: &FermatProbeReport) -> String {
    csv(
        FermatProbeReport::CSV_HEADER,
        rep.trajectory
            .iter()
            .map(|p| vec![num(p.rho), num(p.phi), num(p.error_estimate), num(p.target), num(p.abs_deviation)]),
    )
}
