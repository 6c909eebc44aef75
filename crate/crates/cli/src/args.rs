//! Command-line grammar.

use std::collections::BTreeMap;
use std::path::PathBuf;

use clap::{Args, CommandFactory, Parser, Subcommand};
use zll_core::quadrature::{JMode, QuadratureSpec};
use zll_core::zeta::EvaluatorConfig;
use zll_core::zprime_lab::Which;

use crate::config::key_to_flag;
use crate::error::CliError;
use crate::numbers::{parse_number, parse_number_list};

fn number(s: &str) -> Result<f64, String> {
    parse_number(s).map_err(|e| e.to_string())
}

/// A comma-separated list given as one argument.
#[derive(Debug, Clone, PartialEq, serde::Serialize)]
pub struct Numbers(pub Vec<f64>);

impl std::ops::Deref for Numbers {
    type Target = [f64];

    fn deref(&self) -> &[f64] {
        &self.0
    }
}

fn numbers(s: &str) -> Result<Numbers, String> {
    parse_number_list(s).map(Numbers).map_err(|e| e.to_string())
}

#[derive(Debug, Parser)]
#[command(name = "zll", version, about = "Critical-line zeta experiments", args_override_self = true)]
pub struct Cli {
    #[command(flatten)]
    pub global: GlobalOpts,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Args)]
pub struct GlobalOpts {
    /// Output file; stdout when absent.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    /// Two-column plot data file.
    #[arg(long, global = true)]
    pub plot: Option<PathBuf>,
    /// Worker threads; falls back to ZLL_THREADS.
    #[arg(long, global = true)]
    pub threads: Option<usize>,
    /// Flat key = value file; flags override it.
    #[arg(long, global = true)]
    pub config: Option<PathBuf>,
    /// Riemann-Siegel corrections C_0..=C_k.
    #[arg(long, global = true, default_value_t = 2)]
    pub rs_terms: usize,
    #[arg(long, global = true, value_parser = number, default_value = "50")]
    pub stirling_threshold: f64,
    #[arg(long, global = true, value_parser = number, default_value = "1e-9")]
    pub oracle_tolerance: f64,
    /// Per-panel relative tolerance.
    #[arg(long, global = true, value_parser = number, default_value = "1e-4")]
    pub rel_tol: f64,
    #[arg(long, global = true, value_parser = number, default_value = "8")]
    pub points_per_wavelength: f64,
    #[arg(long, global = true, default_value_t = QuadratureSpec::DEFAULT_MAX_PANELS)]
    pub max_panels: usize,
}

impl GlobalOpts {
    pub fn evaluator(&self) -> Result<EvaluatorConfig, CliError> {
        Ok(EvaluatorConfig::new(self.rs_terms, self.stirling_threshold, self.oracle_tolerance)?)
    }

    pub fn quadrature(&self) -> Result<QuadratureSpec, CliError> {
        let spec = QuadratureSpec {
            rel_tol: self.rel_tol,
            points_per_wavelength: self.points_per_wavelength,
            max_panels: self.max_panels,
        };
        spec.validate()?;
        Ok(spec)
    }
}

#[derive(Debug, Clone, Subcommand)]
pub enum Command {
    /// Z(t), theta(t) and X(t) at each t.
    ZEval {
        #[arg(long, value_parser = numbers)]
        t: Numbers,
    },
    /// theta(t) and theta'(t).
    Theta {
        #[arg(long, value_parser = numbers)]
        t: Numbers,
    },
    /// X(t), Z(t) and their ratio against (pi/2)^{1/4}.
    XFn {
        #[arg(long, value_parser = numbers)]
        t: Numbers,
    },
    /// The Lemma-18 double integral with U = T^a, H = ln^alpha T.
    Lemma18 {
        #[arg(long = "T", value_parser = number)]
        big_t: f64,
        #[arg(long, value_parser = number, default_value = "0.6")]
        a: f64,
        #[arg(long, value_parser = number, default_value = "1")]
        alpha: f64,
    },
    /// J(T) = int_0^T Z^2.
    HlIntegral {
        #[arg(long = "T", value_parser = numbers)]
        big_t: Numbers,
        #[arg(long, default_value = "quadrature")]
        mode: JMode,
    },
    /// Reverse iterates of phi_1 and the partition they generate.
    Ladder {
        #[arg(long = "T", value_parser = number)]
        big_t: f64,
        #[arg(long, default_value_t = 3)]
        k: usize,
        #[arg(long, default_value = "asymptotic")]
        mode: JMode,
    },
    /// The functional Phi(x, a, alpha, rho) for each rho.
    Functional {
        #[arg(long, value_parser = number, default_value = "1")]
        x: f64,
        #[arg(long, value_parser = number, default_value = "0.9")]
        a: f64,
        #[arg(long, value_parser = number, default_value = "1")]
        alpha: f64,
        #[arg(long, value_parser = numbers)]
        rho: Numbers,
        #[arg(long, default_value = "asymptotic")]
        mode: JMode,
    },
    /// Exact verdict on x^n + y^n = z^n and the functional trajectory.
    Fermat {
        #[arg(long)]
        x: String,
        #[arg(long)]
        y: String,
        #[arg(long)]
        z: String,
        #[arg(long)]
        n: String,
        #[arg(long, value_parser = number, default_value = "0.9")]
        a: f64,
        #[arg(long, value_parser = number, default_value = "1")]
        alpha: f64,
        #[arg(long, value_parser = numbers)]
        rho: Numbers,
        #[arg(long, default_value = "asymptotic")]
        mode: JMode,
        /// Trajectory CSV next to the JSON report.
        #[arg(long)]
        csv: Option<PathBuf>,
    },
    /// Sums of Z' over the points theta(t) = pi nu + pi/2 in [T, T + T^delta ln T].
    ZprimeSums {
        #[arg(long = "T", value_parser = number)]
        big_t: f64,
        #[arg(long, value_parser = number, default_value = "1/6")]
        delta: f64,
    },
    /// Sign changes of Z or Z' in [lo, hi].
    ScanZeros {
        #[arg(long, default_value = "Z")]
        which: Which,
        #[arg(long, value_parser = number)]
        lo: f64,
        #[arg(long, value_parser = number)]
        hi: f64,
        #[arg(long, default_value_t = 8)]
        steps: u32,
    },
}

impl Command {
    pub fn name(&self) -> &'static str {
        match self {
            Command::ZEval { .. } => "z-eval",
            Command::Theta { .. } => "theta",
            Command::XFn { .. } => "x-fn",
            Command::Lemma18 { .. } => "lemma18",
            Command::HlIntegral { .. } => "hl-integral",
            Command::Ladder { .. } => "ladder",
            Command::Functional { .. } => "functional",
            Command::Fermat { .. } => "fermat",
            Command::ZprimeSums { .. } => "zprime-sums",
            Command::ScanZeros { .. } => "scan-zeros",
        }
    }
}

/// The value of `--config` if present.
pub fn config_path(argv: &[String]) -> Option<PathBuf> {
    let mut it = argv.iter().skip(1);
    while let Some(a) = it.next() {
        if a == "--config" {
            return it.next().map(PathBuf::from);
        }
        if let Some(p) = a.strip_prefix("--config=") {
            return Some(PathBuf::from(p));
        }
    }
    None
}

/// Parse `argv`, with `config` entries inserted right after the subcommand
/// so that flags given on the command line win.
pub fn parse_cli(argv: &[String], config: Option<&BTreeMap<String, String>>) -> Result<Cli, CliError> {
    let mut argv = argv.to_vec();
    if let Some(config) = config.filter(|c| !c.is_empty()) {
        let root = Cli::command();
        let sub_at = argv
            .iter()
            .enumerate()
            .skip(1)
            .find(|(_, a)| root.find_subcommand(a.as_str()).is_some())
            .map(|(i, _)| i);
        if let Some(i) = sub_at {
            let sub = root.find_subcommand(argv[i].as_str()).expect("found above");
            let accepts = |flag: &str| {
                sub.get_arguments()
                    .chain(root.get_arguments())
                    .any(|a| a.get_long().is_some_and(|l| flag == format!("--{l}")))
            };
            let mut injected = Vec::new();
            for (key, value) in config {
                let flag = key_to_flag(key);
                if flag == "--config" {
                    continue;
                }
                if accepts(&flag) {
                    injected.push(flag);
                    injected.push(value.clone());
                } else if !root
                    .get_subcommands()
                    .any(|s| s.get_arguments().any(|a| a.get_long().is_some_and(|l| flag == format!("--{l}"))))
                {
                    return Err(CliError::Input(format!("unknown config key {key:?}")));
                }
            }
            argv.splice(i + 1..i + 1, injected);
        }
    }
    Ok(Cli::try_parse_from(argv)?)
}
