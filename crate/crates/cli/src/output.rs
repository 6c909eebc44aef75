//! Deterministic text artifacts.

use std::fs;
use std::path::Path;

use serde::Serialize;

use crate::error::CliError;

pub const SCHEMA_VERSION: u32 = 1;

/// Seventeen significant digits in scientific notation.
pub fn num(x: f64) -> String {
    format!("{x:.16e}")
}

pub fn opt(x: Option<f64>) -> String {
    x.map(num).unwrap_or_default()
}

/// Header plus one line per row, newline-terminated.
pub fn csv(header: &str, rows: impl IntoIterator<Item = Vec<String>>) -> String {
    let mut out = String::from(header);
    out.push('\n');
    for row in rows {
        out.push_str(&row.join(","));
        out.push('\n');
    }
    out
}

/// Whitespace-separated two-column text, one point per line.
pub fn plotdata(series: &[(f64, f64)]) -> Result<String, CliError> {
    if series.is_empty() {
        return Err(CliError::Input("no points to plot".into()));
    }
    Ok(series.iter().map(|(x, y)| format!("{} {}\n", num(*x), num(*y))).collect())
}

pub fn emit_plotdata(series: &[(f64, f64)], path: &Path) -> Result<(), CliError> {
    write(path, &plotdata(series)?)
}

pub fn write(path: &Path, text: &str) -> Result<(), CliError> {
    fs::write(path, text).map_err(|e| CliError::io(path, e))
}

#[derive(Debug, Clone, Serialize)]
pub struct RunManifest {
    pub schema_version: u32,
    pub command: String,
    pub parameters: serde_json::Value,
    pub tool_version: String,
    pub config_hash: String,
    pub wall_time_s: f64,
    pub workers: usize,
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn seventeen_digits() {
        assert_eq!(num(0.1), "1.0000000000000001e-1");
        assert_eq!(num(-2.0), "-2.0000000000000000e0");
        assert_eq!(num(0.1).parse::<f64>().unwrap(), 0.1);
    }

    #[test]
    fn plot_lines() {
        assert_eq!(plotdata(&[(1.0, 2.0)]).unwrap().lines().count(), 1);
        assert!(plotdata(&[]).is_err());
    }

    #[test]
    fn csv_shape() {
        let s = csv("a,b", [vec!["1".into(), "2".into()]]);
        assert_eq!(s, "a,b\n1,2\n");
    }
}
