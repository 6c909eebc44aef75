//! Flat `key = value` configuration files.

use std::collections::BTreeMap;

use crate::error::CliError;

/// Parse `key = value` lines. `#` starts a comment, blank lines are skipped,
/// keys are `[A-Za-z0-9_-]+` and may appear once.
pub fn parse_config(text: &str) -> Result<BTreeMap<String, String>, CliError> {
    let mut out = BTreeMap::new();
    for (i, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let Some((key, value)) = line.split_once('=') else {
            return Err(CliError::Input(format!("config line {}: expected key = value", i + 1)));
        };
        let (key, value) = (key.trim(), value.trim());
        if key.is_empty() || !key.chars().all(|c| c.is_ascii_alphanumeric() || c == '_' || c == '-') {
            return Err(CliError::Input(format!("config line {}: bad key {key:?}", i + 1)));
        }
        if value.is_empty() {
            return Err(CliError::Input(format!("config line {}: empty value for {key}", i + 1)));
        }
        if out.insert(key.to_string(), value.to_string()).is_some() {
            return Err(CliError::Input(format!("config line {}: duplicate key {key}", i + 1)));
        }
    }
    Ok(out)
}

/// The flag a config key stands for: `rel_tol` -> `--rel-tol`.
pub fn key_to_flag(key: &str) -> String {
    format!("--{}", key.replace('_', "-"))
}
