//! Numeric argument grammar: decimal floats, `p/q` fractions, comma lists,
//! and decimal naturals for the Fermat probe.

use num_bigint::BigUint;

use crate::error::CliError;

/// Largest accepted natural, in decimal digits.
pub const MAX_DIGITS: usize = 4096;
/// Cap on `digits * n` so that `x^n` stays small.
pub const MAX_POWER_DIGITS: usize = 1 << 20;

/// A finite real: `1e3`, `-0.5`, `1/6`.
pub fn parse_number(s: &str) -> Result<f64, CliError> {
    let s = s.trim();
    let v = match s.split_once('/') {
        Some((p, q)) => {
            let p: f64 = p.trim().parse().map_err(|_| bad_number(s))?;
            let q: f64 = q.trim().parse().map_err(|_| bad_number(s))?;
            if q == 0.0 {
                return Err(bad_number(s));
            }
            p / q
        }
        None => s.parse().map_err(|_| bad_number(s))?,
    };
    if v.is_finite() {
        Ok(v)
    } else {
        Err(bad_number(s))
    }
}

fn bad_number(s: &str) -> CliError {
    CliError::Input(format!("{s:?} is not a finite number"))
}

/// Comma-separated numbers, at least one.
pub fn parse_number_list(s: &str) -> Result<Vec<f64>, CliError> {
    if s.trim().is_empty() {
        return Err(CliError::Input("empty number list".into()));
    }
    s.split(',').map(parse_number).collect()
}

/// A positive decimal integer of at most [`MAX_DIGITS`] digits.
pub fn parse_natural(s: &str) -> Result<BigUint, CliError> {
    let s = s.trim();
    if s.is_empty() || s.len() > MAX_DIGITS || !s.bytes().all(|b| b.is_ascii_digit()) {
        return Err(CliError::Input(format!("{s:?} is not a natural number of at most {MAX_DIGITS} digits")));
    }
    let v: BigUint = s.parse().map_err(|_| CliError::Input(format!("{s:?} is not a natural number")))?;
    if v == BigUint::ZERO {
        return Err(CliError::Input("naturals must be positive".into()));
    }
    Ok(v)
}

#[derive(Debug, Clone, PartialEq)]
pub struct FermatInput {
    pub x: BigUint,
    pub y: BigUint,
    pub z: BigUint,
    pub n: u32,
}

impl FermatInput {
    pub fn new(x: &str, y: &str, z: &str, n: &str) -> Result<Self, CliError> {
        let (x, y, z) = (parse_natural(x)?, parse_natural(y)?, parse_natural(z)?);
        let n: u32 = n
            .trim()
            .parse()
            .map_err(|_| CliError::Input(format!("exponent {n:?} is not a small natural")))?;
        let digits = [&x, &y, &z].iter().map(|v| v.to_string().len()).max().unwrap_or(1);
        if digits.saturating_mul(n as usize) > MAX_POWER_DIGITS {
            return Err(CliError::Input(format!("x^n with {digits} digits and n = {n} is too large")));
        }
        Ok(Self { x, y, z, n })
    }

    /// Whitespace-separated `x y z n`.
    pub fn parse(s: &str) -> Result<Self, CliError> {
        let parts: Vec<&str> = s.split_whitespace().collect();
        match parts.as_slice() {
            [x, y, z, n] => Self::new(x, y, z, n),
            _ => Err(CliError::Input("expected four fields: x y z n".into())),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn numbers() {
        assert_eq!(parse_number("1e3").unwrap(), 1000.0);
        assert_eq!(parse_number(" 1/4 ").unwrap(), 0.25);
        assert!(parse_number("1/0").is_err());
        assert!(parse_number("nan").is_err());
        assert!(parse_number("inf").is_err());
        assert!(parse_number("").is_err());
    }

    #[test]
    fn lists() {
        assert_eq!(parse_number_list("1e3, 1e4").unwrap(), vec![1e3, 1e4]);
        assert!(parse_number_list("1e3,,1e4").is_err());
        assert!(parse_number_list(" ").is_err());
    }

    #[test]
    fn naturals() {
        assert_eq!(parse_natural("125").unwrap(), BigUint::from(125u32));
        assert!(parse_natural("0").is_err());
        assert!(parse_natural("-3").is_err());
        assert!(parse_natural("+3").is_err());
        assert!(parse_natural(&"9".repeat(MAX_DIGITS + 1)).is_err());
    }

    #[test]
    fn fermat_input() {
        let f = FermatInput::parse("3 4 5 3").unwrap();
        assert_eq!(f.n, 3);
        assert!(FermatInput::parse("3 4 5").is_err());
        assert!(FermatInput::parse("3 4 5 x").is_err());
        assert!(FermatInput::new("99", "1", "1", "4000000000").is_err());
    }
}
