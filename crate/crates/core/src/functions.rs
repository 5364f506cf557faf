//! Built-in functions on `[a, b]` used by the experiments and the CLI.

use std::f64::consts::PI;
use std::fmt;
use std::str::FromStr;

#[derive(Debug, Clone, PartialEq)]
pub enum TestFunction {
    /// `sin(pi t)`
    SinPi,
    /// `1 / (1 + 25 t^2)`
    Runge,
    /// `c0 + c1 t + c2 t^2 + ...`
    Polynomial(Vec<f64>),
}

impl TestFunction {
    pub fn eval(&self, t: f64) -> f64 {
        match self {
            Self::SinPi => (PI * t).sin(),
            Self::Runge => 1.0 / (1.0 + 25.0 * t * t),
            Self::Polynomial(c) => c.iter().rev().fold(0.0, |acc, &ck| acc * t + ck),
        }
    }
}

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
#[error("unknown function '{0}', expected sin-pi, runge or poly:<c0,c1,...>")]
pub struct ParseFunctionError(String);

impl FromStr for TestFunction {
    type Err = ParseFunctionError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.trim() {
            "sin-pi" => Ok(Self::SinPi),
            "runge" => Ok(Self::Runge),
            other => {
                let body = other.strip_prefix("poly:").ok_or_else(|| ParseFunctionError(s.to_string()))?;
                let coeffs = body
                    .split(',')
                    .map(|c| c.trim().parse::<f64>())
                    .collect::<Result<Vec<_>, _>>()
                    .map_err(|_| ParseFunctionError(s.to_string()))?;
                if coeffs.is_empty() || coeffs.iter().any(|c| !c.is_finite()) {
                    return Err(ParseFunctionError(s.to_string()));
                }
                Ok(Self::Polynomial(coeffs))
            }
        }
    }
}

impl fmt::Display for TestFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::SinPi => f.write_str("sin-pi"),
            Self::Runge => f.write_str("runge"),
            Self::Polynomial(c) => {
                let parts: Vec<String> = c.iter().map(|v| v.to_string()).collect();
                write!(f, "poly:{}", parts.join(","))
            }
        }
    }
}
