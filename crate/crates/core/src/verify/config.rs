use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exact::{parse_rational, Rational};

/// Bounds and filters for a verification run. Every identity has its own
/// natural grid; these bounds only shrink it.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct VerificationConfig {
    pub max_n: u64,
    #[serde(rename = "max_M", alias = "max_m")]
    pub max_m: u64,
    pub max_p: u32,
    pub z_samples: Vec<String>,
    pub quadrature_tolerance: f64,
    /// Identity ids or tags to run; empty means all.
    pub include: Vec<String>,
    /// Identity ids or tags to skip.
    pub exclude: Vec<String>,
    /// Perturbs the reference harmonic numbers (`H_n += 1/n`) so that every
    /// identity against the brute-force sums must fail. For testing the
    /// verifier itself.
    #[serde(skip_serializing_if = "std::ops::Not::not")]
    pub inject_harmonic_fault: bool,
}

impl Default for VerificationConfig {
    fn default() -> Self {
        VerificationConfig {
            max_n: 50,
            max_m: 30,
            max_p: 4,
            z_samples: ["-1", "-1/2", "1/3", "1/2", "1"]
                .iter()
                .map(|s| s.to_string())
                .collect(),
            quadrature_tolerance: 1e-10,
            include: Vec::new(),
            exclude: Vec::new(),
            inject_harmonic_fault: false,
        }
    }
}

impl VerificationConfig {
    pub fn from_json(text: &str) -> Result<Self> {
        let config: VerificationConfig =
            serde_json::from_str(text).map_err(|e| Error::Parse(format!("config: {e}")))?;
        config.validate()?;
        Ok(config)
    }

    pub fn validate(&self) -> Result<()> {
        if self.max_n == 0 || self.max_m == 0 || self.max_p == 0 {
            return Err(Error::invalid("max_n, max_M and max_p must be positive"));
        }
        if self.z_samples.is_empty() {
            return Err(Error::invalid("z_samples must not be empty"));
        }
        if self.quadrature_tolerance.is_nan() || self.quadrature_tolerance <= 0.0 {
            return Err(Error::invalid("quadrature_tolerance must be positive"));
        }
        self.z_values().map(|_| ())
    }

    pub fn z_values(&self) -> Result<Vec<Rational>> {
        self.z_samples.iter().map(|s| parse_rational(s)).collect()
    }
}
