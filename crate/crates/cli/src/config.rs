use qsusy_core::{AlgebraConfig, Gq};
use serde::Serialize;

#[derive(Debug, thiserror::Error, PartialEq, Eq)]
pub enum ConfigError {
    #[error("invalid spin '{0}': expected a positive half-integer such as 1/2, 1 or 3/2")]
    Spin(String),
    #[error("invalid rational '{0}': expected p or p/r")]
    Rational(String),
    #[error("--max-degree must be at least 2 (got {0})")]
    MaxDegree(usize),
    #[error("--g must be nonzero so that Im tau = 4 pi / g^2 is finite and positive")]
    Coupling,
    #[error(transparent)]
    Algebra(#[from] qsusy_core::Error),
}

/// Parameters shared by every suite and subcommand.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SuiteConfig {
    pub n_susy: u8,
    /// Spins as `2j`.
    pub two_j: Vec<u32>,
    pub max_degree: usize,
    pub killing_hh: u32,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub q_value: Option<Gq>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub coupling: Option<Gq>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub theta: Option<Gq>,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        SuiteConfig { n_susy: 2, two_j: vec![1, 2, 3], max_degree: 2, killing_hh: 1, q_value: None, coupling: None, theta: None }
    }
}

impl SuiteConfig {
    pub fn algebra(&self) -> AlgebraConfig {
        AlgebraConfig { n_susy: self.n_susy, killing_hh: self.killing_hh, q_value: self.q_value.clone(), ..Default::default() }
    }

    pub fn validate(&self) -> Result<(), ConfigError> {
        self.algebra().validate()?;
        if self.max_degree < 2 {
            return Err(ConfigError::MaxDegree(self.max_degree));
        }
        if self.two_j.contains(&0) {
            return Err(ConfigError::Spin("0".into()));
        }
        if self.coupling.as_ref().is_some_and(Gq::is_zero) {
            return Err(ConfigError::Coupling);
        }
        Ok(())
    }
}

/// `"1/2" → 1`, `"1" → 2`, `"3/2" → 3`.
pub fn parse_spin(text: &str) -> Result<u32, ConfigError> {
    let err = || ConfigError::Spin(text.to_string());
    let t = text.trim();
    let two_j = match t.split_once('/') {
        Some((n, "2")) => n.trim().parse::<u32>().map_err(|_| err())?,
        Some(_) => return Err(err()),
        None => 2 * t.parse::<u32>().map_err(|_| err())?,
    };
    if two_j == 0 {
        return Err(err());
    }
    Ok(two_j)
}

pub fn spin_label(two_j: u32) -> String {
    if two_j.is_multiple_of(2) {
        (two_j / 2).to_string()
    } else {
        format!("{two_j}/2")
    }
}

pub fn parse_rational(text: &str) -> Result<Gq, ConfigError> {
    Gq::parse_rational(text).ok_or_else(|| ConfigError::Rational(text.to_string()))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn spins() {
        assert_eq!(parse_spin("1/2"), Ok(1));
        assert_eq!(parse_spin("1"), Ok(2));
        assert_eq!(parse_spin("3/2"), Ok(3));
        assert!(parse_spin("0").is_err());
        assert!(parse_spin("1/3").is_err());
        assert_eq!(spin_label(3), "3/2");
        assert_eq!(spin_label(4), "2");
    }

    #[test]
    fn validation() {
        assert!(SuiteConfig::default().validate().is_ok());
        let bad = SuiteConfig { max_degree: 1, ..Default::default() };
        assert_eq!(bad.validate(), Err(ConfigError::MaxDegree(1)));
        let bad = SuiteConfig { q_value: Some(Gq::from_i64(1)), ..Default::default() };
        assert!(bad.validate().is_err());
        let bad = SuiteConfig { coupling: Some(Gq::zero()), ..Default::default() };
        assert_eq!(bad.validate(), Err(ConfigError::Coupling));
    }
}
