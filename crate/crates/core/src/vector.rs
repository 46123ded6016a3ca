use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Absolute tolerance on `|sum(p) - 1|`, valid for dimensions up to 1024.
pub const SUM_TOLERANCE: f64 = 1e-12;

/// Generation procedure that produced a vector.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize, clap::ValueEnum)]
pub enum Method {
    /// Normalized independent uniforms.
    #[serde(rename = "iid")]
    #[value(name = "iid")]
    Iid,
    /// Sequential stick-breaking on the remaining mass.
    #[serde(rename = "norm")]
    #[value(name = "norm")]
    Normalization,
    /// Squared-sine/cosine parametrization with `theta_j = arccos(sqrt(t_j))`.
    #[serde(rename = "trig")]
    #[value(name = "trig")]
    Trig,
    /// Squared-sine/cosine parametrization with the exact inverse angles.
    /// Fails whenever an arcsin argument leaves `[0, 1]`.
    #[serde(rename = "trig-exact")]
    #[value(name = "trig-exact")]
    TrigExact,
}

impl Method {
    pub const ALL: [Method; 4] = [
        Method::Iid,
        Method::Normalization,
        Method::Trig,
        Method::TrigExact,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            Method::Iid => "iid",
            Method::Normalization => "norm",
            Method::Trig => "trig",
            Method::TrigExact => "trig-exact",
        }
    }

    /// Uniforms consumed by one biased (unshuffled) sample.
    pub fn biased_draws(self, dim: usize) -> usize {
        match self {
            Method::Iid => dim,
            Method::Normalization | Method::Trig | Method::TrigExact => dim - 1,
        }
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Method {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Method::ALL
            .into_iter()
            .find(|m| m.as_str() == s)
            .ok_or_else(|| Error::InvalidArgument(format!("unknown method `{s}`")))
    }
}

/// A point on the probability simplex, with a record of how it was made.
#[derive(Debug, Clone, PartialEq)]
pub struct ProbabilityVector {
    components: Vec<f64>,
    method: Method,
    shuffled: bool,
    draws_used: u64,
}

impl ProbabilityVector {
    /// Validates `components` and wraps them.
    ///
    /// Requires at least two components, each finite and non-negative, summing
    /// to one within [`SUM_TOLERANCE`].
    pub fn new(components: Vec<f64>, method: Method) -> Result<Self> {
        check_dim(components.len())?;
        if let Some(bad) = components.iter().find(|c| !(c.is_finite() && **c >= 0.0)) {
            return Err(Error::InvalidVector(format!(
                "component {bad} is negative or not finite"
            )));
        }
        let sum: f64 = components.iter().sum();
        if (sum - 1.0).abs() > SUM_TOLERANCE {
            return Err(Error::InvalidVector(format!("components sum to {sum}")));
        }
        Ok(ProbabilityVector {
            components,
            method,
            shuffled: false,
            draws_used: 0,
        })
    }

    pub(crate) fn from_sampler(components: Vec<f64>, method: Method, draws_used: u64) -> Self {
        debug_assert!(components.iter().all(|&c| c >= 0.0));
        debug_assert!((components.iter().sum::<f64>() - 1.0).abs() <= SUM_TOLERANCE);
        ProbabilityVector {
            components,
            method,
            shuffled: false,
            draws_used,
        }
    }

    pub(crate) fn into_shuffled(mut self, components: Vec<f64>, extra_draws: u64) -> Self {
        self.components = components;
        self.shuffled = true;
        self.draws_used += extra_draws;
        self
    }

    pub fn components(&self) -> &[f64] {
        &self.components
    }

    pub fn into_components(self) -> Vec<f64> {
        self.components
    }

    pub fn dim(&self) -> usize {
        self.components.len()
    }

    pub fn method(&self) -> Method {
        self.method
    }

    pub fn is_shuffled(&self) -> bool {
        self.shuffled
    }

    /// Uniform variates consumed to produce this vector.
    pub fn draws_used(&self) -> u64 {
        self.draws_used
    }

    /// Largest component.
    pub fn max_component(&self) -> f64 {
        self.components.iter().copied().fold(0.0, f64::max)
    }
}

impl std::ops::Index<usize> for ProbabilityVector {
    type Output = f64;

    fn index(&self, i: usize) -> &f64 {
        &self.components[i]
    }
}

pub(crate) fn check_dim(dim: usize) -> Result<()> {
    if dim < 2 {
        Err(Error::InvalidDimension(dim))
    } else {
        Ok(())
    }
}
