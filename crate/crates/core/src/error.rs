use std::path::PathBuf;

use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("dimension must be at least 2, got {0}")]
    InvalidDimension(usize),

    #[error("uniform draws summed to zero {retries} times in a row")]
    DegenerateSum { retries: u32 },

    /// The exact trigonometric inversion produced `sin^2(theta_j) = argument > 1`.
    #[error("angle {index}: arcsin argument {argument} exceeds 1")]
    Domain { index: usize, argument: f64 },

    #[error("dimension mismatch: expected {expected}, got {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("value {0} outside [0, 1]")]
    ValueOutOfRange(f64),

    #[error("histograms have different bin counts ({0} vs {1})")]
    BinMismatch(usize, usize),

    #[error("histogram has no observations")]
    EmptyHistogram,

    #[error("empty input")]
    EmptyInput,

    #[error("not a probability vector: {0}")]
    InvalidVector(String),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },

    #[error(transparent)]
    Csv(#[from] csv::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),

    #[error("parse error: {0}")]
    Parse(String),
}
