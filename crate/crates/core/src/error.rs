use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    /// A scalar parameter violated its admissible range. `key` names the
    /// parameter the way it appears in configuration files.
    #[error("{key}: {reason} (got {value})")]
    Parameter {
        key: &'static str,
        value: f64,
        reason: &'static str,
    },

    #[error("resolution: must be at least 2 (got {0})")]
    Resolution(usize),

    #[error("box: lo must be strictly below hi on every axis")]
    DegenerateBox,

    #[error("dimension: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("x: kernel evaluated at the origin")]
    SingularPoint,

    #[error(
        "weight: |x|^{beta} is not locally integrable in dimension {n} on a ball containing 0"
    )]
    NotLocallyIntegrable { beta: f64, n: usize },

    #[error("{0}: empty ladder or family")]
    Empty(&'static str),

    #[error("function: support diameter {support:.4} exceeds the padding limit {limit:.4}")]
    SupportTooLarge { support: f64, limit: f64 },

    #[error("exponents: {0}")]
    Exponents(String),

    #[error("{key}: {message}")]
    Invalid { key: &'static str, message: String },
}

impl Error {
    /// The configuration key the error refers to.
    pub fn key(&self) -> &'static str {
        match self {
            Error::Parameter { key, .. } | Error::Invalid { key, .. } => key,
            Error::Resolution(_) => "resolution",
            Error::DegenerateBox => "box",
            Error::DimensionMismatch { .. } => "dimension",
            Error::SingularPoint => "x",
            Error::NotLocallyIntegrable { .. } => "weight",
            Error::Empty(key) => key,
            Error::SupportTooLarge { .. } => "function",
            Error::Exponents(_) => "exponents",
        }
    }

    pub(crate) fn param(key: &'static str, value: f64, reason: &'static str) -> Self {
        Error::Parameter { key, value, reason }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
