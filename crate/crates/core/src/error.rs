use thiserror::Error;

/// Errors raised by the numeric core, the series engine, the catalog and the
/// transformation checks.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("pole: {0}")]
    Pole(String),

    #[error("series is not converging geometrically: term ratio {ratio:.4} after {terms} terms")]
    NonConvergence { ratio: f64, terms: usize },

    #[error("stopping threshold not reached within {0} terms")]
    MaxTermsExceeded(usize),

    #[error("{requested} digits requested but this summation method is limited to {max}")]
    DigitsTooHigh { requested: u32, max: u32 },

    #[error("parse error at line {line}, column {column} (field `{path}`): {message}")]
    Parse {
        line: usize,
        column: usize,
        path: String,
        message: String,
    },

    #[error("validation failed for `{id}`: {reason}")]
    Validation { id: String, reason: String },

    #[error("unknown identifier `{0}`")]
    UnknownId(String),

    #[error("degenerate parameters: {0}")]
    DegenerateParameters(String),

    #[error("parameter outside the admissible domain: {0}")]
    DomainViolation(String),

    #[error("stencil unstable: Richardson levels differ by 10^{log10_gap:.1}")]
    StencilUnstable { log10_gap: f64 },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}

pub type Result<T> = std::result::Result<T, Error>;
