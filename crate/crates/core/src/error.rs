use thiserror::Error;

/// Errors raised across the library.
#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("dimension mismatch: matrix of dimension {dim} cannot be split as {d_a}x{d_b}")]
    DimensionMismatch { dim: usize, d_a: usize, d_b: usize },

    #[error("eigenvalue density of {metric} is undefined at a zero eigenvalue")]
    ZeroEigenvalue { metric: &'static str },

    #[error("unsupported combination: {0}")]
    Unsupported(String),

    #[error("non-finite integrand value at {point:?}")]
    NonFinite { point: Vec<f64> },

    #[error("quadrature did not converge: best estimate {estimate} with relative error {achieved:e}")]
    NoConvergence { estimate: f64, achieved: f64 },

    #[error("singular fitting system (determinant {det:e})")]
    SingularSystem { det: f64 },

    #[error("unknown constant {0}")]
    UnknownConstant(String),

    #[error("empty input: {0}")]
    Empty(&'static str),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
