//! Error type shared by the whole crate.

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,

    #[error("invalid rational literal `{0}` (expected `p` or `p/q`)")]
    ParseRational(String),

    #[error("series is not invertible: constant term {0} has no inverse")]
    SingularSeries(String),

    #[error("series not divisible by t^{power}: coefficient of t^{index} is nonzero")]
    NonDivisible { power: usize, index: usize },

    #[error("parameter pole: {0}")]
    PoleParameter(String),

    #[error("degenerate parameter: {0}")]
    DegenerateParameter(String),

    #[error("multi-index must have depth >= 1")]
    EmptyIndex,

    #[error("unsupported depth: {0}")]
    UnsupportedDepth(String),
}

pub type Result<T> = std::result::Result<T, Error>;
