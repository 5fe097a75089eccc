use thiserror::Error;

pub type Result<T, E = PssError> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum PssError {
    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    /// A value cannot be represented in the variable's domain, e.g. an
    /// integer variable whose bounds enclose no whole number.
    #[error("domain error: {0}")]
    Domain(String),

    #[error("objective returned NaN at x = {point:?}")]
    Evaluation { point: Vec<f64> },

    #[error("non-finite objective value {value} at x = {x}")]
    NonFiniteSample { x: f64, value: f64 },

    #[error("unknown problem `{0}`")]
    UnknownProblem(String),

    #[error("no published optimum for `{id}` with n = {dims}")]
    NoKnownOptimum { id: String, dims: usize },
}

pub(crate) fn invalid(msg: impl Into<String>) -> PssError {
    PssError::InvalidArgument(msg.into())
}
