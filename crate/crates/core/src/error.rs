use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("cannot parse partition {input:?}: {reason}")]
    Parse { input: String, reason: String },

    #[error("invalid partition: {0}")]
    InvalidPartition(String),

    #[error("size mismatch: {context} (sizes {sizes:?})")]
    SizeMismatch { context: &'static str, sizes: Vec<usize> },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("{what} = {value} exceeds the configured limit {limit}")]
    LimitExceeded { what: String, value: usize, limit: usize },

    #[error("infeasible margins: {0}")]
    Infeasible(String),

    #[error("solver did not converge after {iterations} sweeps (best margin residual {residual:e})")]
    NonConvergence { iterations: usize, residual: f64 },

    #[error("internal consistency failure: {0}")]
    Consistency(String),
}

impl Error {
    pub(crate) fn sizes(context: &'static str, sizes: &[usize]) -> Self {
        Error::SizeMismatch { context, sizes: sizes.to_vec() }
    }

    /// Exit status used by the command-line front end.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::LimitExceeded { .. } => 3,
            Error::NonConvergence { .. } | Error::Consistency(_) => 1,
            _ => 2,
        }
    }
}
