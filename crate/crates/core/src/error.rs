use thiserror::Error;

/// Errors surfaced by the numerical kernels.
///
/// The CLI maps these onto process exit codes: invalid arguments and
/// geometry mismatches are precondition failures (exit 2), `Resource` is a
/// size-cap refusal (exit 3), and `StageFailure` reports a translate
/// selection stage that exhausted its candidate budget (exit 4).
#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("geometry mismatch: {0}")]
    GeometryMismatch(String),

    #[error("resource limit: {0}")]
    Resource(String),

    #[error("stage {stage} failed: best achieved bound {best_bound:.6e} exceeds threshold {threshold:.6e}")]
    StageFailure {
        stage: usize,
        best_bound: f64,
        threshold: f64,
    },

    #[error("wavelet not admissible: {0}")]
    NotAdmissible(String),

    #[error("not normalizable by scaling: {0}")]
    NotNormalizable(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub fn invalid(msg: impl Into<String>) -> Self {
        Error::InvalidArgument(msg.into())
    }

    pub fn mismatch(msg: impl Into<String>) -> Self {
        Error::GeometryMismatch(msg.into())
    }
}
