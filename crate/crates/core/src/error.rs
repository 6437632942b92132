use thiserror::Error;

/// Errors raised by the library.
///
/// Input problems and internal invariant violations are kept apart so the
/// command-line front end can map them to distinct exit codes.
#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid sequence: {0}")]
    InvalidSequence(String),

    #[error("invalid fan: {0}")]
    InvalidFan(String),

    #[error("invalid conformal invariant: {0}")]
    InvalidLambda(String),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    /// A property that must hold for every valid input failed. Always a bug.
    #[error("internal invariant violated: {0}")]
    Invariant(String),

    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),

    #[error("json error: {0}")]
    Json(#[from] serde_json::Error),
}

impl Error {
    /// `true` for errors caused by user input rather than by a bug.
    pub fn is_input_error(&self) -> bool {
        matches!(
            self,
            Error::InvalidSequence(_)
                | Error::InvalidFan(_)
                | Error::InvalidLambda(_)
                | Error::InvalidArgument(_)
        )
    }
}

pub type Result<T> = std::result::Result<T, Error>;

macro_rules! ensure_invariant {
    ($cond:expr, $($arg:tt)+) => {
        if !$cond {
            return Err($crate::error::Error::Invariant(format!($($arg)+)));
        }
    };
}
pub(crate) use ensure_invariant;
