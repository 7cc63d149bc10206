use thiserror::Error;

/// Failure modes shared by every engine operation.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Malformed or out-of-range arguments.
    #[error("invalid input: {0}")]
    Input(String),
    /// An exhaustive search would exceed its configured guard.
    #[error("resource guard exceeded: {0}")]
    Resource(String),
    /// Two computation routes that must agree produced different answers.
    #[error("internal consistency failure: {0}")]
    Consistency(String),
}

pub type Result<T> = std::result::Result<T, Error>;

macro_rules! input_err {
    ($($arg:tt)*) => {
        $crate::Error::Input(format!($($arg)*))
    };
}

macro_rules! ensure_input {
    ($cond:expr, $($arg:tt)*) => {
        if !$cond {
            return Err($crate::error::input_err!($($arg)*));
        }
    };
}

pub(crate) use ensure_input;
pub(crate) use input_err;
