use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    /// Malformed or out-of-range input (bad vertex, self-loop, bad parameter).
    #[error("input error: {0}")]
    Input(String),

    /// A graph file could not be decoded.
    #[error("parse error at byte {offset}: {message}")]
    Parse { offset: usize, message: String },

    /// A theorem or bound hypothesis does not hold for this input.
    #[error("not applicable: {0}")]
    Inapplicable(String),

    #[error("numeric error: {0}")]
    Numeric(String),

    /// An exact oracle was asked to run beyond its size budget.
    #[error("budget exceeded: {what} needs n <= {limit}, got n = {n}")]
    Budget { what: &'static str, limit: usize, n: usize },
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn input(msg: impl Into<String>) -> Error {
    Error::Input(msg.into())
}

pub(crate) fn inapplicable(msg: impl Into<String>) -> Error {
    Error::Inapplicable(msg.into())
}
