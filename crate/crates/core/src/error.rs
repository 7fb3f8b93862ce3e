use std::fmt;

use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

/// A syntax error in one of the text input formats.
///
/// `position` is the 1-based character column of the offending character.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseError {
    pub position: usize,
    pub message: String,
}

impl ParseError {
    pub fn new(position: usize, message: impl Into<String>) -> Self {
        Self {
            position,
            message: message.into(),
        }
    }
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "at position {}: {}", self.position, self.message)
    }
}

impl std::error::Error for ParseError {}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("domain error: {0}")]
    Domain(String),
    #[error("inconsistent input: {0}")]
    Inconsistent(String),
    #[error("underdetermined: {0}")]
    Underdetermined(String),
    #[error("no real pair: radicand {0} is negative")]
    NoRealPair(String),
    #[error("no rational pair: radicand {0} is not a rational square")]
    NotRationalPair(String),
    #[error("unsupported form: {0}")]
    UnsupportedForm(String),
    #[error("invalid solution: {0}")]
    InvalidSolution(String),
    #[error("not unit-scalable: interpolator {0} is not a positive perfect square")]
    NotUnitScalable(String),
    #[error("invalid seed: {0}")]
    InvalidSeed(String),
    #[error("parse error {0}")]
    Parse(#[from] ParseError),
}

impl Error {
    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }
}
