//! Crate-wide error type.

use thiserror::Error;

/// Errors produced anywhere in the crate.
#[derive(Debug, Error)]
pub enum Error {
    /// A value violated a documented precondition (out-of-range index,
    /// mismatched generator counts, a relator reducing to the empty word, ...).
    #[error("{0}")]
    InvalidInput(String),

    /// An operation that requires a connected complex was given one with
    /// more than one component.
    #[error("complex is not connected")]
    Disconnected,

    /// Coset enumeration needed more live cosets than the caller allowed.
    #[error("coset enumeration exceeded the limit of {limit} live cosets")]
    CosetLimitExceeded { limit: usize },

    /// The coinvariant quotient computed by the Schur-multiplier routine did
    /// not have the free rank theory guarantees; the input group is either
    /// infinite or the enumeration fed it inconsistent data.
    #[error("coinvariant quotient has free rank {found}, expected {expected}")]
    FreeRankMismatch { expected: usize, found: usize },

    /// An exhaustive routine was given an input beyond its documented bound.
    #[error("{0}")]
    InputTooLarge(String),

    /// Surface-syntax error with a source position.
    #[error("parse error at line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl Error {
    /// Stable machine-readable tag for each error kind, used by the CLI.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::InvalidInput(_) => "invalid_input",
            Error::Disconnected => "disconnected",
            Error::CosetLimitExceeded { .. } => "coset_limit_exceeded",
            Error::FreeRankMismatch { .. } => "free_rank_mismatch",
            Error::InputTooLarge(_) => "input_too_large",
            Error::Parse { .. } => "parse_error",
            Error::Io(_) => "io_error",
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn invalid(msg: impl Into<String>) -> Error {
    Error::InvalidInput(msg.into())
}
