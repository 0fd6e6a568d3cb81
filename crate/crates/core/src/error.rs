use std::io;

use thiserror::Error;

/// Errors raised while reading or validating any of the line formats.
///
/// Line numbers are 1-based. A line number of 0 means the error was raised
/// outside a file context (for instance by [`crate::corpus::parse_tagged_line`]
/// called directly).
#[derive(Debug, Error)]
pub enum Error {
    #[error("line {line}, column {column}: malformed token `{token}`: {reason}")]
    MalformedToken {
        line: usize,
        column: usize,
        token: String,
        reason: String,
    },

    #[error("lexicon line {line}: {reason}")]
    MalformedLexLine { line: usize, reason: String },

    #[error("duplicate lexicon entry for `{surface}`")]
    DuplicateEntry { surface: String },

    #[error("table line {line}: {reason}")]
    MalformedTableLine { line: usize, reason: String },

    #[error("table line {line}: duplicate key {key}")]
    DuplicateKey { line: usize, key: String },

    #[error("event line {line}: {reason}")]
    MalformedEventLine { line: usize, reason: String },

    #[error("label line {line}: {reason}")]
    MalformedLabelLine { line: usize, reason: String },

    #[error("query line {line}: {reason}")]
    MalformedQueryLine { line: usize, reason: String },

    #[error("invalid configuration: {0}")]
    InvalidConfig(String),

    #[error(transparent)]
    Io(#[from] io::Error),
}

impl Error {
    /// Attach a line number to a line-level error that was produced without one.
    pub fn at_line(self, n: usize) -> Self {
        match self {
            Error::MalformedToken {
                column,
                token,
                reason,
                ..
            } => Error::MalformedToken {
                line: n,
                column,
                token,
                reason,
            },
            other => other,
        }
    }

    /// True for errors caused by malformed input data rather than I/O.
    pub fn is_data_error(&self) -> bool {
        !matches!(self, Error::Io(_))
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
