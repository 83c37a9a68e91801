use thiserror::Error;

/// Errors raised by the algebra engine, the checkers and the parsers.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("scalar field mismatch: {0}")]
    FieldMismatch(String),
    #[error("zero input: {0}")]
    Zero(String),
    #[error("{0} not invertible")]
    NotInvertible(String),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("invalid character: {0}")]
    InvalidCharacter(String),
    #[error("not grouplike: {0}")]
    NotGrouplike(String),
    #[error("invalid automorphism: {0}")]
    InvalidAutomorphism(String),
    #[error("precondition failed: {0}")]
    Precondition(String),
    #[error("algebra is not a verified Hopf algebra")]
    NotHopf,
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error("unknown generator `{0}`")]
    UnknownGenerator(String),
    #[error("syntax error at {line}:{column}: {message}")]
    Syntax {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("{path} {message}")]
    Schema { path: String, message: String },
    #[error("internal invariant violated: {0}")]
    Invariant(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
