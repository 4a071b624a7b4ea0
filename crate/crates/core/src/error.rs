//! Crate-wide error type.

use std::fmt;
use std::io;

/// Errors produced by sequence evaluation, exact linear algebra, the matrix
/// family closed forms, and the OEIS catalog.
#[derive(Debug)]
pub enum Error {
    /// A parameter violated an operation's precondition.
    InvalidParameter(String),
    /// A matrix exceeded a hard size cap (cofactor expansion is capped).
    SizeLimit { limit: usize, got: usize },
    /// Vector/matrix dimensions do not agree.
    DimensionMismatch { expected: usize, got: usize },
    /// The matrix has no inverse.
    Singular,
    /// An internal exactness guarantee failed: a division that must be exact
    /// left a remainder, or a coefficient that must be integral was not.
    /// This signals a formula transcription bug, never valid output.
    Inconsistency(String),
    /// An OEIS accession did not match the `A` + six digits pattern.
    BadAccession(String),
    /// A b-file could not be parsed; `line` is 1-based.
    BfileParse { line: usize, msg: String },
    /// Network access is disabled and the requested data is not cached.
    Offline(String),
    /// The remote server reported the accession unknown.
    NotFound(String),
    /// Any other transport failure.
    Http(String),
    Io(io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::InvalidParameter(msg) => write!(f, "invalid parameter: {msg}"),
            Error::SizeLimit { limit, got } => {
                write!(f, "matrix order {got} exceeds the limit of {limit}")
            }
            Error::DimensionMismatch { expected, got } => {
                write!(f, "dimension mismatch: expected {expected}, got {got}")
            }
            Error::Singular => write!(f, "matrix is singular"),
            Error::Inconsistency(msg) => write!(f, "internal consistency error: {msg}"),
            Error::BadAccession(acc) => {
                write!(f, "invalid OEIS accession {acc:?}: expected 'A' followed by six digits")
            }
            Error::BfileParse { line, msg } => write!(f, "b-file parse error at line {line}: {msg}"),
            Error::Offline(msg) => write!(f, "offline: {msg}"),
            Error::NotFound(acc) => write!(f, "sequence {acc} not found"),
            Error::Http(msg) => write!(f, "http error: {msg}"),
            Error::Io(err) => write!(f, "io error: {err}"),
        }
    }
}

impl std::error::Error for Error {
    fn source(&self) -> Option<&(dyn std::error::Error + 'static)> {
        match self {
            Error::Io(err) => Some(err),
            _ => None,
        }
    }
}

impl From<io::Error> for Error {
    fn from(err: io::Error) -> Self {
        Error::Io(err)
    }
}
