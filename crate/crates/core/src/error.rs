use thiserror::Error;

use crate::algebra::ValidationReport;

/// Errors raised while building or checking hypersymplectic data.
///
/// Variants fall in two tiers. Everything except [`Error::Internal`] means the
/// caller handed in data that is malformed or not affine-symplectic.
/// `Internal` means an identity that must hold for every valid input failed,
/// which is always a bug in this crate.
#[derive(Debug, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("dimension must be positive and even, got {0}")]
    OddDimension(usize),

    #[error("symplectic form is not antisymmetric at ({0}, {1})")]
    NotAntisymmetric(usize, usize),

    #[error("symplectic form is degenerate")]
    Degenerate,

    #[error("data is not affine-symplectic: {0}")]
    InvalidData(Box<ValidationReport>),

    #[error("{0}")]
    Input(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),

    #[error("internal error: {0}")]
    Internal(String),
}

impl Error {
    pub fn is_internal(&self) -> bool {
        matches!(self, Error::Internal(_))
    }

    pub(crate) fn internal(msg: impl Into<String>) -> Self {
        Error::Internal(msg.into())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
