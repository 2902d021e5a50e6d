// SPDX-License-Identifier: Apache-2.0

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    /// An argument outside the operation's domain.
    #[error("domain error: {0}")]
    Domain(String),

    #[error("parse error: {0}")]
    Parse(String),

    /// Input rejected by a structural check (ring axioms, grading, form).
    #[error("validation failed: {0}")]
    Validation(String),

    #[error("not quadratic: {0}")]
    NotQuadratic(String),

    /// Integrality fails for a grading element.
    #[error("superalgebra or invalid extension: {0}")]
    NotIntegral(String),

    /// Derived data contradicts an identity that must hold for consistent input.
    #[error("inconsistent data: {0}")]
    Inconsistent(String),

    #[error("unsupported: {0}")]
    Unsupported(String),

    #[error("I/O error: {0}")]
    Io(#[from] std::io::Error),

    #[error("JSON error: {0}")]
    Json(#[from] serde_json::Error),
}

impl Error {
    /// Whether the error comes from reading or decoding input rather than
    /// from a mathematical check.
    pub fn is_input_error(&self) -> bool {
        matches!(self, Error::Parse(_) | Error::Io(_) | Error::Json(_))
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
