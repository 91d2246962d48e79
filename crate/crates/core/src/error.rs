use thiserror::Error;

use crate::exponent::Exponent;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("invalid exponent {0}: must be 1, inf, or a finite value > 1")]
    InvalidExponent(String),

    #[error("matrix must have at least one row and one column")]
    EmptyMatrix,

    #[error("expected {expected} entries for a {rows}x{cols} matrix, got {got}")]
    ShapeMismatch {
        rows: usize,
        cols: usize,
        expected: usize,
        got: usize,
    },

    #[error("row {row} has {got} entries, expected {expected}")]
    RaggedRow {
        row: usize,
        expected: usize,
        got: usize,
    },

    #[error("entry ({row}, {col}) = {value} is negative or not finite")]
    InvalidEntry { row: usize, col: usize, value: f64 },

    #[error("entry ({row}, {col}) is non-zero beyond column support {support}")]
    ColSupportViolation {
        row: usize,
        col: usize,
        support: usize,
    },

    #[error("column support must be in 1..={cols}, got {support}")]
    InvalidColSupport { support: usize, cols: usize },

    #[error("vector entry {index} = {value} is negative or not finite")]
    InvalidVectorEntry { index: usize, value: f64 },

    #[error("this formula needs 1 < p < inf, got p = {0}")]
    RequiresFiniteExponent(Exponent),

    #[error("row set must not be empty")]
    EmptyRowSet,

    #[error("row index {index} out of range for {rows} rows")]
    RowOutOfRange { index: usize, rows: usize },

    #[error("size must be at least {min}, got {got}")]
    SizeTooSmall { min: usize, got: usize },

    #[error("tolerance out of range: {0}")]
    InvalidTolerance(String),

    #[error("vector length {got} does not match {expected} matrix columns")]
    LengthMismatch { expected: usize, got: usize },
}

pub type Result<T> = std::result::Result<T, Error>;
