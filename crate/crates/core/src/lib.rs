//! Operator norms `||A||_{l_p -> l_q}` of non-negative matrices, and their
//! restriction to non-negative non-increasing inputs.
//!
//! The crate provides closed forms for the boundary exponent cases, checkers
//! for the conditions under which the two norms coincide, explicit
//! norm-attaining inputs, an independent numerical oracle, and a gallery of
//! named matrices with scripted checks.
//!
//! ```
//! use monotone_norm::{closed_forms, Exponent, NonNegMatrix};
//!
//! let a = NonNegMatrix::from_rows(&[[2.0, 1.0], [0.0, 0.0]]).unwrap();
//! let v = closed_forms::norm_lp_linf(&a, Exponent::finite(2.0)).unwrap();
//! assert!((v - 5f64.sqrt()).abs() < 1e-15);
//! ```

pub mod cli;
pub mod closed_forms;
pub mod conditions;
pub mod error;
pub mod exponent;
pub mod extremizers;
pub mod gallery;
pub mod matrix;
pub mod oracle;
pub mod tolerance;
pub mod vector;
pub mod verify;

pub use closed_forms::{Exactness, NormCase, NormValue};
pub use conditions::{ConditionId, ConditionReport};
pub use error::{Error, Result};
pub use exponent::{Exponent, FiniteExponent};
pub use extremizers::Extremizer;
pub use matrix::NonNegMatrix;
pub use oracle::{Method, OracleConfig, OracleResult};
pub use tolerance::Tolerance;
