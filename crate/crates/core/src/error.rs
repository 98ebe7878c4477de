//! Error type shared by all pipeline stages.

use thiserror::Error;

/// Errors produced by the curve-topology operations.
#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum Error {
    /// An argument violated a precondition (zero polynomial, non-square-free
    /// input to a routine that demands square-freeness, ...).
    #[error("invalid input: {0}")]
    InvalidInput(String),

    /// The two defining polynomials share a non-constant factor, so the
    /// "curve" contains a whole surface component.
    #[error("defining polynomials share a common component")]
    CommonComponent,

    /// The curve contains a vertical line x = x0, so a fiber is not finite.
    #[error("curve contains the vertical line x = {0}")]
    VerticalLine(String),

    /// A curve is not in generic position for the requested operation.
    #[error("not in generic position: {0}")]
    NotGeneric(String),

    /// A bounded candidate search (shear parameters, specialization points)
    /// exhausted its budget.
    #[error("search failed: {0}")]
    SearchFailed(String),

    /// The leading coefficient interval of an interval polynomial straddles
    /// zero and the true degree cannot be recovered by trimming.
    #[error("interval polynomial degree is ambiguous")]
    DegreeAmbiguous,

    /// A specialized bivariate system has a positive-dimensional solution set.
    #[error("specialized system is not zero-dimensional at x = {0}")]
    NotZeroDimensional(String),

    /// Candidate certification could not be resolved within the refinement
    /// budget; the message names the offending fiber.
    #[error("certification failed: {0}")]
    CertificationFailed(String),

    /// Text input could not be parsed.
    #[error("parse error at line {line}, column {col}: {msg}")]
    Parse { line: usize, col: usize, msg: String },

    /// An internal invariant was violated; indicates a bug, not bad input.
    #[error("internal error: {0}")]
    Internal(String),
}

/// Convenience alias used across the crate.
pub type Result<T> = std::result::Result<T, Error>;
