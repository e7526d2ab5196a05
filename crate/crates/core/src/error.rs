//! Crate-wide error type.

/// Errors produced by parsing, validation and the numerical checkers.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    /// Two objects that must share a dimension do not, or a value has the
    /// wrong size for its declared dimension.
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    /// A text input (code file, Pauli label, error-set spec, circuit) is
    /// malformed.  `line` is 1-based; it is 0 for single-line inputs.
    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },

    /// Structured input parsed but violates a semantic requirement, for
    /// example codewords that are not orthonormal.
    #[error("validation error: {0}")]
    Validation(String),

    /// A codeword or state collapsed to the zero vector.
    #[error("degenerate input: {0}")]
    DegenerateInput(String),

    /// The request exceeds a documented size guard.
    #[error("capacity exceeded: {0}")]
    Capacity(String),

    /// An argument is outside its documented range.
    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    /// An operation was called on inputs that fail its precondition.
    #[error("precondition not met: {0}")]
    Precondition(String),
}

pub type Result<T> = std::result::Result<T, Error>;
