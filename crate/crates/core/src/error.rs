use alloc::string::String;

/// Failures surfaced by the quadrature pipeline.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("invalid quadrature problem: {0}")]
    InvalidSpec(String),

    #[error("invalid precision configuration: {0}")]
    InvalidPrecision(String),

    #[error("precondition violated: {0}")]
    Precondition(String),

    /// The requested accuracy cannot be reached at the current working
    /// precision. Callers should raise the working bit count.
    #[error("precision exhausted: {0}")]
    PrecisionExhausted(String),

    #[error("expected {expected} roots of E_{degree} in (-1, 0), isolated {found}")]
    RootCountMismatch {
        degree: usize,
        expected: usize,
        found: usize,
    },

    #[error("linear system is singular at {bits} bits (pivot column {column})")]
    SingularSystem { column: usize, bits: usize },

    #[error("oracle solution and formula were computed for different problems")]
    SpecMismatch,

    #[error("oracle system of order {order} exceeds the dense-solve limit {limit}")]
    OracleTooLarge { order: usize, limit: usize },
}

pub type Result<T> = core::result::Result<T, Error>;
