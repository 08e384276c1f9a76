use thiserror::Error;

/// Errors produced by construction and search routines.
#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid field modulus {0}: must be a prime in [2, 65536)")]
    InvalidPrime(u64),

    #[error("non-invertible element")]
    NonInvertible,

    #[error("gcd undefined: both polynomials are zero")]
    GcdUndefined,

    #[error("block length must be positive")]
    NonPositiveLength,

    #[error("group too large: closure exceeds cap of {cap} elements")]
    GroupTooLarge { cap: usize },

    #[error("invalid group: {0}")]
    InvalidGroup(String),

    #[error("parse error at offset {offset}: {message}")]
    Parse { offset: usize, message: String },

    #[error("elements belong to different groups")]
    MismatchedGroups,

    #[error("operands belong to different fields")]
    MismatchedFields,

    #[error("dimension mismatch: {0}")]
    Dimension(String),

    #[error("blocks do not commute")]
    BlocksDontCommute,

    #[error(
        "budget exceeded: enumeration needs {needed} vectors (kernel dimension {dim}), budget is {budget}"
    )]
    BudgetExceeded { dim: usize, needed: u128, budget: u64 },

    #[error("classification requires group provenance")]
    ClassificationRequiresGroup,

    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("spec error at line {line}: {message}")]
    Spec { line: usize, message: String },

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl Error {
    pub(crate) fn parse(offset: usize, message: impl Into<String>) -> Self {
        Error::Parse { offset, message: message.into() }
    }

    pub(crate) fn spec(line: usize, message: impl Into<String>) -> Self {
        Error::Spec { line, message: message.into() }
    }

    /// True for errors caused by malformed user input rather than resource limits.
    pub fn is_input_error(&self) -> bool {
        !matches!(self, Error::BudgetExceeded { .. })
    }
}

pub type Result<T> = std::result::Result<T, Error>;
