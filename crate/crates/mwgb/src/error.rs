//! Crate-wide error type.

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("monomial quotient is undefined: divisor does not divide dividend")]
    NotDivisible,

    #[error("the zero polynomial has no leading term")]
    ZeroPolynomial,

    #[error("dimension mismatch in {what}: expected {expected}, found {found}")]
    DimensionMismatch {
        what: &'static str,
        expected: usize,
        found: usize,
    },

    #[error("enumeration is unbounded: the first row of weights is not positive")]
    UnboundedEnumeration,

    #[error("the first row of weights must be positive")]
    NonPositiveW1,

    #[error("the weight matrix must be non-negative for the variable substitution")]
    NegativeWeight,

    #[error("monomial {0} is not in the image of the variable substitution")]
    NotInImage(String),

    #[error("malformed step: {0}")]
    MalformedStep(String),

    #[error("generator {index} is not homogeneous for the given weights")]
    InhomogeneousInput { index: usize },

    #[error("no monomial exists at the requested degree {0}")]
    EmptyDegree(String),

    #[error("parse error at line {line}, column {col}: {msg}")]
    Parse {
        line: usize,
        col: usize,
        msg: String,
    },

    #[error("invalid input: {0}")]
    Validation(String),

    #[error(
        "basis verification mismatch: missing oracle leading monomials [{}], unexpected [{}]",
        missing.join(", "),
        extra.join(", ")
    )]
    VerifyMismatch {
        missing: Vec<String>,
        extra: Vec<String>,
    },
}

pub type Result<T> = std::result::Result<T, Error>;
