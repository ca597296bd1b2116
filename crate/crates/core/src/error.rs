use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgebraError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("{dividend} is not divisible by {divisor}")]
    NotDivisible { dividend: String, divisor: String },
    #[error("pole at q = {at}")]
    Pole { at: String },
    #[error("operation is undefined for the zero polynomial")]
    ZeroPolynomial,
    #[error("cannot parse {what}: {detail}")]
    Parse { what: &'static str, detail: String },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TreeError {
    #[error("malformed tree description {input:?}: {reason}")]
    Malformed { input: String, reason: String },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SeriesError {
    #[error("truncation orders differ ({left} vs {right})")]
    OrderMismatch { left: usize, right: usize },
    #[error("coefficient ring mismatch: expected {expected}, found {found}")]
    RingMismatch { expected: String, found: String },
    #[error("tree of size {size} exceeds the series order {order}")]
    BeyondOrder { size: usize, order: usize },
    #[error("malformed series document: {0}")]
    Format(String),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error(transparent)]
    Tree(#[from] TreeError),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum VerifyError {
    #[error("tree of size {size} exceeds the brute-force bound {bound}")]
    BoundExceeded { size: usize, bound: usize },
    #[error("{0}")]
    InvalidParameter(String),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error(transparent)]
    Series(#[from] SeriesError),
}
