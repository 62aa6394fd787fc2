use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,

    #[error("size mismatch: expected {expected}, found {found}")]
    SizeMismatch { expected: usize, found: usize },

    #[error("singular matrix (determinant {det})")]
    Singular { det: String },

    #[error("coefficient F_{index} has degree {degree} > {index}")]
    DegreeTooHigh { index: usize, degree: usize },

    #[error("operator has non-polynomial coefficients: {0}")]
    NotPolynomial(String),

    #[error("invalid weight: {0}")]
    InvalidWeight(String),

    #[error("integrability violated: {0}")]
    Integrability(String),

    #[error("kernel mismatch: {0}")]
    KernelMismatch(String),

    #[error("index {index} out of range (table built to {max})")]
    OutOfRange { index: usize, max: usize },

    #[error("sequence is not orthogonal: {0}")]
    NotOrthogonal(String),

    #[error("operator is not in D(W): {0}")]
    NotMember(String),

    #[error("invalid parameter: {0}")]
    InvalidParam(String),

    #[error("unknown catalog entry `{0}`")]
    UnknownEntry(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("schema error at {path}: {message}")]
    Schema { path: String, message: String },

    #[error("verification failed: {0}")]
    Verification(String),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}
