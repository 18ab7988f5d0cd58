use thiserror::Error;

#[derive(Debug, Error)]
pub enum PencilError {
    #[error("invalid form: {0}")]
    InvalidForm(String),
    #[error("pencil is not generic: {0}")]
    NotGeneric(String),
    #[error("invariant violation: {0}")]
    InvariantViolation(String),
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error("bad input: {0}")]
    BadInput(String),
}
