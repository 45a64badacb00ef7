use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CoeffError {
    #[error("ring mismatch: {left} vs {right}")]
    RingMismatch { left: String, right: String },
    #[error("division by zero")]
    ZeroDivision,
    #[error("{0} is not a unit")]
    NotAUnit(String),
    #[error("invalid parameter list: {0}")]
    InvalidParameters(String),
    #[error("{value} cannot be represented in {ring}")]
    NotRepresentable { value: String, ring: String },
    #[error("coefficient syntax error at offset {offset}: {message}")]
    Syntax { offset: usize, message: String },
}
