use cedga_algebra::AlgebraError;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AnalysisError {
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error("target is not homogeneous")]
    NonHomogeneous,
    #[error("linear solving needs a field, got {0}")]
    NotAField(String),
    #[error("unsupported presentation: {0}")]
    Unsupported(String),
}
