use cedga_coeff::CoeffError;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgebraError {
    #[error("generator `{0}` has no differential assigned")]
    IncompletePresentation(String),
    #[error("name `{0}` is already declared")]
    DuplicateName(String),
    #[error("`{0}` is not a valid identifier")]
    BadName(String),
    #[error("unknown idempotent `{0}`")]
    UnknownIdempotent(String),
    #[error("unknown generator `{0}`")]
    UnknownGenerator(String),
    #[error("differential of `{0}` assigned twice")]
    DuplicateDifferential(String),
    #[error("word `{0}` is not composable")]
    NotComposable(String),
    #[error(transparent)]
    Coeff(#[from] CoeffError),
}
