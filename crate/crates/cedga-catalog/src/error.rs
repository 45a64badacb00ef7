use cedga_algebra::AlgebraError;
use cedga_dsl::ParseError;

#[derive(Debug, thiserror::Error)]
pub enum CatalogError {
    #[error("invalid family: {0}")]
    InvalidFamily(String),
    #[error("cannot combine presentations over {0} and {1}")]
    RingMismatch(String, String),
    #[error("idempotent matching is not a bijection: {0}")]
    BadMatching(String),
    #[error("unknown example `{0}`; try `cedga catalog --list`")]
    UnknownExample(String),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error("in catalog expression: {0}")]
    Parse(#[from] ParseError),
}
