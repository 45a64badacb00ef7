use cedga_algebra::AlgebraError;
use cedga_analysis::AnalysisError;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MorphismError {
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error(transparent)]
    Analysis(#[from] AnalysisError),
    #[error("map `{map}` assigns no image to `{name}`")]
    Unassigned { map: String, name: String },
    #[error("map `{map}` is malformed: {reason}")]
    InvalidMap { map: String, reason: String },
    #[error("augmentation `{aug}`: {reason}")]
    InvalidAugmentation { aug: String, reason: String },
    #[error("augmentation `{aug}` does not verify at `{generator}`")]
    UnverifiedAugmentation { aug: String, generator: String },
    #[error("unsupported codomain: {0}")]
    UnsupportedCodomain(String),
}
