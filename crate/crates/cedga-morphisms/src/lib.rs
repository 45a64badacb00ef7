//! Maps between presentations: chain-map verification, augmentations,
//! partial linearization and the word-length parity obstruction to
//! extending a map from a link to a filling.

mod augmentation;
mod error;
mod linearize;
mod map;
mod obstruct;

pub use augmentation::{verify_augmentation, AugVerdict, Augmentation};
pub use error::MorphismError;
pub use linearize::partial_linearize;
pub use map::{compose, extend_map, identity, validate_map, verify_chain_map, ChainMapReport, DgMap, GeneratorCheck};
pub use obstruct::{obstruct_y_filling, Candidate, Inconclusive, Obstructed, Obstruction};
