//! Checks and computations on presentations: `∂² = 0`, grading, word-length
//! parity, bounded exactness search and degree-zero homology by rewriting.

mod bounds;
mod checks;
mod enumerate;
mod error;
mod exact;
mod h0;
mod linalg;

pub use bounds::{Bounds, Parity};
pub use checks::{check_d_squared, check_degree, check_parity_flip, DSquared, ParityReport};
pub use enumerate::search_space;
pub use error::AnalysisError;
pub use exact::{exactness_search, is_trivial, Exactness, SearchCertificate, Triviality};
pub use h0::{h0, H0Report, RewriteRule, RewriteSystem};
pub use linalg::SparseEliminator;
