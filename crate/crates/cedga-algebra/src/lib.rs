//! Free graded non-commutative algebras over a ring of idempotents.
//!
//! Products are written in the printed order: in `u·v` the right factor acts
//! first, so `source(u·v) = source(v)` and `target(u·v) = target(u)`.

mod differential;
mod element;
mod error;
mod presentation;
mod render;
mod validate;
mod word;

pub use differential::{apply_differential, differential_of_word};
pub use element::Element;
pub use error::AlgebraError;
pub use presentation::{Convention, GenId, Generator, IdemId, Presentation, Role};
pub use validate::{validate_presentation, ValidationReport, Violation};
pub use word::Word;

pub use cedga_coeff::{Coeff, CoeffRing};
