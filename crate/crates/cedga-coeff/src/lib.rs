//! Exact coefficient arithmetic.
//!
//! Three rings are supported: the rationals, the field with two elements and
//! Laurent polynomials over the rationals in named commuting parameters.
//! Values carry their ring, so mixing rings is detected rather than coerced.

mod coeff;
mod error;
mod laurent;
mod parse;
mod ring;

pub use coeff::Coeff;
pub use error::CoeffError;
pub use laurent::Laurent;
pub use ring::{is_identifier, CoeffRing};

pub use num_bigint::BigInt;
pub use num_rational::BigRational;
