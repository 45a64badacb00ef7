//! The `.cedga` text format.
//!
//! ```text
//! ring Q
//! convention potential_plus
//! presentation main
//! idempotents e1
//! gen a deg -1 from e1 to e1 long
//! gen t0_12 deg 0 from e1 to e1 short t level 0
//! diff a = e1 - t0_12
//! diff t0_12 = 0
//! ```
//!
//! Words are written in product order, the rightmost factor acting first.
//! `1` stands for the sum of all idempotents.

mod bundle;
mod error;
mod lexer;
mod parser;
mod serialize;

pub use bundle::Bundle;
pub use error::ParseError;
pub use parser::{parse, parse_element, parse_with_context};
pub use serialize::serialize;
