//! Holds the `acceptance` test target, which runs after every other crate's
//! tests and prints one line per acceptance criterion.
