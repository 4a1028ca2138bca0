//! Expression language behind the `mtc` binary, exposed as a library so
//! the parser and evaluator can be tested directly.

pub mod expr;
