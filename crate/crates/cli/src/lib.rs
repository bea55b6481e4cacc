//! Library side of the `lcplie` binary, exposed so tests can drive the
//! commands in-process.

pub mod commands;
pub mod document;
pub mod format;
pub mod model;

pub use commands::{run, run_from, Cli, Outcome};
