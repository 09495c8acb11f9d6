//! Library surface of the `groupoids` command-line tool: the JSON
//! document schema, built-in examples, command logic, and report
//! rendering.  The binary in `main.rs` is a thin argument-parsing shell
//! over this crate so that integration tests can drive the commands
//! directly.

pub mod doc;
pub mod examples;
pub mod report;
pub mod run;
