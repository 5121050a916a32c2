//! Library surface of the command-line driver: the problem-file parser and
//! the report schema, shared between the binary and the integration tests.

pub mod problem;
pub mod report;
