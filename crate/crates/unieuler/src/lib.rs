//! Text formats, command-line interface and cross-validation harness for
//! [`unieuler_core`].

pub mod cli;
pub mod crosscheck;
pub mod report;
pub mod text;
