//! Command-line front end: expression parsing, suite running and report formats.

pub mod cli;
pub mod expr;
pub mod report;
pub mod runner;
