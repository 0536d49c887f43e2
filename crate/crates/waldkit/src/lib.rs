//! IO companion for the `waldschmidt` crate: the ideal file format, report
//! rendering (human and JSON), and the `waldkit` command-line tool.

pub mod cli;
pub mod parse;
pub mod report;

pub use cli::{execute, Outcome};
pub use parse::{format_ideal, parse_ideal, ParseError};
pub use report::Report;
