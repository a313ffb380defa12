//! Parser, configuration and reporting layer of the `expoweyl` command-line tool.

mod commands;
pub mod config;
pub mod error;
pub mod parse;
pub mod report;

pub use commands::run;
pub use config::{Session, SessionConfig};
pub use error::{CliError, ErrorKind};
pub use parse::{parse, parse_element, print_canonical};
