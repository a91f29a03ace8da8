//! Command-line front end and file formats for `qdiscover`.
//!
//! [`commands`] holds one function per subcommand, each returning a
//! [`commands::CommandResult`]; [`json`] holds the JSON schemas for series,
//! products and residue patterns.

pub mod commands;
pub mod json;

pub use commands::{CommandResult, Status};
