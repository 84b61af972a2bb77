//! Front end for `cubic-lines-core`: input formats, JSON reports, the parallel
//! census driver and the `cubic-lines` command.

pub mod commands;
pub mod config;
pub mod error;
pub mod input;
pub mod parallel;
pub mod report;
pub mod sample;

pub use commands::{run, Outcome};
pub use config::{Cli, CommandKind, RunConfig};
pub use error::{exit, CliError};
