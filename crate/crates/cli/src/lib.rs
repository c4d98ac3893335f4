//! File formats, parallel drivers, subcommands and verification suites on top
//! of `weilzeta-core`. The `weilzeta` binary is a thin clap front end.

pub mod commands;
pub mod error;
pub mod io;
pub mod parallel;
pub mod suites;

pub use error::{exit, CliError};
