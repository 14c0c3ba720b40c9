//! File formats and the command-line front end for `realreg-core`.

pub mod cli;
pub mod format;

pub use cli::{run, CommandResult};
