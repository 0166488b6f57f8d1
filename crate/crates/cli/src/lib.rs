//! Front end for `resum-core`: reference tables, figure data, ad-hoc
//! resummation of coefficient files.

pub mod cli;
pub mod coeffile;
pub mod commands;
pub mod config;
pub mod error;
pub mod output;
pub mod reference;

pub use cli::{run, Cli};
pub use error::{CliError, CliResult};
