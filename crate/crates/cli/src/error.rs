use std::path::PathBuf;

use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Input(String),

    /// `line` is 1-based; 0 means the whole file.
    #[error("{}", parse_location(path, *line, msg))]
    Parse { path: PathBuf, line: usize, msg: String },

    #[error("{context}: {source}")]
    Io {
        context: String,
        #[source]
        source: std::io::Error,
    },

    #[error(transparent)]
    Solver(#[from] resum_core::Error),
}

impl CliError {
    /// 1 for solver failures, 2 for bad input.
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Solver(resum_core::Error::Domain(_)) => 2,
            CliError::Solver(_) => 1,
            CliError::Input(_) | CliError::Parse { .. } | CliError::Io { .. } => 2,
        }
    }

    pub fn input(msg: impl Into<String>) -> Self {
        CliError::Input(msg.into())
    }
}

fn parse_location(path: &std::path::Path, line: usize, msg: &str) -> String {
    if line == 0 {
        format!("{}: {msg}", path.display())
    } else {
        format!("{}:{line}: {msg}", path.display())
    }
}

pub type CliResult<T> = Result<T, CliError>;
