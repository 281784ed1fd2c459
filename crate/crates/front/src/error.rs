use std::path::PathBuf;

use vortex_front_core::Error as CoreError;

/// Errors of the solver, file formats and command line.
#[derive(Debug, thiserror::Error)]
pub enum FrontError {
    #[error(transparent)]
    Core(#[from] CoreError),
    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
    #[error("field file line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("invalid grid: {0}")]
    Grid(String),
    #[error("{0}")]
    Invalid(String),
}

impl FrontError {
    pub fn io(path: impl Into<PathBuf>, source: std::io::Error) -> Self {
        FrontError::Io {
            path: path.into(),
            source,
        }
    }

    /// Process exit code: 2 validation, 3 regime refusal, 4 I/O.
    pub fn exit_code(&self) -> i32 {
        match self {
            FrontError::Core(CoreError::Regime { .. }) => 3,
            FrontError::Io { .. } => 4,
            _ => 2,
        }
    }
}

pub type Result<T> = std::result::Result<T, FrontError>;
