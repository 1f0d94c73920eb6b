use std::path::PathBuf;

use thiserror::Error;

#[derive(Debug, Error)]
pub enum BenchError {
    #[error("{path}: line {line}: {msg}")]
    Parse {
        path: PathBuf,
        line: usize,
        msg: String,
    },

    #[error("invalid configuration: {0}")]
    Config(String),

    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        source: std::io::Error,
    },

    #[error("report: {0}")]
    Report(#[from] csv::Error),

    #[error(transparent)]
    Numerical(#[from] cscs_core::Error),

    #[error("{0}")]
    NotConverged(String),
}

impl BenchError {
    /// Process exit status: 2 for input problems, 3 for numerical failures.
    pub fn exit_code(&self) -> i32 {
        match self {
            BenchError::Numerical(cscs_core::Error::InvalidConfig(_))
            | BenchError::Numerical(cscs_core::Error::InvalidDimension(_))
            | BenchError::Numerical(cscs_core::Error::DimensionMismatch { .. })
            | BenchError::Numerical(cscs_core::Error::EmptyGrid) => 2,
            BenchError::Numerical(_) | BenchError::NotConverged(_) => 3,
            BenchError::Parse { .. }
            | BenchError::Config(_)
            | BenchError::Io { .. }
            | BenchError::Report(_) => 2,
        }
    }

    pub(crate) fn io(path: impl Into<PathBuf>, source: std::io::Error) -> Self {
        BenchError::Io {
            path: path.into(),
            source,
        }
    }
}
