use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("invalid dimension: {0}")]
    InvalidDimension(String),

    #[error("dimension mismatch: expected length {expected}, got {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("singular shifted core at index {index} (pivot {pivot:e})")]
    SingularShift { index: usize, pivot: f64 },

    #[error("singular matrix: {0}")]
    Singular(String),

    #[error("matrix of order {n} exceeds the dense limit of {limit}")]
    TooLarge { n: usize, limit: usize },

    #[error("empty parameter grid")]
    EmptyGrid,

    #[error("invalid configuration: {0}")]
    InvalidConfig(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn check_len(expected: usize, found: usize) -> Result<()> {
    if expected == found {
        Ok(())
    } else {
        Err(Error::DimensionMismatch { expected, found })
    }
}
