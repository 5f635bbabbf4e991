use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("matrix is singular")]
    Singular,
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimMismatch { expected: usize, found: usize },
    #[error("index {index} out of range for dimension {dim}")]
    IndexOutOfRange { index: usize, dim: usize },
    #[error("point must be nonzero")]
    ZeroPoint,
    #[error("unknown catalog entry `{0}`")]
    UnknownName(String),
    #[error("bad parameters: {0}")]
    BadParams(String),
    #[error("invalid rational `{0}`")]
    ParseRational(String),
    #[error("invalid algebra file: {0}")]
    Format(String),
    #[error("duplicate structure constant at ({0}, {1}, {2})")]
    DuplicateEntry(usize, usize, usize),
    #[error("algebra is not an evolution algebra in the given basis")]
    NotEvolution,
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn check_dim(expected: usize, found: usize) -> Result<()> {
    if expected == found {
        Ok(())
    } else {
        Err(Error::DimMismatch { expected, found })
    }
}
