use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    /// A space descriptor violates one of its invariants.
    #[error("cannot construct space: {0}")]
    Construction(String),

    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    /// Malformed numeric input (negative moduli, NaN, empty families, ...).
    #[error("invalid input: {0}")]
    InvalidInput(String),

    /// An objective handed to the optimizer returned NaN or a negative value.
    #[error("objective error: {0}")]
    Objective(String),

    #[error("precondition failed: {0}")]
    Precondition(String),

    /// The brute-force oracle refuses dimensions where the grid explodes.
    #[error("refused: {0}")]
    Refused(String),

    #[error("parse error: {0}")]
    Parse(String),
}

pub(crate) fn check_dim(expected: usize, found: usize) -> Result<()> {
    if expected == found {
        Ok(())
    } else {
        Err(Error::DimensionMismatch { expected, found })
    }
}
