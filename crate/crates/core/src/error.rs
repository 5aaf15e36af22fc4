use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("q must be a rational strictly between 0 and 1, got {0}")]
    InvalidQ(String),

    #[error("precision must be at least {min} decimal digits, got {got}")]
    PrecisionTooLow { got: u32, min: u32 },

    #[error("inexact Laurent polynomial division: {dividend} / {divisor}")]
    InexactDivision { dividend: String, divisor: String },

    #[error("radicand {radicand} is negative for A^{j}_{k} on tableau {tableau}")]
    NegativeRadicand {
        k: usize,
        j: usize,
        tableau: String,
        radicand: String,
    },

    #[error("representation dimension {dim} exceeds cap {cap}")]
    DimensionCap { dim: usize, cap: usize },

    #[error("invalid highest weight: {0}")]
    InvalidWeight(String),

    #[error("invalid tableau: {0}")]
    InvalidTableau(String),

    #[error("degree mismatch: {0}")]
    DegreeMismatch(String),

    #[error("no pair of adjacent-transposition chains exists for ell = {ell}")]
    ChainSearchExhausted { ell: usize },

    #[error("telescoping system is inconsistent for ell = {ell}")]
    InconsistentSystem { ell: usize },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}
