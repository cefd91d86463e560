//! Crate-wide error type.

/// Errors surfaced by lattice, code, channel and analysis operations.
#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("non-finite input at coordinate {0}")]
    NonFiniteInput(usize),

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("generator matrix is singular or not full rank")]
    SingularGenerator,

    #[error("nesting violated: {0}")]
    NestingViolated(String),

    #[error("codebook size {size} exceeds enumeration cap {cap}")]
    EnumerationCapExceeded { size: u64, cap: u64 },

    #[error("codebook not materialized; only lattice decoding is available")]
    CodebookNotMaterialized,

    #[error("index {index} out of range for codebook of size {size}")]
    IndexOutOfRange { index: u64, size: u64 },

    #[error("estimator inconsistency: S_e,f = {sef} is below S_e = {se}")]
    EstimatorInconsistent { sef: f64, se: f64 },

    #[error("too few samples: need at least {needed}, got {got}")]
    TooFewSamples { needed: usize, got: usize },

    #[error("expected bin count {min:.2} below 5; coarsen the bins")]
    BinsTooFine { min: f64 },

    #[error("class imbalance: {0}")]
    ClassImbalance(String),

    #[error("config error: {0}")]
    Config(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn check_finite(x: &[f64]) -> Result<()> {
    match x.iter().position(|v| !v.is_finite()) {
        Some(i) => Err(Error::NonFiniteInput(i)),
        None => Ok(()),
    }
}

pub(crate) fn check_dim(expected: usize, got: usize) -> Result<()> {
    if expected == got {
        Ok(())
    } else {
        Err(Error::DimensionMismatch { expected, got })
    }
}
