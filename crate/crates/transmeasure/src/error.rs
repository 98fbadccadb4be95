use thiserror::Error;

/// Crate-wide error type.
///
/// `InconclusivePrecision` is special: it means a comparison or a width target
/// could not be decided even at the configured maximum working precision. It is
/// never a silent approximation; callers either escalate or surface it.
#[derive(Debug, Error)]
pub enum Error {
    #[error("inconclusive at maximum working precision ({max_bits} bits): {context}")]
    InconclusivePrecision { context: String, max_bits: u32 },

    #[error("unknown constant `{0}`")]
    UnknownConstant(String),

    #[error("the zero polynomial is not a valid input here")]
    ZeroPolynomial,

    #[error("polynomial {0} is reducible over the rationals")]
    Reducible(String),

    #[error("invalid instance: {0}")]
    InvalidInstance(String),

    #[error("floor of [{lo}, {hi}] straddles an integer at maximum precision")]
    UndecidableFloor { lo: String, hi: String },

    #[error("recorded parameter check failed: {0}")]
    CheckFailed(String),

    #[error("search space of {size} candidates exceeds the cap of {cap}")]
    CapExceeded { size: u128, cap: u128 },

    #[error("non-integer coefficient after denominator clearing: {0}")]
    IntegralityViolation(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    /// Process exit code the CLI maps this error to.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::InconclusivePrecision { .. } | Error::UndecidableFloor { .. } => 3,
            Error::CheckFailed(_) => 1,
            _ => 2,
        }
    }
}
