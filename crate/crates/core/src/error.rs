use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid Cartan type: {0}")]
    InvalidCartanType(String),
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("not a reduced expression for the longest element: {0}")]
    NotLongestWord(String),
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error("inexact division computing the dual root vector of {root}")]
    InexactDivision { root: String },
    #[error("no bar-invariant correction exists: {0}")]
    NoCorrection(String),
    #[error("iteration bound exceeded: {0}")]
    IterationBound(String),
    #[error("resource budget exceeded: {0}")]
    Budget(String),
    #[error("weight mismatch: {0}")]
    WeightMismatch(String),
    #[error("height {0} too large for this computation")]
    HeightTooLarge(usize),
    #[error("cache I/O: {0}")]
    Io(#[from] std::io::Error),
    #[error("json: {0}")]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    /// A stable machine-readable name for the variant.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::InvalidCartanType(_) => "invalid_cartan_type",
            Error::Precondition(_) => "precondition",
            Error::NotLongestWord(_) => "not_longest_word",
            Error::Unsupported(_) => "unsupported",
            Error::InexactDivision { .. } => "inexact_division",
            Error::NoCorrection(_) => "no_correction",
            Error::IterationBound(_) => "iteration_bound",
            Error::Budget(_) => "budget",
            Error::WeightMismatch(_) => "weight_mismatch",
            Error::HeightTooLarge(_) => "height_too_large",
            Error::Io(_) => "io",
            Error::Json(_) => "json",
        }
    }
}
