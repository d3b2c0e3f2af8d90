use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("label {label} is outside 1..={n}")]
    LabelOutOfRange { label: u32, n: u32 },

    #[error("label {0} is used more than once")]
    DuplicateLabel(u32),

    #[error("column label 1 would have no cells")]
    ColumnOne,

    #[error("row and column labels do not cover 1..={0}")]
    IncompleteLabels(u32),

    #[error("filling does not match the shape: {0}")]
    FillMismatch(String),

    #[error("not a permutation: {0}")]
    NotAPermutation(String),

    #[error("not a symmetric permutation")]
    NotSymmetric,

    #[error("{map} is not defined on {word:?}")]
    OutOfDomain { map: &'static str, word: Vec<u32> },

    #[error("invalid tableau: {0}")]
    InvalidTableau(String),

    #[error("series division needs a unit constant term")]
    NonUnitDivisor,

    #[error("{claim} needs n >= {min}")]
    RangeTooSmall { claim: &'static str, min: u32 },

    #[error("malformed input: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl From<serde_json::Error> for Error {
    fn from(e: serde_json::Error) -> Self {
        Error::Parse(e.to_string())
    }
}
