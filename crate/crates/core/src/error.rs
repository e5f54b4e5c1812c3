use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("empty input")]
    EmptyInput,
    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),
    #[error("invalid composition: {0}")]
    InvalidComposition(String),
    #[error("size mismatch: {0} vs {1}")]
    SizeMismatch(usize, usize),
    #[error("{0} is not a cycloribbon")]
    NotCycloribbon(String),
    #[error("{0} is not an anticycloribbon")]
    NotAnticycloribbon(String),
    #[error("index {index} out of range 1..{bound}")]
    OutOfRange { index: usize, bound: usize },
    #[error("{lo} is not below {hi} in the left weak order")]
    NotInWeakOrder { lo: String, hi: String },
    #[error("parameters must be pairwise distinct")]
    RepeatedParameter,
    #[error("block dimension {dim} exceeds the guard {guard}")]
    GuardExceeded { dim: usize, guard: usize },
    #[error("parse error: {0}")]
    Parse(String),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("arithmetic overflow in integer fast path")]
    Overflow,
}

pub type Result<T> = std::result::Result<T, Error>;
