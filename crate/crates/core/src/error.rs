use alloc::string::String;

/// Errors raised by the algebraic routines.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("pole: the reduced denominator vanishes under `{0}`")]
    Pole(String),
    #[error("no value assigned to variable `{0}`")]
    Unassigned(String),
    #[error("parse error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },
    #[error("index {index} out of range for rank {rank}")]
    IndexOutOfRange { index: usize, rank: usize },
    #[error("rank mismatch: {0} vs {1}")]
    RankMismatch(usize, usize),
    #[error("cell ({row},{col}) lies outside the diagram")]
    CellOutside { row: usize, col: usize },
    #[error("dimension {size} exceeds the size cap {cap}")]
    SizeCap { size: usize, cap: usize },
    #[error("element is not idempotent")]
    NotIdempotent,
    #[error("singular Gram matrix in degree {0}")]
    SingularGram(String),
    #[error("word length {len} exceeds the cap {cap}")]
    LengthCap { len: usize, cap: usize },
    #[error("invalid input: {0}")]
    Invalid(String),
}

pub type Result<T> = core::result::Result<T, Error>;
