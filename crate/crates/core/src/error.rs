use alloc::string::String;

/// Errors raised by the algebraic core.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("invalid permutation window: {0}")]
    InvalidPermutation(String),
    #[error("permutations live in different symmetric groups (S_{0} vs S_{1})")]
    SizeMismatch(usize, usize),
    #[error("invalid flag type: {0}")]
    InvalidFlag(String),
    #[error("index {index} out of range 1..={max}")]
    IndexOutOfRange { index: usize, max: usize },
    #[error("permutation {0} is not a minimal coset representative")]
    NotMinimalCosetRep(String),
    #[error("matrix is {rows}x{cols}, expected a square matrix")]
    NotSquare { rows: usize, cols: usize },
    #[error("zero polynomial is not allowed here")]
    ZeroPolynomial,
    #[error("determinant vanishes identically")]
    ZeroDeterminant,
    #[error("polynomial already contains the homogenizing variable")]
    AlreadyHomogenized,
    #[error("invalid block specification: {0}")]
    InvalidBlockSpec(String),
    #[error("the Upsilon set is empty, no anti-diagonal submatrix exists")]
    EmptyUpsilon,
    #[error("invalid Plucker index: {0}")]
    InvalidPlucker(String),
    #[error("invalid Monte Carlo configuration: {0}")]
    InvalidConfig(String),
    #[error("missing value for variable {0} in a numeric assignment")]
    MissingValue(String),
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = core::result::Result<T, Error>;
