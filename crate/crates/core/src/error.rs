use thiserror::Error;

/// Failures reported by the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("not a lattice word: the prefix of length {position} breaks the lattice property")]
    NotLatticeWord { position: usize },
    #[error("index {index} out of range 0..={len}")]
    IndexOutOfRange { index: usize, len: usize },
    #[error("size {size} exceeds the configured bound {limit}")]
    SizeLimitExceeded { size: usize, limit: usize },
    #[error("word is not Richardson")]
    NotRichardson,
    #[error("empty word")]
    EmptyWord,
    #[error("word is not prime")]
    NotPrime,
    #[error("largest letter {ell} is too small (need at least 2)")]
    LargestLetterTooSmall { ell: usize },
    #[error("largest letter {found} does not match the expected {expected}")]
    LetterMismatch { expected: usize, found: usize },
    #[error("invalid Lehmer code entry at position {position}")]
    InvalidCode { position: usize },
    #[error("size mismatch: {left} vs {right}")]
    SizeMismatch { left: usize, right: usize },
    #[error("permutations are not comparable in Bruhat order")]
    NotComparable,
    #[error("element {element} outside [1, {n}]")]
    ElementOutOfRange { element: usize, n: usize },
    #[error("entry {entry} outside [1, {max}]")]
    EntryOutOfRange { entry: usize, max: usize },
    #[error("tableau is not hook-shaped")]
    NotHookShape,
    #[error("invalid partition: {0}")]
    InvalidPartition(String),
    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),
    #[error("invalid standard tableau: {0}")]
    InvalidTableau(String),
    #[error("invalid Guemes tableau: {0}")]
    InvalidGuemes(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("internal inconsistency: {0}")]
    Inconsistent(String),
}

impl Error {
    /// Stable variant name, used by the command-line front end.
    pub fn name(&self) -> &'static str {
        match self {
            Error::NotLatticeWord { .. } => "NotLatticeWord",
            Error::IndexOutOfRange { .. } => "IndexOutOfRange",
            Error::SizeLimitExceeded { .. } => "SizeLimitExceeded",
            Error::NotRichardson => "NotRichardson",
            Error::EmptyWord => "EmptyWord",
            Error::NotPrime => "NotPrime",
            Error::LargestLetterTooSmall { .. } => "LargestLetterTooSmall",
            Error::LetterMismatch { .. } => "LetterMismatch",
            Error::InvalidCode { .. } => "InvalidCode",
            Error::SizeMismatch { .. } => "SizeMismatch",
            Error::NotComparable => "NotComparable",
            Error::ElementOutOfRange { .. } => "ElementOutOfRange",
            Error::EntryOutOfRange { .. } => "EntryOutOfRange",
            Error::NotHookShape => "NotHookShape",
            Error::InvalidPartition(_) => "InvalidPartition",
            Error::InvalidPermutation(_) => "InvalidPermutation",
            Error::InvalidTableau(_) => "InvalidTableau",
            Error::InvalidGuemes(_) => "InvalidGuemes",
            Error::Parse(_) => "ParseError",
            Error::Inconsistent(_) => "Inconsistent",
        }
    }

    /// True for failures that indicate a bug rather than bad input.
    pub fn is_internal(&self) -> bool {
        matches!(self, Error::Inconsistent(_))
    }
}

pub type Result<T> = std::result::Result<T, Error>;
