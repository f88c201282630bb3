use thiserror::Error;

/// Errors raised by the toolkit. Mathematical outcomes (a word not being
/// divisible, an audit violation) are never reported through this type.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("alphabet size must be at least 1")]
    EmptyAlphabet,
    #[error("letter {letter} is outside the alphabet 1..={size}")]
    LetterOutOfRange { letter: u32, size: u32 },
    #[error("alphabet mismatch: {left} letters vs {right} letters")]
    AlphabetMismatch { left: u32, right: u32 },
    #[error("operation requires a nonempty word")]
    EmptyWord,
    #[error("word {0} is not primitive")]
    NotPrimitive(String),
    #[error("cannot parse word: {0}")]
    Parse(String),
    #[error("word of length {len} is shorter than the requested order {order}")]
    WordTooShort { len: usize, order: usize },
    #[error("cycle enumeration exceeded the cap of {cap} cycles")]
    CycleCapExceeded { cap: usize },
    #[error("antichain search exceeded the cap of {cap} nodes")]
    SearchCapExceeded { cap: u64 },
    #[error("invalid parameter: {0}")]
    Domain(String),
    #[error("period length must be even for pair encoding, got {0}")]
    OddPeriod(usize),
    #[error("pairing is not a partition into adjacent positions: {0}")]
    NonAdjacentPairing(String),
    #[error("representatives and coloring do not match: {0}")]
    ColoringMismatch(String),
    #[error("invalid family: {0}")]
    InvalidFamily(String),
}

pub type Result<T> = std::result::Result<T, Error>;
