use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("symbol {symbol} at position {position} is outside the alphabet of size {alphabet}")]
    SymbolOutOfRange {
        symbol: u32,
        position: usize,
        alphabet: u32,
    },
    #[error("character {ch:?} at position {position} is not in the alphabet of size {alphabet}")]
    Parse {
        ch: char,
        position: usize,
        alphabet: u32,
    },
    #[error("alphabet size must be between 1 and {max}, got {got}")]
    AlphabetSize { got: u32, max: u32 },
    #[error("operation `{0}` is defined for the binary alphabet only")]
    BinaryOnly(&'static str),
    #[error("operation `{0}` requires a nonempty word")]
    EmptyWord(&'static str),
    #[error("length mismatch: {left} vs {right}")]
    LengthMismatch { left: usize, right: usize },
    #[error("alphabet mismatch: {left} vs {right}")]
    AlphabetMismatch { left: u32, right: u32 },
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("arithmetic overflow in {0}")]
    Overflow(&'static str),
    #[error("request exceeds the resource budget: {0}")]
    Budget(String),
    #[error("not an antipalstar: no antipalindromic factor starts at position {position}")]
    NotAntipalstar { position: usize },
    #[error("precondition failed: {0}")]
    Precondition(String),
    #[error("pop on an empty history")]
    EmptyHistory,
    #[error("unknown predicate {0:?}")]
    UnknownPredicate(String),
}

pub type Result<T> = std::result::Result<T, Error>;
