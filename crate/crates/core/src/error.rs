use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid symbol {0:?}: words are strings over '0' and '1'")]
    InvalidSymbol(char),

    #[error("the empty word is not allowed here")]
    EmptyWord,

    #[error("empty pattern: every word would contain it")]
    EmptyPattern,

    #[error("word is not in the image of the Fibonacci morphism")]
    NotInImage,

    #[error("expected symbol {expected} at the {side} end of the word")]
    QuotientMismatch { expected: u8, side: &'static str },

    #[error("index {index} out of range: {what} requires {min} <= n <= {max}")]
    IndexOutOfRange {
        index: u32,
        min: u32,
        max: u32,
        what: &'static str,
    },

    #[error("arithmetic overflow while computing {0}")]
    Overflow(&'static str),

    #[error("max length {requested} exceeds the exhaustive enumeration budget of {budget}")]
    EnumerationBudget { requested: usize, budget: usize },

    #[error("matrix size must be at least 1 and at most {max}, got {size}")]
    MatrixSize { size: usize, max: usize },
}

pub type Result<T> = std::result::Result<T, Error>;
