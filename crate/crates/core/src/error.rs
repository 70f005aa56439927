use thiserror::Error;

/// Errors raised by word construction and the measures built on top of it.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("symbol {symbol:?} at position {position} is not in the alphabet")]
    UnknownSymbol { symbol: char, position: usize },

    #[error("letter {0:?} appears twice in the alphabet")]
    DuplicateLetter(char),

    #[error("alphabet must contain at least one letter")]
    EmptyAlphabet,

    #[error("alphabet has {0} letters, at most {max} are supported", max = u16::MAX)]
    AlphabetTooLarge(usize),

    #[error("letter index {index} is outside an alphabet of size {size}")]
    LetterOutOfRange { index: usize, size: usize },

    #[error("words are over different alphabets")]
    AlphabetMismatch,

    #[error("position {position} is outside the cuts 0..={len}")]
    PositionOutOfRange { position: usize, len: usize },

    #[error("letters {missing:?} do not occur in the word")]
    MissingLetters { missing: String },

    #[error("enumeration needs more than {budget} stored subwords")]
    BudgetExceeded { budget: usize },
}

impl Error {
    /// `true` for errors caused by resource limits rather than invalid input.
    pub fn is_resource(&self) -> bool {
        matches!(self, Error::BudgetExceeded { .. })
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
