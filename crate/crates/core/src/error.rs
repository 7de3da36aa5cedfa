use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

/// Errors raised while loading data files or lemmatizing input.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid UTF-8 at byte offset {offset}")]
    Decode { offset: usize },

    #[error("empty word")]
    EmptyWord,

    #[error("stripping '{suffix}' from '{word}' leaves an empty stem")]
    EmptyStem { word: String, suffix: String },

    #[error("input is empty or whitespace-only")]
    EmptyInput,

    #[error("expected a single token, found whitespace inside '{0}'")]
    MultiToken(String),

    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("line {line}: surface '{surface}' maps to both '{first}' and '{second}'")]
    LexiconConflict {
        line: usize,
        surface: String,
        first: String,
        second: String,
    },

    #[error("line {line}: duplicate suffix '{suffix}' (first defined on line {first_line})")]
    DuplicateSuffix {
        line: usize,
        first_line: usize,
        suffix: String,
    },

    #[error("line {line}: {message}")]
    InvalidRule { line: usize, message: String },

    #[error("rule for suffix '{suffix}' does not apply to '{word}'")]
    RuleMismatch { suffix: String, word: String },

    #[error("gold set is empty")]
    EmptyGold,

    #[error("line {line}: gold word '{word}' expects both '{first}' and '{second}'")]
    GoldConflict {
        line: usize,
        word: String,
        first: String,
        second: String,
    },
}

impl Error {
    /// Line number in the source file, for errors raised by a loader.
    pub fn line(&self) -> Option<usize> {
        match self {
            Error::Parse { line, .. }
            | Error::LexiconConflict { line, .. }
            | Error::DuplicateSuffix { line, .. }
            | Error::InvalidRule { line, .. }
            | Error::GoldConflict { line, .. } => Some(*line),
            _ => None,
        }
    }
}
