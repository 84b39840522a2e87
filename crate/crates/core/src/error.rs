use thiserror::Error;

/// Errors produced by automaton construction, parsing and analysis.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },

    #[error("invalid automaton: {0}")]
    InvalidDfa(String),

    #[error("letter index {letter} out of range for an alphabet of size {k}")]
    LetterOutOfRange { letter: usize, k: usize },

    #[error("state index {state} out of range for {n} states")]
    StateOutOfRange { state: usize, n: usize },

    #[error("state set over {found} states used with an automaton of {expected} states")]
    UniverseMismatch { expected: usize, found: usize },

    #[error("size guard exceeded: {what} is {actual}, limit is {limit}")]
    GuardExceeded {
        what: &'static str,
        actual: u128,
        limit: u128,
    },

    #[error("hypothesis not satisfied: {0}")]
    Hypothesis(String),

    #[error("invalid search parameters: {0}")]
    InvalidParams(String),

    #[error("json: {0}")]
    Json(String),
}

impl Error {
    pub(crate) fn parse(line: usize, column: usize, message: impl Into<String>) -> Self {
        Error::Parse {
            line,
            column,
            message: message.into(),
        }
    }

    /// True for the size-guard family of errors, which callers usually
    /// report differently from malformed input.
    pub fn is_guard(&self) -> bool {
        matches!(self, Error::GuardExceeded { .. })
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
