use thiserror::Error;

/// A parse failure, pinned to the 1-based line that triggered it.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("line {line}: {message}")]
pub struct ParseError {
    pub line: usize,
    pub message: String,
}

impl ParseError {
    pub(crate) fn new(line: usize, message: impl Into<String>) -> Self {
        Self {
            line,
            message: message.into(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("invalid input: {0}")]
    InvalidInput(String),

    /// A precondition of the operation does not hold for this input.
    #[error("domain error: {0}")]
    Domain(String),

    /// The work budget ran out before the question was decided.
    #[error("budget exceeded: examined {examined} {unit} (limit {limit})")]
    BudgetExceeded {
        examined: u64,
        limit: u64,
        unit: &'static str,
    },

    #[error("parse error: {0}")]
    Parse(#[from] ParseError),

    #[error("design error: {0}")]
    Design(String),

    #[error("resource limit: {0}")]
    Resource(String),

    /// An outcome that a proven theorem rules out.
    #[error("contract violation: {0}")]
    ContractViolation(String),

    #[error("configuration error: {0}")]
    Config(String),
}

impl Error {
    pub fn is_budget(&self) -> bool {
        matches!(self, Error::BudgetExceeded { .. })
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
