use thiserror::Error;

/// Errors raised by the semigroup, geometry, automaton and analysis engines.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("element {element} does not belong to the {family} family")]
    FamilyMismatch { element: String, family: String },

    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("the {0} family has no Følner sequence (it is not left-reversible)")]
    NoFolnerSequence(String),

    #[error("enumeration budget exceeded: {what} needs {required}, budget is {budget}")]
    BudgetExceeded {
        what: String,
        required: String,
        budget: u64,
    },

    #[error("comparable window is empty: {0}")]
    InsufficientWindow(String),
}

impl Error {
    pub(crate) fn invalid(msg: impl Into<String>) -> Self {
        Error::InvalidInput(msg.into())
    }

    /// True for the resource-limit errors (budget exhausted, window too large to encode).
    pub fn is_budget(&self) -> bool {
        matches!(self, Error::BudgetExceeded { .. })
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
