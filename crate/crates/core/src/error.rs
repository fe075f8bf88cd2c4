use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum JacoError {
    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("index {index} out of range: {detail}")]
    IndexOutOfRange { index: u64, detail: String },

    #[error("arithmetic overflow: {0}")]
    Overflow(String),

    #[error("precondition violated: {0}")]
    PreconditionViolation(String),

    #[error("budget exceeded: {what} needs n = {n}, budget is {budget} (use force to override)")]
    BudgetExceeded {
        what: String,
        n: usize,
        budget: usize,
    },

    #[error("i/o error: {0}")]
    Io(String),
}

pub type Result<T> = std::result::Result<T, JacoError>;

impl JacoError {
    pub(crate) fn invalid(msg: impl Into<String>) -> Self {
        JacoError::InvalidArgument(msg.into())
    }

    pub(crate) fn overflow(msg: impl Into<String>) -> Self {
        JacoError::Overflow(msg.into())
    }
}

impl From<std::io::Error> for JacoError {
    fn from(e: std::io::Error) -> Self {
        JacoError::Io(e.to_string())
    }
}
