use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("syntax error at line {line}, column {column}: {message}")]
    Syntax {
        line: usize,
        column: usize,
        message: String,
    },

    #[error("duplicate rule label `{0}`")]
    DuplicateLabel(String),

    #[error("atom `{0}` uses the reserved `__` prefix")]
    ReservedAtom(String),

    #[error("invalid atom name `{0}`")]
    InvalidAtom(String),

    #[error("rules `{first}` and `{second}` have the same head and body")]
    DuplicateRule { first: String, second: String },

    #[error("preference mentions unknown rule label `{0}`")]
    UnknownLabel(String),

    #[error("preference relation is not asymmetric: `{0}` and `{1}` are preferred over each other")]
    PreferenceCycle(String, String),

    #[error("{what} is {actual}, which exceeds the enumeration bound of {limit}")]
    BoundExceeded {
        what: &'static str,
        actual: usize,
        limit: usize,
    },

    #[error("{0} is not a GNO-preferred answer set of the program")]
    NotPreferred(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
