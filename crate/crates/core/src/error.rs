use thiserror::Error;

/// Failure modes shared by every module of the toolkit.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// Malformed arguments: size mismatches, bad grid specs, non-finite inputs.
    #[error("invalid argument: {0}")]
    Argument(String),
    /// A point lies outside the region where the requested quantity is defined.
    #[error("domain error: {0}")]
    Domain(String),
    /// An input violates a documented precondition (e.g. an unnormalized state).
    #[error("precondition violated: {0}")]
    Precondition(String),
    /// Input data is inconsistent with what the operation expects.
    #[error("data error: {0}")]
    Data(String),
    /// A numerical procedure failed to reach its accuracy target.
    #[error("numerical failure: {0}")]
    Numerical(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub(crate) fn argument(msg: impl Into<String>) -> Self {
        Error::Argument(msg.into())
    }

    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }

    /// Prefixes the message with extra context, keeping the variant.
    pub fn context(self, ctx: impl std::fmt::Display) -> Self {
        match self {
            Error::Argument(m) => Error::Argument(format!("{ctx}: {m}")),
            Error::Domain(m) => Error::Domain(format!("{ctx}: {m}")),
            Error::Precondition(m) => Error::Precondition(format!("{ctx}: {m}")),
            Error::Data(m) => Error::Data(format!("{ctx}: {m}")),
            Error::Numerical(m) => Error::Numerical(format!("{ctx}: {m}")),
        }
    }
}
