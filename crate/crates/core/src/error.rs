use thiserror::Error;

use crate::report::ValidationReport;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    /// Malformed input: dangling identifiers, duplicate names, multi-valued
    /// sums, unparsable documents.
    #[error("{location}: {message}")]
    Input { location: String, message: String },

    /// A structure failed the axioms an operation requires.
    #[error("{} does not satisfy the {} axioms (first failure: {})", .0.subject, .0.kind, .0.first_failure().unwrap_or("none"))]
    Invalid(Box<ValidationReport>),

    /// An operation was called outside its precondition.
    #[error("precondition violated: {0}")]
    Precondition(String),

    /// An internal consistency requirement failed (e.g. a recogniser passed
    /// but a derived object could not be built).
    #[error("contract violated: {0}")]
    Contract(String),

    #[error("unknown shape `{0}`")]
    UnknownShape(String),

    #[error("enumeration refused: {0}")]
    BoundExceeded(String),

    #[error("unknown catalog entry `{0}`")]
    UnknownCatalogEntry(String),
}

impl Error {
    pub fn input(location: impl Into<String>, message: impl Into<String>) -> Self {
        Error::Input { location: location.into(), message: message.into() }
    }

    pub fn invalid(report: ValidationReport) -> Self {
        Error::Invalid(Box::new(report))
    }
}
