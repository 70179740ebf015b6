use thiserror::Error;

/// Errors shared by every layer of the crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// An argument lies outside the domain of the operation (zero where a
    /// unit is required, a singular matrix, a non-prime place, ...).
    #[error("domain error: {0}")]
    Domain(String),

    /// The input is well formed but the operation is not offered for it.
    #[error("unsupported: {0}")]
    Unsupported(String),

    /// An optional invariant that this computation consumes was not supplied.
    #[error("missing invariant: {0}")]
    MissingInvariant(String),

    /// The available data does not determine the answer.
    #[error("indeterminate: {0}")]
    Indeterminate(String),

    /// A descriptor violates one of its structural rules.
    #[error("invalid field `{field}`: {rule}")]
    Validation { field: String, rule: String },

    /// Malformed descriptor text.
    #[error("parse error at line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },

    /// A bounded search finished without a result.
    #[error("not found: {0}")]
    NotFound(String),
}

impl Error {
    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }

    pub(crate) fn unsupported(msg: impl Into<String>) -> Self {
        Error::Unsupported(msg.into())
    }

    pub(crate) fn validation(field: impl Into<String>, rule: impl Into<String>) -> Self {
        Error::Validation {
            field: field.into(),
            rule: rule.into(),
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
