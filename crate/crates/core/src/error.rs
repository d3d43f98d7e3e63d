use alloc::string::String;

use crate::field::Field;

pub type Result<T, E = Error> = core::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("field mismatch: {0} vs {1}")]
    FieldMismatch(Field, Field),

    #[error("shape mismatch: {0}")]
    Shape(String),

    #[error("invalid input: {0}")]
    Input(String),

    /// Modules or morphisms built over a different algebra than the one supplied.
    #[error("algebra mismatch: {0}")]
    AlgebraMismatch(String),

    #[error("precondition failed: {0}")]
    Precondition(String),

    /// A search space, budget or supported class of algebras was exceeded.
    #[error("capability exceeded: {0}")]
    Capability(String),

    /// The registry of indecomposables does not account for a module.
    #[error("incomplete indecomposable list: {0}")]
    IncompleteRegistry(String),

    /// Two routes that must agree produced different answers.
    #[error("internal inconsistency: {0}")]
    Inconsistency(String),
}

impl Error {
    pub(crate) fn shape(msg: impl Into<String>) -> Self {
        Error::Shape(msg.into())
    }

    pub(crate) fn input(msg: impl Into<String>) -> Self {
        Error::Input(msg.into())
    }

    pub(crate) fn capability(msg: impl Into<String>) -> Self {
        Error::Capability(msg.into())
    }

    pub(crate) fn inconsistency(msg: impl Into<String>) -> Self {
        Error::Inconsistency(msg.into())
    }

    pub(crate) fn precondition(msg: impl Into<String>) -> Self {
        Error::Precondition(msg.into())
    }
}
