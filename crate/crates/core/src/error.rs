use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    /// Entry count or dimension does not match the declared shape.
    #[error("shape error: {0}")]
    Shape(String),

    /// An index, line, or plane specification is out of range.
    #[error("invalid input: {0}")]
    Input(String),

    #[error("matrix has empty support")]
    EmptySupport,

    #[error("matrix is not polystochastic")]
    NotPolystochastic,

    #[error("matrix is not a multidimensional permutation")]
    NotPermutation,

    #[error("unknown catalog matrix {0:?}")]
    UnknownCatalog(String),

    /// Malformed matrix or certificate document.
    #[error("parse error at {location}: {message}")]
    Parse { location: String, message: String },

    /// A brute-force routine would exceed its work budget.
    #[error("capacity exceeded: {what} is {actual}, bound is {bound}")]
    Capacity {
        what: &'static str,
        actual: String,
        bound: String,
    },
}

impl Error {
    pub(crate) fn parse(location: impl Into<String>, message: impl Into<String>) -> Self {
        Error::Parse {
            location: location.into(),
            message: message.into(),
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
