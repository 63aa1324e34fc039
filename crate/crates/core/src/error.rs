use thiserror::Error;

use crate::field::Field;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("non-prime characteristic {0}")]
    NonPrimeCharacteristic(u64),

    #[error("cannot parse scalar {text:?} in {field}")]
    ScalarParse { text: String, field: Field },

    #[error("dimension mismatch in {what}: expected {expected}, found {found}")]
    DimensionMismatch {
        what: String,
        expected: usize,
        found: usize,
    },

    #[error("field mismatch: {0} vs {1}")]
    FieldMismatch(Field, Field),

    #[error("index {index} out of range 0..{bound}")]
    IndexOutOfRange { index: usize, bound: usize },

    #[error("modules belong to different algebras")]
    ParentMismatch,

    #[error("not an intertwiner: {0}")]
    NotIntertwiner(String),

    #[error("wrong flavor: expected {expected}, found {found}")]
    WrongFlavor { expected: String, found: String },

    #[error("invalid structure: {0}")]
    Invalid(String),

    #[error("precondition failed: {0}")]
    Precondition(String),

    #[error("identity {relation} fails in degree {degree}")]
    IdentityFailure { relation: String, degree: usize },

    #[error("dimension cap exceeded: {needed} > {cap}")]
    TooLarge { needed: usize, cap: usize },
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn mismatch(what: impl Into<String>, expected: usize, found: usize) -> Error {
    Error::DimensionMismatch {
        what: what.into(),
        expected,
        found,
    }
}
