use std::fmt;

use qha_core::Error;

/// Everything that ends a run with exit code 2.
#[derive(Debug, Clone, PartialEq)]
pub enum CliError {
    Io { path: String, message: String },
    Json { line: usize, column: usize, message: String },
    Schema { pointer: String, message: String },
    NonPrime { p: u64 },
    DimensionMismatch { field: String, expected: usize, found: usize },
    ScalarParse { pointer: String, text: String },
    Usage(String),
    Core(Error),
}

impl CliError {
    /// Stable machine-readable code.
    pub fn code(&self) -> &'static str {
        match self {
            CliError::Io { .. } => "E_IO",
            CliError::Json { .. } => "E_JSON",
            CliError::Schema { .. } => "E_SCHEMA",
            CliError::NonPrime { .. } => "E_NONPRIME",
            CliError::DimensionMismatch { .. } => "E_DIMENSION",
            CliError::ScalarParse { .. } => "E_SCALAR",
            CliError::Usage(_) => "E_USAGE",
            CliError::Core(Error::Precondition(_)) => "E_PRECONDITION",
            CliError::Core(Error::TooLarge { .. }) => "E_TOO_LARGE",
            CliError::Core(Error::ScalarParse { .. }) => "E_SCALAR",
            CliError::Core(_) => "E_STRUCTURE",
        }
    }

    pub fn schema(pointer: impl Into<String>, message: impl Into<String>) -> CliError {
        CliError::Schema {
            pointer: pointer.into(),
            message: message.into(),
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Io { path, message } => write!(f, "{path}: {message}"),
            CliError::Json { line, column, message } => write!(f, "line {line}, column {column}: {message}"),
            CliError::Schema { pointer, message } => write!(f, "{pointer}: {message}"),
            CliError::NonPrime { p } => write!(f, "non-prime characteristic {p}"),
            CliError::DimensionMismatch { field, expected, found } => {
                write!(f, "dimension mismatch in \"{field}\": expected {expected}, found {found}")
            }
            CliError::ScalarParse { pointer, text } => write!(f, "{pointer}: cannot parse scalar {text:?}"),
            CliError::Usage(m) => f.write_str(m),
            CliError::Core(e) => write!(f, "{e}"),
        }
    }
}

impl std::error::Error for CliError {}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        match e {
            Error::NonPrimeCharacteristic(p) => CliError::NonPrime { p },
            Error::DimensionMismatch { what, expected, found } => CliError::DimensionMismatch {
                field: what,
                expected,
                found,
            },
            other => CliError::Core(other),
        }
    }
}

pub type CliResult<T> = std::result::Result<T, CliError>;
