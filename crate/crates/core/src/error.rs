use thiserror::Error;

/// Errors raised by the polynomial, Gröbner and scheme layers.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("variable `{0}` is not covered by the term ordering")]
    OrderingDomain(String),
    #[error("unknown variable `{0}`")]
    UnknownVariable(String),
    #[error("invalid variable universe: {0}")]
    InvalidUniverse(String),
    #[error("universe mismatch: {0}")]
    UniverseMismatch(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("resource limit exceeded: {cutoff} (limit {limit})")]
    ResourceLimit { cutoff: &'static str, limit: usize },
    #[error("order ideal is empty")]
    EmptyOrderIdeal,
    #[error("order ideal is not divisor-closed: {term} is present but its divisor {missing} is missing")]
    NotDivisorClosed { term: String, missing: String },
    #[error("malformed substitution rules: {0}")]
    MalformedRules(String),
    #[error("the unit ideal has no Krull dimension")]
    UnitIdeal,
    #[error("ideal is not zero-dimensional")]
    NotZeroDimensional,
    #[error("point is not on the scheme: {witness} does not vanish")]
    NotAPoint { witness: String },
    #[error("input is not homogeneous: {0}")]
    NotHomogeneous(String),
    #[error("invariant violated: {0}")]
    InvariantViolation(String),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}

impl Error {
    /// Coarse classification used by front ends to pick exit codes.
    pub fn kind(&self) -> ErrorKind {
        match self {
            Error::ResourceLimit { .. } => ErrorKind::Resource,
            Error::Parse(_) | Error::UnknownVariable(_) | Error::InvalidArgument(_) => {
                ErrorKind::Input
            }
            _ => ErrorKind::Math,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ErrorKind {
    /// A mathematical precondition failed.
    Math,
    /// A safety cutoff was hit.
    Resource,
    /// Malformed input.
    Input,
}

pub type Result<T> = std::result::Result<T, Error>;
