use thiserror::Error;

use crate::chartable::TableId;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("class size for column {class} is not integral: {numerator}/{denominator}")]
    NonIntegralClassSize {
        class: usize,
        numerator: u64,
        denominator: u64,
    },
    #[error("cannot compute power {exponent} of class {class}: no power map for prime {prime}")]
    UnsupportedExponent {
        class: usize,
        exponent: u64,
        prime: u64,
    },
    #[error("operands belong to different character tables ({0:?} vs {1:?})")]
    TableMismatch(TableId, TableId),
    #[error("expected {expected} {what}, found {found}")]
    CardinalityMismatch {
        what: &'static str,
        expected: usize,
        found: usize,
    },
    #[error("vector {0:?} is not a root (self-pairing {1})")]
    NotARoot(Vec<i64>, i64),
    #[error("generated group has order {generated}, character table says {expected}")]
    OrderMismatch { generated: usize, expected: u64 },
    #[error("class matching is ambiguous: {0}")]
    AmbiguousMatching(String),
    #[error("class matching is inconsistent: {0}")]
    InconsistentMatching(String),
    #[error("decomposition is not a non-negative integer combination: {0}")]
    NonIntegralDecomposition(String),
    #[error("no blocking irreducible distinguishes class {0}")]
    CertificateUnavailable(String),
    #[error("invalid group action: {0}")]
    InvalidAction(String),
    #[error("degree {0} is not supported here")]
    UnsupportedDegree(usize),
    #[error("symmetric powers of {0} are not determined by the free λ-structure")]
    UndeterminedSym(String),
    #[error("expected a relation space of dimension {expected} over Q(L), found {found}")]
    UnexpectedNullity { expected: usize, found: String },
    #[error("cannot parse {what}: {input}")]
    Parse { what: &'static str, input: String },
    #[error("unknown {what}: {name}")]
    Unknown { what: &'static str, name: String },
    #[error("i/o: {0}")]
    Io(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}
