use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid partition: {0}")]
    InvalidPartition(String),
    #[error("size mismatch: expected {expected}, got {got}")]
    SizeMismatch { expected: u32, got: u32 },
    #[error("empty partition has no normalized width")]
    EmptyPartition,
    #[error("invalid set parameters: {0}")]
    InvalidSet(String),
    #[error("enumeration of partitions of {n} exceeds cap {cap}")]
    TooLarge { n: u32, cap: u32 },
    #[error("no symbolic rule applies to {0}; use star_explicit")]
    NoSymbolicRule(String),
    #[error("invalid tree: {0}")]
    InvalidTree(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("enumeration would produce {count} items, above guard {guard}")]
    GuardExceeded { count: String, guard: u64 },
    #[error("prime {0} not supported here (need p >= 5)")]
    UnsupportedPrime(u32),
    #[error("{0} is not prime")]
    NotPrime(u32),
    #[error("descriptor mismatch: {0}")]
    Descriptor(String),
    #[error("outside oracle scale: {0}")]
    OracleScale(String),
    #[error("oracle inconsistency: {0}")]
    OracleInconsistency(String),
}

pub type Result<T> = std::result::Result<T, Error>;
