use thiserror::Error;

/// Crate-wide error type. Everything user-triggerable surfaces here;
/// internal mathematical impossibilities are asserted instead.
#[derive(Debug, Error)]
pub enum Error {
    #[error("ring mismatch: {left} vs {right}")]
    RingMismatch { left: String, right: String },

    #[error("ring {0} is not finite")]
    NotFinite(String),

    #[error("enumeration of {size} candidates exceeds the cap of {cap}")]
    EnumerationTooLarge { size: u128, cap: u128 },

    #[error("{name} must be idempotent")]
    NotIdempotent { name: &'static str },

    #[error("modulus must be at least 1")]
    InvalidModulus,

    #[error("{0} is not prime")]
    NotPrime(u64),

    #[error("matrix dimension must be at least 1")]
    InvalidDimension,

    #[error("unknown law id \"{0}\"")]
    UnknownLaw(String),

    #[error("law \"{law}\" takes parameters {expected:?}, got {got} bindings")]
    WrongParameterCount {
        law: String,
        expected: Vec<&'static str>,
        got: usize,
    },

    #[error("parse error: {0}")]
    Parse(String),
}

impl Error {
    pub fn parse(msg: impl Into<String>) -> Self {
        Error::Parse(msg.into())
    }
}
