use thiserror::Error;

/// Everything that can go wrong in the algebra layer.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("coefficient rings differ: {left} vs {right}")]
    RingMismatch { left: String, right: String },

    #[error("{op} undefined over {ring}: {n} is not invertible{detail}")]
    NotInvertible {
        op: String,
        ring: String,
        n: String,
        detail: String,
    },

    #[error("{op} is not available over {ring}: {reason}")]
    UnsupportedRing {
        op: String,
        ring: String,
        reason: String,
    },

    #[error("denominator must be nonzero")]
    ZeroDenominator,

    #[error("{0} is not prime")]
    NotPrime(String),

    #[error("invalid field modulus: {0}")]
    BadModulus(String),

    #[error("e({r}) does not lie in the level-{level} subalgebra")]
    LevelViolation { r: String, level: String },

    #[error("{alpha} is not a unit modulo {modulus}")]
    NotUnit { alpha: String, modulus: String },

    #[error("{label} does not have a {p}-power denominator")]
    NotPPower { label: String, p: u64 },

    #[error("level {n} does not divide level {m}")]
    LevelNotDivisor { n: String, m: String },

    #[error("primes differ: {0} vs {1}")]
    PrimeMismatch(u64, u64),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("cannot parse {what} from {input:?}")]
    Parse { what: &'static str, input: String },
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub(crate) fn invalid(msg: impl Into<String>) -> Self {
        Error::InvalidArgument(msg.into())
    }

    pub(crate) fn parse(what: &'static str, input: impl Into<String>) -> Self {
        Error::Parse {
            what,
            input: input.into(),
        }
    }
}
