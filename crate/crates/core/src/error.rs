use thiserror::Error;

/// Errors raised by the engine.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("p must be prime (got {0})")]
    NotPrime(u64),

    #[error("characteristic {0} exceeds the supported bound 2^16")]
    CharacteristicTooLarge(u64),

    #[error("polynomials or ideals belong to different rings")]
    RingMismatch,

    #[error("exponent overflow")]
    ExponentOverflow,

    #[error("parse error at offset {pos}: {msg}")]
    Parse { pos: usize, msg: String },

    #[error("unknown variable `{0}`")]
    UnknownVariable(String),

    #[error("variable name `{0}` is reserved or invalid")]
    ReservedVariable(String),

    #[error("resource limit exceeded: {what} (limit {limit})")]
    ResourceLimit { what: &'static str, limit: usize },

    #[error("colon by the zero polynomial or the zero ideal")]
    ZeroColon,

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("avoidance search exhausted after {searched} combinations of {candidates} candidates")]
    AvoidanceExhausted { searched: usize, candidates: usize },

    #[error("input is not a monomial ideal")]
    NotMonomial,

    #[error("polynomial is not a power of the given base")]
    NotAPower,

    #[error("internal consistency check failed: {0}")]
    Inconsistent(String),
}

impl Error {
    pub fn is_resource_limit(&self) -> bool {
        matches!(self, Error::ResourceLimit { .. })
    }

    pub(crate) fn precondition(msg: impl Into<String>) -> Self {
        Error::Precondition(msg.into())
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
