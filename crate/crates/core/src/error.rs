use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// An argument lies outside the domain of the operation.
    #[error("domain error: {0}")]
    Domain(String),

    #[error("division by zero")]
    DivisionByZero,

    /// Enumerating the compositions of `k` would walk 2^(k-1) paths, more
    /// than the configured cap allows.
    #[error("enumeration budget exceeded: k = {k} is above the cap of {max} (set COMPIDENT_BUDGET to raise it)")]
    BudgetExceeded { k: usize, max: usize },

    #[error("unknown identity id `{0}`")]
    UnknownIdentity(String),

    #[error("unknown pair id `{0}`")]
    UnknownPair(String),

    #[error("missing parameter `{0}`")]
    MissingParam(String),

    #[error("parse error: {0}")]
    Parse(String),

    /// Elimination ran out of pivots on a matrix that should be unit lower
    /// Hessenberg; only reachable through a bug.
    #[error("internal error: {0}")]
    Internal(String),
}

impl Error {
    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }
}
