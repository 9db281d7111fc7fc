use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("division is not exact: nonzero remainder {remainder}")]
    NonExactDivision { remainder: String },
    #[error("constant term {0} is not a unit")]
    NonInvertibleConstantTerm(String),
    #[error("order {k} exceeds argument {n}")]
    InvalidOrder { n: u64, k: u64 },
    #[error("q-integer of negative argument {0} requested")]
    NegativeArgument(i64),
    #[error("n = {n} exceeds enumeration limit {limit}")]
    ScaleExceeded { n: usize, limit: usize },
    #[error("invalid alpha {0}")]
    InvalidAlpha(i64),
    #[error("b values are not pairwise distinct (b_{i} = b_{j})")]
    DuplicateBValues { i: usize, j: usize },
    #[error("series did not converge within {max_terms} terms")]
    NoConvergence { max_terms: usize },
    #[error("(n, k) = ({n}, {k}) outside 1 <= k <= n")]
    InvalidRange { n: usize, k: usize },
    #[error("unknown identity `{0}`")]
    UnknownIdentity(String),
    #[error("parameters out of domain for `{id}`: {reason}")]
    ParamsOutOfDomain { id: String, reason: String },
    #[error("sequence too short: need index {needed}, have {len}")]
    SequenceTooShort { needed: usize, len: usize },
}

pub type Result<T> = std::result::Result<T, Error>;
