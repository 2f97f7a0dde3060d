use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{what} exceeds the configured cap of {limit}")]
    CapExceeded { what: &'static str, limit: usize },

    #[error("group elements from different normal-form families cannot be combined")]
    MixedFamilies,

    #[error("action undefined: {0}")]
    ActionUndefined(String),

    #[error("not a subgroup: {0}")]
    NotASubgroup(String),

    #[error("homomorphism not well defined: {0}")]
    NotWellDefined(String),

    #[error("homomorphism is not injective: {0}")]
    NotInjective(String),

    #[error("label set must be non-empty")]
    EmptySet,

    #[error("invalid test space: {0}")]
    InvalidSpace(String),

    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("test {test} sums to {sum}, not 1")]
    TestSumViolated { test: usize, sum: String },

    #[error("weight of outcome {outcome} is {value}, outside [0,1]")]
    RangeViolated { outcome: usize, value: String },

    #[error("test space is not algebraic")]
    NotAlgebraic,

    #[error("morphism mismatch: {0}")]
    MorphismMismatch(String),

    #[error("K ∩ H differs from the base-point stabilizer: {0}")]
    Condition1Violated(String),

    #[error("not an embedding of the symmetric group: {0}")]
    NotAnEmbedding(String),

    #[error("seed is not a state of the test space: {0}")]
    SeedNotAState(String),

    #[error("state polytope is empty")]
    EmptyPolytope,

    #[error("extension is not regular: {0}")]
    NotRegular(String),

    #[error("extension is not reasonable: {0}")]
    NotReasonable(String),

    #[error("no witness found: {0}")]
    WitnessNotFound(String),

    #[error("ill-defined induced map: {0}")]
    IllDefined(String),

    #[error("parse error: {0}")]
    Parse(String),
}

impl Error {
    pub(crate) fn cap(what: &'static str, limit: usize) -> Self {
        Error::CapExceeded { what, limit }
    }
}
