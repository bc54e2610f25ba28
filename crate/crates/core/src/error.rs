use thiserror::Error;

/// Errors raised by ring constructions, morphism searches and checks.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("malformed table: {0}")]
    MalformedTable(String),
    #[error("tables do not define a commutative rng: {0}")]
    NotARing(String),
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("size guard exceeded: {what} needs {requested} elements, guard is {guard}")]
    SizeGuardExceeded {
        what: String,
        requested: u128,
        guard: usize,
    },
    #[error("search budget of {budget} candidate extensions exhausted in {what}")]
    SearchBudgetExhausted { what: String, budget: u64 },
    #[error("operation requires a ring with identity")]
    MissingIdentity,
    #[error("objects live in different ambient rings: {0}")]
    AmbientMismatch(String),
    #[error("malformed map: {0}")]
    MalformedMap(String),
    #[error("not a ring homomorphism: {0}")]
    InvalidHom(String),
    #[error("not an ideal: {0}")]
    NotAnIdeal(String),
    #[error("map is not surjective")]
    NotSurjective,
    #[error("multiplicative set is empty")]
    EmptySet,
    #[error("set is not multiplicatively closed: {0}")]
    NotMultiplicativelyClosed(String),
    #[error("incompatible structures: {0}")]
    IncompatibleStructures(String),
    #[error("hypothesis violated: {0}")]
    HypothesisViolated(String),
    #[error("ideal is not prime")]
    NotPrime,
}

impl Error {
    /// Errors that mean "this instance is outside what the operation accepts"
    /// rather than a defect in the inputs' encoding.
    pub fn is_hypothesis_failure(&self) -> bool {
        matches!(
            self,
            Error::SizeGuardExceeded { .. }
                | Error::SearchBudgetExhausted { .. }
                | Error::HypothesisViolated(_)
                | Error::NotPrime
                | Error::MissingIdentity
                | Error::NotSurjective
        )
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
