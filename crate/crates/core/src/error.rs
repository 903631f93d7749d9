//! Crate-wide error type.

use thiserror::Error;

/// Errors raised by constructors and operations in this crate.
///
/// Variants split into malformed input (rejected at construction) and
/// domain preconditions (well-formed input outside an operation's regime);
/// [`Error::is_domain_violation`] distinguishes the two for callers that
/// map them to different exit codes.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("rank must be at least 2, got {0}")]
    RankTooSmall(u64),
    #[error("expected {expected} coordinates, got {got}")]
    CoordinateCount { expected: usize, got: usize },
    #[error("modulus must be positive")]
    ZeroModulus,
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("not a rational number: {0:?}")]
    BadRational(String),
    #[error("weight is not integral")]
    NonIntegralWeight,
    #[error("weight is not dominant")]
    NonDominantWeight,
    #[error("weight is not a power of the determinant character")]
    NonConstantCoefficient,
    #[error("coefficient sheaf vanishes (odd central exponent)")]
    SheafVanishes,
}

impl Error {
    /// True for errors that mean "the mathematics does not apply here"
    /// rather than "the input was malformed".
    pub fn is_domain_violation(&self) -> bool {
        matches!(
            self,
            Error::NonIntegralWeight
                | Error::NonDominantWeight
                | Error::NonConstantCoefficient
                | Error::SheafVanishes
        )
    }
}
