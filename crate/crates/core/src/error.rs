use num_bigint::{BigInt, BigUint};
use thiserror::Error;

use crate::cnf::Ordinal;

/// Domain errors raised by ordinal operations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OrdinalError {
    #[error("the degree of 0 is undefined")]
    UndefinedDegree,
    #[error("{0} is not divisible by ω (it is a successor)")]
    NotDivisibleByOmega(Ordinal),
    #[error("{0} is not a limit ordinal")]
    NotLimit(Ordinal),
    #[error("negative coefficient {0}")]
    NegativeCoefficient(BigInt),
    #[error("finite base must be at least 2, got {0}")]
    BaseOutOfRange(BigUint),
    #[error("precondition violated: {0}")]
    Precondition(String),
}
