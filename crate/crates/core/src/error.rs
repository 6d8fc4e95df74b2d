use thiserror::Error;

use crate::report::Report;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, Error)]
pub enum Error {
    #[error("{0} is not a prime in [2, 2^31]")]
    NotPrime(u64),
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("modulus mismatch: {0} vs {1}")]
    ModulusMismatch(u64, u64),
    #[error("structure table is not associative ({0} failing triples)")]
    NonAssociative(usize),
    #[error("subspace is not closed under multiplication")]
    NotMultiplicativelyClosed,
    #[error("vector or subspace is not contained in the expected subspace")]
    NotContained,
    #[error("subspace is not a two-sided ideal")]
    NotAnIdeal,
    #[error("element is not a central idempotent")]
    NotCentralIdempotent,
    #[error("linear map is not invertible")]
    NotInvertible,
    #[error("object {object} is not below the domain of arrow {arrow}")]
    NotBelowDomain { arrow: String, object: String },
    #[error("object {object} is not below the range of arrow {arrow}")]
    NotBelowRange { arrow: String, object: String },
    #[error("restriction of {arrow} to {object} is not unique")]
    AmbiguousRestriction { arrow: String, object: String },
    #[error("invalid groupoid:\n{0}")]
    InvalidGroupoid(Report),
    #[error("invalid inverse semigroup:\n{0}")]
    InvalidSemigroup(Report),
    #[error("invalid partial action:\n{0}")]
    InvalidAction(Report),
    #[error("groupoid is not inductive")]
    NotInductive,
    #[error("groupoid is not pseudoassociative")]
    NotPseudoassociative,
    #[error("action is not global")]
    NotGlobal,
    #[error("ideal family is not monotone: {lower} <= {upper} but the ideals are not nested")]
    NotMonotone { lower: String, upper: String },
    #[error("action is not unital at {0}")]
    NotUnital(String),
    #[error("action is not preunital at {0}")]
    NotPreunital(String),
    #[error("action is not strong")]
    NotStrong,
    #[error("groupoids differ")]
    GroupoidMismatch,
    #[error("search budget of {0} nodes exhausted")]
    BudgetExceeded(u64),
    #[error("skew ring is not associative ({0} failing triples)")]
    NotAssociative(usize),
    #[error("supplied data is not a globalization:\n{0}")]
    NotAGlobalization(Report),
    #[error("constructed action violates the order axiom:\n{0}")]
    NotOrdered(Report),
    #[error("unknown name {0:?}")]
    UnknownName(String),
    #[error("{0}")]
    Malformed(String),
}
