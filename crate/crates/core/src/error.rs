use thiserror::Error;

use crate::projective::ProjectivePoint;

/// Errors raised by the exact engine.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("modulus {0} is out of range (need 2 <= p < 2^31)")]
    ModulusOutOfRange(u64),
    #[error("zero has no multiplicative inverse")]
    ZeroInverse,
    #[error("matrix [[{0},{1}],[{2},{3}]] is singular mod {4}")]
    SingularMatrix(i64, i64, i64, i64, u32),
    #[error("modulus mismatch: {0} vs {1}")]
    ModulusMismatch(u32, u32),
    #[error("subgroup closure exceeded the cap of {cap} elements")]
    ClosureCapExceeded { cap: usize },
    #[error("empty generator list")]
    NoGenerators,
    #[error("image of block {block} is not a block of the partition")]
    NotBlockPreserving { block: usize },
    #[error("invalid partition: {0}")]
    InvalidPartition(String),
    #[error("unknown paper case p={p}, case={case}")]
    UnknownCase { p: u64, case: String },
    #[error("no element of order {order} found in PGL(2, {p})")]
    NotFound { p: u32, order: u64 },
    #[error("no invariant coefficient reaches degree {expected}")]
    DegenerateInvariant { expected: usize },
    #[error("orbit of {point} has length {length}, group order is {order}")]
    IrregularOrbit {
        point: ProjectivePoint,
        length: usize,
        order: usize,
    },
    #[error("cannot evaluate at a pole: {0}")]
    EvaluationAtPole(String),
    #[error("resultant vanishes identically: parametrization components share a factor")]
    ResultantVanishes,
    #[error("pair does not satisfy the criterion: {0}")]
    PairFails(String),
    #[error("invalid search configuration: {0}")]
    InvalidConfig(String),
    #[error("unknown group kind {0:?} (expected A4, S4, A5, C<n> or D<n>)")]
    UnknownKind(String),
}

pub type Result<T> = std::result::Result<T, Error>;
