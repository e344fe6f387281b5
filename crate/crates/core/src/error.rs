use thiserror::Error;

/// Errors raised by partition construction and by constructions that are
/// undefined for some partitions.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("a multipartite graph needs at least two parts, got {parts}")]
    EmptyOrSingletonPartition { parts: usize },

    #[error("part {index} has size {value}; every part must have at least one vertex")]
    NonPositivePart { index: usize, value: i64 },

    #[error("cannot parse partition token {token:?}: {reason}")]
    ParsePartition { token: String, reason: String },

    #[error("cofactor sum is zero: the Laplacian-like decomposition is undefined")]
    CofactorSumZero,

    #[error("determinant is zero: the squared distance matrix is singular")]
    SingularDelta,

    #[error("matrix is singular")]
    SingularMatrix,

    #[error("matrix is not symmetric")]
    NotSymmetric,
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
