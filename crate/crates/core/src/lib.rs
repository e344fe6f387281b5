//! Exact arithmetic for squared distance matrices `Δ(K_{n_1,...,n_t})` of
//! complete multipartite graphs.
//!
//! The crate evaluates the closed forms for `det Δ` and `cof Δ`, builds the
//! Laplacian-like matrix `𝓛` and two constructions of `Δ⁻¹`, and checks all
//! of them against brute-force oracles in [`linalg`] and [`verify`]. All
//! arithmetic is over arbitrary-precision integers and rationals.

pub mod error;
pub mod format;
pub mod invariants;
pub mod linalg;
pub mod matrices;
pub mod matrix;
pub mod partition;
pub mod verify;

pub use error::{Error, Result};
pub use invariants::{
    check_identities, cof_delta_closed, compute_bundle, det_c_m_closed, det_delta_closed, lambda,
    nu, InvariantBundle, ScalarLambda, VertexVector,
};
pub use linalg::{
    char_poly, cofactor_sum, cofactor_sum_adjugate, det_bareiss, eigen_multiplicity, inertia,
    inverse_gauss, rank, CharPoly, Inertia,
};
pub use matrices::{
    build_delta, build_laplacian_like, inverse_block_form, inverse_rank_one,
    laplacian_coefficients, LaplacianCoefficients,
};
pub use matrix::RationalMatrix;
pub use partition::{classify, enumerate_partitions, Classification, Partition};
pub use verify::{
    bfs_distance_matrix, conjecture_scan, verify_partition, ConjectureReport, VerificationReport,
};

pub use num_bigint::BigInt;
pub use num_rational::BigRational;
