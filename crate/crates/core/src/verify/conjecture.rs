//! Observations of `𝓛` for singular `Δ`, where its spectrum is only
//! conjectured: positive eigenvalues exactly 1/4 (multiplicity `n - t`) and
//! 1 (multiplicity `h - 1`), and `In(𝓛) = (n - s - 1, 1, s)`.
//!
//! These are recorded, never asserted.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;
use serde::Serialize;

use crate::linalg::{eigen_multiplicity, inertia, Inertia};
use crate::matrices::build_laplacian_like;
use crate::partition::{classify, Partition};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ConjectureReport {
    pub partition: Partition,
    pub mult_quarter: usize,
    pub mult_one: usize,
    pub inertia: Inertia,
    /// `n - t`.
    pub expected_mult_quarter: usize,
    /// `h - 1`.
    pub expected_mult_one: usize,
    /// No positive eigenvalue other than 1/4 and 1.
    pub positives_exhausted: bool,
    pub conjecture_i_holds: bool,
    pub conjecture_ii_holds: bool,
}

/// `None` unless `det Δ = 0` and `cof Δ ≠ 0`.
pub fn conjecture_report(p: &Partition) -> Option<ConjectureReport> {
    let class = classify(p);
    if !class.det_zero || class.cof_zero {
        return None;
    }
    let laplacian = build_laplacian_like(p).ok()?;
    let quarter = BigRational::new(BigInt::one(), BigInt::from(4));
    let mult_quarter = eigen_multiplicity(&laplacian, &quarter).ok()?;
    let mult_one = eigen_multiplicity(&laplacian, &BigRational::one()).ok()?;
    let inertia = inertia(&laplacian).ok()?;

    let expected_mult_quarter = p.n() - p.t();
    // det Δ = 0 forces h >= 2.
    let expected_mult_one = p.h().saturating_sub(1);
    let positives_exhausted = inertia.n_plus == mult_quarter + mult_one;
    let conjecture_i_holds = mult_quarter == expected_mult_quarter
        && mult_one == expected_mult_one
        && positives_exhausted;
    let conjecture_ii_holds = inertia == Inertia::new(p.n() - p.s() - 1, 1, p.s());

    Some(ConjectureReport {
        partition: p.clone(),
        mult_quarter,
        mult_one,
        inertia,
        expected_mult_quarter,
        expected_mult_one,
        positives_exhausted,
        conjecture_i_holds,
        conjecture_ii_holds,
    })
}
