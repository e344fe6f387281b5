//! Builders for `Δ(K_{n_1,...,n_t})`, the Laplacian-like matrix `𝓛`, and
//! two independent constructions of `Δ⁻¹`.
//!
//! Every matrix uses the canonical block order of [`Partition`].

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::format::{ser_fraction_grid, ser_fractions};
use crate::invariants::{compute_bundle, lambda, nu, InvariantBundle};
use crate::matrix::RationalMatrix;
use crate::partition::Partition;

fn int(v: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(v))
}

fn ratio(num: BigInt, den: BigInt) -> BigRational {
    BigRational::new(num, den)
}

/// Zero diagonal, 4 between distinct vertices of one part, 1 across parts.
pub fn build_delta(p: &Partition) -> RationalMatrix {
    let part = p.vertex_parts();
    RationalMatrix::from_fn(p.n(), |u, v| {
        if u == v {
            int(0)
        } else if part[u] == part[v] {
            int(4)
        } else {
            int(1)
        }
    })
}

/// The `m × m` matrix whose determinant is `Σ_i n_i Π_{j≠i}(3n_j - 4)`:
/// first column `n_i`, first row `-4(n_1 - 1)` after the corner, and rows
/// `i >= 2` with `2(n_i - 2)` on the diagonal and `-n_i` elsewhere.
pub fn build_c_m(sizes: &[usize]) -> RationalMatrix {
    RationalMatrix::from_fn(sizes.len(), |i, j| {
        let ni = sizes[i] as i64;
        match (i, j) {
            (_, 0) => int(ni),
            (0, _) => int(-4 * (ni - 1)),
            _ if i == j => int(2 * (ni - 2)),
            _ => int(-ni),
        }
    })
}

/// Per-part values of `𝓛`: `a_i` on the diagonal, `b_i` between distinct
/// vertices of part `i`, `c_ij` between parts `i ≠ j`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LaplacianCoefficients {
    #[serde(serialize_with = "ser_fractions")]
    pub a: Vec<BigRational>,
    #[serde(serialize_with = "ser_fractions")]
    pub b: Vec<BigRational>,
    /// Diagonal is unused and stored as zero.
    #[serde(serialize_with = "ser_fraction_grid")]
    pub c: Vec<Vec<BigRational>>,
}

fn coefficients_from(p: &Partition, bundle: &InvariantBundle) -> LaplacianCoefficients {
    let psi = &bundle.psi;
    let t = p.t();
    let mut a = Vec::with_capacity(t);
    let mut b = Vec::with_capacity(t);
    for (i, &ni) in p.sizes().iter().enumerate() {
        let ni = ni as i64;
        let th = &bundle.theta_hat[i];
        let ps = &bundle.psi_hat[i];
        // a_i = [ (n_i-1)/2 Θ̂_i + (n_i-3) Ψ̂_i ] / (2Ψ)
        a.push(ratio(
            BigInt::from(ni - 1) * th + BigInt::from(2 * (ni - 3)) * ps,
            4 * psi,
        ));
        // b_i = -[ Θ̂_i/2 + Ψ̂_i ] / (2Ψ)
        b.push(ratio(-(th + BigInt::from(2) * ps), 4 * psi));
    }
    let c = (0..t)
        .map(|i| {
            (0..t)
                .map(|j| {
                    if i == j {
                        BigRational::zero()
                    } else {
                        ratio(bundle.phi_hat2[i][j].clone(), psi.clone())
                    }
                })
                .collect()
        })
        .collect();
    LaplacianCoefficients { a, b, c }
}

pub fn laplacian_coefficients(p: &Partition) -> Result<LaplacianCoefficients> {
    let bundle = compute_bundle(p);
    if bundle.psi.is_zero() {
        return Err(Error::CofactorSumZero);
    }
    Ok(coefficients_from(p, &bundle))
}

/// The symmetric Laplacian-like matrix `𝓛` with `𝓛𝟙 = 0`.
pub fn build_laplacian_like(p: &Partition) -> Result<RationalMatrix> {
    let coeffs = laplacian_coefficients(p)?;
    let part = p.vertex_parts();
    Ok(RationalMatrix::from_fn(p.n(), |u, v| {
        let (i, j) = (part[u], part[v]);
        if u == v {
            coeffs.a[i].clone()
        } else if i == j {
            coeffs.b[i].clone()
        } else {
            coeffs.c[i][j].clone()
        }
    }))
}

/// `Δ⁻¹ = -𝓛 + (1/λ) ν νᵗ`; needs both `det Δ ≠ 0` and `cof Δ ≠ 0`.
pub fn inverse_rank_one(p: &Partition) -> Result<RationalMatrix> {
    let bundle = compute_bundle(p);
    if bundle.theta.is_zero() {
        return Err(Error::SingularDelta);
    }
    let laplacian = build_laplacian_like(p)?;
    let lambda = lambda(p)?;
    let nu = nu(p)?;
    let perturbation = RationalMatrix::outer(&nu.values, &nu.values).scale(&lambda.0.recip());
    Ok(&perturbation - &laplacian)
}

/// `Δ⁻¹` assembled block by block:
/// `X_ii = ((3Θ̂_i + Φ̂_i) / 4Θ) J - I/4` and `X_ij = -(Φ̂_ij / Θ) J`.
/// Needs only `det Δ ≠ 0`.
pub fn inverse_block_form(p: &Partition) -> Result<RationalMatrix> {
    let bundle = compute_bundle(p);
    if bundle.theta.is_zero() {
        return Err(Error::SingularDelta);
    }
    let theta = &bundle.theta;
    let t = p.t();
    let diag_block: Vec<BigRational> = (0..t)
        .map(|i| ratio(3 * &bundle.theta_hat[i] + &bundle.phi_hat[i], 4 * theta))
        .collect();
    let quarter = BigRational::new(BigInt::from(1), BigInt::from(4));
    let part = p.vertex_parts();
    Ok(RationalMatrix::from_fn(p.n(), |u, v| {
        let (i, j) = (part[u], part[v]);
        if i == j {
            if u == v {
                &diag_block[i] - &quarter
            } else {
                diag_block[i].clone()
            }
        } else {
            ratio(-&bundle.phi_hat2[i][j], theta.clone())
        }
    }))
}
