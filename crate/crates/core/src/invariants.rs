//! The product/weighted-sum invariants Φ, Ψ, Θ of a partition, their single
//! and double deletions, and the closed forms built from them.
//!
//! With `f_k = 3 n_k - 4`:
//!
//! * `Φ = Π_k f_k`, `Φ̂_i = Π_{k≠i} f_k`, `Φ̂_{ij} = Π_{k≠i,j} f_k`
//! * `Ψ = Σ_k n_k Φ̂_k`, `Ψ̂_i = Σ_{k≠i} n_k Φ̂_{ik}`,
//!   `Ψ̂_{ij} = Σ_{k≠i,j} n_k Π_{l≠i,j,k} f_l`
//! * `Θ = Φ + Ψ`, `Θ̂_i = Φ̂_i + Ψ̂_i`
//!
//! Empty products are 1 and empty sums are 0.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::format::{ser_decimal, ser_decimal_grid, ser_decimals, ser_fraction, ser_fractions};
use crate::partition::Partition;

/// Φ, Ψ, Θ and their deletions, indexed by canonical part order.
///
/// The double-deletion grids are `t × t`; their diagonal is not admissible
/// and is stored as zero.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct InvariantBundle {
    #[serde(serialize_with = "ser_decimal")]
    pub phi: BigInt,
    #[serde(serialize_with = "ser_decimal")]
    pub psi: BigInt,
    #[serde(serialize_with = "ser_decimal")]
    pub theta: BigInt,
    #[serde(serialize_with = "ser_decimals")]
    pub phi_hat: Vec<BigInt>,
    #[serde(serialize_with = "ser_decimals")]
    pub psi_hat: Vec<BigInt>,
    #[serde(serialize_with = "ser_decimals")]
    pub theta_hat: Vec<BigInt>,
    #[serde(serialize_with = "ser_decimal_grid")]
    pub phi_hat2: Vec<Vec<BigInt>>,
    #[serde(serialize_with = "ser_decimal_grid")]
    pub psi_hat2: Vec<Vec<BigInt>>,
}

impl InvariantBundle {
    pub fn parts(&self) -> usize {
        self.phi_hat.len()
    }
}

fn factor(n: usize) -> BigInt {
    BigInt::from(3 * n as i64 - 4)
}

/// `Σ_{k ∉ skip} n_k Π_{l ∉ skip, l≠k} f_l`.
fn weighted_sum(sizes: &[usize], skip: &[usize]) -> BigInt {
    let live: Vec<usize> = (0..sizes.len()).filter(|k| !skip.contains(k)).collect();
    live.iter()
        .map(|&k| {
            live.iter()
                .filter(|&&l| l != k)
                .fold(BigInt::from(sizes[k]), |acc, &l| acc * factor(sizes[l]))
        })
        .sum()
}

fn product(sizes: &[usize], skip: &[usize]) -> BigInt {
    (0..sizes.len())
        .filter(|k| !skip.contains(k))
        .fold(BigInt::one(), |acc, k| acc * factor(sizes[k]))
}

pub fn compute_bundle(p: &Partition) -> InvariantBundle {
    let sizes = p.sizes();
    let t = sizes.len();
    let phi = product(sizes, &[]);
    let psi = weighted_sum(sizes, &[]);
    let phi_hat: Vec<BigInt> = (0..t).map(|i| product(sizes, &[i])).collect();
    let psi_hat: Vec<BigInt> = (0..t).map(|i| weighted_sum(sizes, &[i])).collect();
    let theta_hat = phi_hat.iter().zip(&psi_hat).map(|(a, b)| a + b).collect();
    let grid = |f: fn(&[usize], &[usize]) -> BigInt| -> Vec<Vec<BigInt>> {
        (0..t)
            .map(|i| {
                (0..t)
                    .map(|j| {
                        if i == j {
                            BigInt::zero()
                        } else {
                            f(sizes, &[i, j])
                        }
                    })
                    .collect()
            })
            .collect()
    };
    InvariantBundle {
        theta: &phi + &psi,
        phi,
        psi,
        phi_hat,
        psi_hat,
        theta_hat,
        phi_hat2: grid(product),
        psi_hat2: grid(weighted_sum),
    }
}

/// One failed instance of the recurrence identities.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdentityViolation {
    /// `'a'` to `'d'`.
    pub identity: char,
    pub i: usize,
    pub j: Option<usize>,
    pub lhs: BigInt,
    pub rhs: BigInt,
}

/// Checks every instance of
///
/// * (a) `Θ = f_i Φ̂_i + Σ_k n_k Φ̂_k`
/// * (b) `Θ = f_i Θ̂_i + n_i Φ̂_i`
/// * (c) `Ψ = f_i Ψ̂_i + n_i Φ̂_i`
/// * (d) `Ψ̂_i = f_j Ψ̂_{ij} + n_j Φ̂_{ij}` for `j ≠ i`
///
/// and returns the ones that fail.
pub fn identity_violations(p: &Partition) -> Vec<IdentityViolation> {
    let b = compute_bundle(p);
    let sizes = p.sizes();
    let t = sizes.len();
    let weighted: BigInt = (0..t).map(|k| sizes[k] * &b.phi_hat[k]).sum();
    let mut out = Vec::new();
    let mut check = |identity, i, j, lhs: &BigInt, rhs: BigInt| {
        if *lhs != rhs {
            out.push(IdentityViolation {
                identity,
                i,
                j,
                lhs: lhs.clone(),
                rhs,
            });
        }
    };
    for i in 0..t {
        let fi = factor(sizes[i]);
        let ni = BigInt::from(sizes[i]);
        check('a', i, None, &b.theta, &fi * &b.phi_hat[i] + &weighted);
        check(
            'b',
            i,
            None,
            &b.theta,
            &fi * &b.theta_hat[i] + &ni * &b.phi_hat[i],
        );
        check(
            'c',
            i,
            None,
            &b.psi,
            &fi * &b.psi_hat[i] + &ni * &b.phi_hat[i],
        );
        for j in (0..t).filter(|&j| j != i) {
            let rhs = factor(sizes[j]) * &b.psi_hat2[i][j] + sizes[j] * &b.phi_hat2[i][j];
            check('d', i, Some(j), &b.psi_hat[i], rhs);
        }
    }
    out
}

pub fn check_identities(p: &Partition) -> bool {
    identity_violations(p).is_empty()
}

fn signed_power_of_four(p: &Partition) -> BigInt {
    num_traits::pow(BigInt::from(-4), p.n() - p.t())
}

/// `det Δ = (-4)^{n-t} Θ`.
pub fn det_delta_closed(p: &Partition) -> BigInt {
    signed_power_of_four(p) * compute_bundle(p).theta
}

/// `cof Δ = (-4)^{n-t} Ψ`.
pub fn cof_delta_closed(p: &Partition) -> BigInt {
    signed_power_of_four(p) * compute_bundle(p).psi
}

/// `det C_m = Σ_i n_i Π_{j≠i} (3 n_j - 4)`.
///
/// Panics on an empty slice.
pub fn det_c_m_closed(sizes: &[usize]) -> BigInt {
    assert!(!sizes.is_empty(), "C_m needs at least one row");
    weighted_sum(sizes, &[])
}

/// `λ = Θ / Ψ = det Δ / cof Δ`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ScalarLambda(#[serde(serialize_with = "ser_fraction")] pub BigRational);

impl ScalarLambda {
    pub fn value(&self) -> &BigRational {
        &self.0
    }
}

pub fn lambda(p: &Partition) -> Result<ScalarLambda> {
    let b = compute_bundle(p);
    if b.psi.is_zero() {
        return Err(Error::CofactorSumZero);
    }
    Ok(ScalarLambda(BigRational::new(b.theta, b.psi)))
}

/// Vertex-indexed vector in canonical block order.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VertexVector {
    #[serde(serialize_with = "ser_fractions")]
    pub values: Vec<BigRational>,
}

impl VertexVector {
    pub fn sum(&self) -> BigRational {
        self.values.iter().sum()
    }
}

/// `ν(v) = Φ̂_i / Ψ` for `v` in part `i`.
pub fn nu(p: &Partition) -> Result<VertexVector> {
    let b = compute_bundle(p);
    if b.psi.is_zero() {
        return Err(Error::CofactorSumZero);
    }
    let per_part: Vec<BigRational> = b
        .phi_hat
        .iter()
        .map(|ph| BigRational::new(ph.clone(), b.psi.clone()))
        .collect();
    Ok(VertexVector {
        values: p
            .vertex_parts()
            .into_iter()
            .map(|i| per_part[i].clone())
            .collect(),
    })
}
