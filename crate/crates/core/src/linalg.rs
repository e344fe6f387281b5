//! Exact linear algebra over `BigRational`, independent of the closed forms.
//!
//! Determinants and ranks clear denominators row by row and run
//! fraction-free elimination over `BigInt`. The characteristic polynomial
//! comes from the Faddeev-LeVerrier recurrence and inertia from Descartes'
//! rule of signs, which is exact for the real-rooted characteristic
//! polynomial of a symmetric matrix.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::ser::{Serialize, SerializeSeq, Serializer};

use crate::error::{Error, Result};
use crate::format::fraction;
use crate::matrix::RationalMatrix;

/// Rows scaled to integers, with the product of the row scale factors.
fn integer_rows(m: &RationalMatrix) -> (Vec<Vec<BigInt>>, BigInt) {
    let mut scale = BigInt::one();
    let rows = (0..m.order())
        .map(|i| {
            let row = m.row(i);
            let d = row.iter().fold(BigInt::one(), |acc, e| acc.lcm(e.denom()));
            scale *= &d;
            row.iter().map(|e| e.numer() * (&d / e.denom())).collect()
        })
        .collect();
    (rows, scale)
}

/// Bareiss elimination with row pivoting; every division is exact.
fn bareiss(mut a: Vec<Vec<BigInt>>) -> BigInt {
    let n = a.len();
    if n == 0 {
        return BigInt::one();
    }
    let mut negate = false;
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            match (k + 1..n).find(|&r| !a[r][k].is_zero()) {
                Some(r) => {
                    a.swap(k, r);
                    negate = !negate;
                }
                None => return BigInt::zero(),
            }
        }
        let (top, bottom) = a.split_at_mut(k + 1);
        let pivot_row = &top[k];
        for row in bottom.iter_mut() {
            for j in k + 1..n {
                let v = &row[j] * &pivot_row[k] - &row[k] * &pivot_row[j];
                row[j] = v / &prev;
            }
            row[k] = BigInt::zero();
        }
        prev = pivot_row[k].clone();
    }
    let det = a[n - 1][n - 1].clone();
    if negate {
        -det
    } else {
        det
    }
}

/// Exact determinant via fraction-free elimination.
pub fn det_bareiss(m: &RationalMatrix) -> BigRational {
    let (rows, scale) = integer_rows(m);
    BigRational::new(bareiss(rows), scale)
}

/// Signed cofactor `(-1)^{i+j} det M(i|j)`.
pub fn cofactor(m: &RationalMatrix, i: usize, j: usize) -> BigRational {
    let minor = det_bareiss(&m.minor(i, j));
    if (i + j) % 2 == 0 {
        minor
    } else {
        -minor
    }
}

/// Sum of all cofactors, computed as `det M'(1|1)` where `M'` is `M` after
/// subtracting the first row from every other row and then the first column
/// from every other column.
pub fn cofactor_sum(m: &RationalMatrix) -> BigRational {
    let n = m.order();
    if n == 0 {
        return BigRational::zero();
    }
    // Entry (i, j) of M' for i, j >= 1, expanded.
    let reduced = RationalMatrix::from_fn(n - 1, |i, j| {
        let (i, j) = (i + 1, j + 1);
        m.get(i, j) - m.get(0, j) - m.get(i, 0) + m.get(0, 0)
    });
    det_bareiss(&reduced)
}

/// Sum of all cofactors, one minor at a time.
pub fn cofactor_sum_adjugate(m: &RationalMatrix) -> BigRational {
    let n = m.order();
    let mut total = BigRational::zero();
    for i in 0..n {
        for j in 0..n {
            total += cofactor(m, i, j);
        }
    }
    total
}

/// Gauss-Jordan elimination on `[M | I]`.
pub fn inverse_gauss(m: &RationalMatrix) -> Result<RationalMatrix> {
    let n = m.order();
    let mut a = m.rows();
    let mut inv = RationalMatrix::identity(n).rows();
    for col in 0..n {
        let pivot = (col..n)
            .find(|&r| !a[r][col].is_zero())
            .ok_or(Error::SingularMatrix)?;
        a.swap(col, pivot);
        inv.swap(col, pivot);
        let p = a[col][col].recip();
        for j in 0..n {
            a[col][j] *= &p;
            inv[col][j] *= &p;
        }
        for r in (0..n).filter(|&r| r != col) {
            let f = a[r][col].clone();
            if f.is_zero() {
                continue;
            }
            for j in 0..n {
                let da = &f * &a[col][j];
                a[r][j] -= da;
                let di = &f * &inv[col][j];
                inv[r][j] -= di;
            }
        }
    }
    Ok(RationalMatrix::from_entries(
        n,
        inv.into_iter().flatten().collect(),
    ))
}

fn primitive(row: &mut [BigInt]) {
    let g = row.iter().fold(BigInt::zero(), |acc, v| acc.gcd(v));
    if g > BigInt::one() {
        for v in row.iter_mut() {
            *v /= &g;
        }
    }
}

/// Rank by fraction-free row reduction; rows are kept primitive.
pub fn rank(m: &RationalMatrix) -> usize {
    let (mut a, _) = integer_rows(m);
    let n = m.order();
    let mut rank = 0;
    for col in 0..n {
        let Some(pivot) = (rank..n).find(|&r| !a[r][col].is_zero()) else {
            continue;
        };
        a.swap(rank, pivot);
        let (top, bottom) = a.split_at_mut(rank + 1);
        let pivot_row = &top[rank];
        for row in bottom.iter_mut() {
            if row[col].is_zero() {
                continue;
            }
            let factor = row[col].clone();
            for j in col..n {
                row[j] = &row[j] * &pivot_row[col] - &factor * &pivot_row[j];
            }
            primitive(row);
        }
        rank += 1;
    }
    rank
}

/// Monic `det(xI - M)`, coefficients from degree `n` down to the constant.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CharPoly {
    pub coeffs: Vec<BigRational>,
}

impl CharPoly {
    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    /// Coefficient of `x^power`.
    pub fn coeff(&self, power: usize) -> &BigRational {
        &self.coeffs[self.degree() - power]
    }

    pub fn eval(&self, x: &BigRational) -> BigRational {
        self.coeffs
            .iter()
            .fold(BigRational::zero(), |acc, c| acc * x + c)
    }

    /// Multiplicity of the root 0.
    pub fn zero_multiplicity(&self) -> usize {
        self.coeffs.iter().rev().take_while(|c| c.is_zero()).count()
    }

    fn sign_changes(&self, flip_odd: bool) -> usize {
        let n = self.degree();
        let signs: Vec<bool> = self
            .coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| {
                let odd = (n - i) % 2 == 1;
                c.is_negative() != (flip_odd && odd)
            })
            .collect();
        signs.windows(2).filter(|w| w[0] != w[1]).count()
    }
}

impl Serialize for CharPoly {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut seq = s.serialize_seq(Some(self.coeffs.len()))?;
        for c in &self.coeffs {
            seq.serialize_element(&fraction(c))?;
        }
        seq.end()
    }
}

fn int_matmul(a: &[Vec<BigInt>], b: &[Vec<BigInt>]) -> Vec<Vec<BigInt>> {
    let n = a.len();
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    let mut acc = BigInt::zero();
                    for k in 0..n {
                        if !a[i][k].is_zero() && !b[k][j].is_zero() {
                            acc += &a[i][k] * &b[k][j];
                        }
                    }
                    acc
                })
                .collect()
        })
        .collect()
}

/// Faddeev-LeVerrier on the integer matrix `B = dM`, where `d` clears every
/// denominator; the coefficient of `x^k` is then rescaled by `d^{k-n}`.
pub fn char_poly(m: &RationalMatrix) -> CharPoly {
    let n = m.order();
    let d = m
        .entries()
        .iter()
        .fold(BigInt::one(), |acc, e| acc.lcm(e.denom()));
    let b: Vec<Vec<BigInt>> = (0..n)
        .map(|i| {
            m.row(i)
                .iter()
                .map(|e| e.numer() * (&d / e.denom()))
                .collect()
        })
        .collect();

    // ints[k] is the coefficient of x^{n-k} for B.
    let mut ints = vec![BigInt::zero(); n + 1];
    ints[0] = BigInt::one();
    let mut product = vec![vec![BigInt::zero(); n]; n];
    for k in 1..=n {
        let mut mk = product;
        for (i, row) in mk.iter_mut().enumerate() {
            row[i] += &ints[k - 1];
        }
        product = int_matmul(&b, &mk);
        let trace: BigInt = (0..n).map(|i| &product[i][i]).sum();
        let (quot, rem) = trace.div_rem(&BigInt::from(k));
        debug_assert!(rem.is_zero());
        ints[k] = -quot;
    }

    let mut scale = BigInt::one();
    let coeffs = ints
        .into_iter()
        .map(|c| {
            let v = BigRational::new(c, scale.clone());
            scale *= &d;
            v
        })
        .collect();
    CharPoly { coeffs }
}

/// Counts of positive, zero, and negative eigenvalues.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, serde::Serialize)]
pub struct Inertia {
    pub n_plus: usize,
    pub n_zero: usize,
    pub n_minus: usize,
}

impl Inertia {
    pub fn new(n_plus: usize, n_zero: usize, n_minus: usize) -> Self {
        Self {
            n_plus,
            n_zero,
            n_minus,
        }
    }

    pub fn order(&self) -> usize {
        self.n_plus + self.n_zero + self.n_minus
    }
}

impl fmt::Display for Inertia {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {})", self.n_plus, self.n_zero, self.n_minus)
    }
}

pub fn inertia(m: &RationalMatrix) -> Result<Inertia> {
    if !m.is_symmetric() {
        return Err(Error::NotSymmetric);
    }
    let poly = char_poly(m);
    Ok(Inertia {
        n_plus: poly.sign_changes(false),
        n_zero: poly.zero_multiplicity(),
        n_minus: poly.sign_changes(true),
    })
}

/// `order - rank(M - μI)`, the multiplicity of `μ` for symmetric `M`.
pub fn eigen_multiplicity(m: &RationalMatrix, mu: &BigRational) -> Result<usize> {
    if !m.is_symmetric() {
        return Err(Error::NotSymmetric);
    }
    let shifted = m - &RationalMatrix::scalar(m.order(), mu.clone());
    Ok(m.order() - rank(&shifted))
}
