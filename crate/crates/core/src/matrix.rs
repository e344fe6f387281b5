//! Dense square matrices over arbitrary-precision rationals.

use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RationalMatrix {
    order: usize,
    entries: Vec<BigRational>,
    symmetric: bool,
}

impl RationalMatrix {
    pub fn from_fn(order: usize, mut f: impl FnMut(usize, usize) -> BigRational) -> Self {
        let mut entries = Vec::with_capacity(order * order);
        for i in 0..order {
            for j in 0..order {
                entries.push(f(i, j));
            }
        }
        Self::from_entries(order, entries)
    }

    /// Row-major entries; panics unless `entries.len() == order * order`.
    pub fn from_entries(order: usize, entries: Vec<BigRational>) -> Self {
        assert_eq!(entries.len(), order * order, "entry count must be order²");
        let symmetric = (0..order)
            .all(|i| (i + 1..order).all(|j| entries[i * order + j] == entries[j * order + i]));
        Self {
            order,
            entries,
            symmetric,
        }
    }

    pub fn from_integers(rows: &[Vec<i64>]) -> Self {
        let order = rows.len();
        Self::from_fn(order, |i, j| {
            assert_eq!(rows[i].len(), order, "row {i} has wrong length");
            BigRational::from_integer(BigInt::from(rows[i][j]))
        })
    }

    pub fn zeros(order: usize) -> Self {
        Self::from_fn(order, |_, _| BigRational::zero())
    }

    pub fn identity(order: usize) -> Self {
        Self::scalar(order, BigRational::one())
    }

    pub fn scalar(order: usize, value: BigRational) -> Self {
        Self::from_fn(order, |i, j| {
            if i == j {
                value.clone()
            } else {
                BigRational::zero()
            }
        })
    }

    pub fn diagonal(values: &[BigRational]) -> Self {
        Self::from_fn(values.len(), |i, j| {
            if i == j {
                values[i].clone()
            } else {
                BigRational::zero()
            }
        })
    }

    /// `u vᵗ`.
    pub fn outer(u: &[BigRational], v: &[BigRational]) -> Self {
        assert_eq!(u.len(), v.len());
        Self::from_fn(u.len(), |i, j| &u[i] * &v[j])
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn is_symmetric(&self) -> bool {
        self.symmetric
    }

    pub fn get(&self, i: usize, j: usize) -> &BigRational {
        &self.entries[i * self.order + j]
    }

    pub fn row(&self, i: usize) -> &[BigRational] {
        &self.entries[i * self.order..(i + 1) * self.order]
    }

    pub fn entries(&self) -> &[BigRational] {
        &self.entries
    }

    pub fn rows(&self) -> Vec<Vec<BigRational>> {
        (0..self.order).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.order, |i, j| self.get(j, i).clone())
    }

    pub fn scale(&self, factor: &BigRational) -> Self {
        Self::from_entries(
            self.order,
            self.entries.iter().map(|e| e * factor).collect(),
        )
    }

    /// Submatrix with row `row` and column `col` deleted.
    pub fn minor(&self, row: usize, col: usize) -> Self {
        let order = self.order - 1;
        Self::from_fn(order, |i, j| {
            let si = if i < row { i } else { i + 1 };
            let sj = if j < col { j } else { j + 1 };
            self.get(si, sj).clone()
        })
    }

    pub fn mul_vec(&self, v: &[BigRational]) -> Vec<BigRational> {
        assert_eq!(v.len(), self.order);
        (0..self.order)
            .map(|i| self.row(i).iter().zip(v).map(|(a, b)| a * b).sum())
            .collect()
    }

    pub fn row_sums(&self) -> Vec<BigRational> {
        (0..self.order).map(|i| self.row(i).iter().sum()).collect()
    }

    pub fn col_sums(&self) -> Vec<BigRational> {
        (0..self.order)
            .map(|j| (0..self.order).map(|i| self.get(i, j)).sum())
            .collect()
    }

    /// Positions where `self` and `other` differ, with both values.
    pub fn mismatches(&self, other: &Self) -> Vec<(usize, usize, BigRational, BigRational)> {
        assert_eq!(self.order, other.order);
        let mut out = Vec::new();
        for i in 0..self.order {
            for j in 0..self.order {
                if self.get(i, j) != other.get(i, j) {
                    out.push((i, j, self.get(i, j).clone(), other.get(i, j).clone()));
                }
            }
        }
        out
    }

    fn zip_with(
        &self,
        other: &Self,
        f: impl Fn(&BigRational, &BigRational) -> BigRational,
    ) -> Self {
        assert_eq!(self.order, other.order, "matrix orders differ");
        Self::from_entries(
            self.order,
            self.entries
                .iter()
                .zip(&other.entries)
                .map(|(a, b)| f(a, b))
                .collect(),
        )
    }
}

impl Add for &RationalMatrix {
    type Output = RationalMatrix;

    fn add(self, rhs: Self) -> RationalMatrix {
        self.zip_with(rhs, |a, b| a + b)
    }
}

impl Sub for &RationalMatrix {
    type Output = RationalMatrix;

    fn sub(self, rhs: Self) -> RationalMatrix {
        self.zip_with(rhs, |a, b| a - b)
    }
}

impl Neg for &RationalMatrix {
    type Output = RationalMatrix;

    fn neg(self) -> RationalMatrix {
        RationalMatrix::from_entries(self.order, self.entries.iter().map(|e| -e).collect())
    }
}

impl Mul for &RationalMatrix {
    type Output = RationalMatrix;

    fn mul(self, rhs: Self) -> RationalMatrix {
        assert_eq!(self.order, rhs.order, "matrix orders differ");
        let n = self.order;
        RationalMatrix::from_fn(n, |i, j| {
            let mut acc = BigRational::zero();
            for k in 0..n {
                let a = self.get(i, k);
                if !a.is_zero() {
                    acc += a * rhs.get(k, j);
                }
            }
            acc
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64) -> BigRational {
        BigRational::from_integer(BigInt::from(n))
    }

    #[test]
    fn symmetry_tag() {
        assert!(RationalMatrix::from_integers(&[vec![1, 2], vec![2, 5]]).is_symmetric());
        assert!(!RationalMatrix::from_integers(&[vec![1, 2], vec![3, 5]]).is_symmetric());
    }

    #[test]
    fn arithmetic() {
        let a = RationalMatrix::from_integers(&[vec![1, 2], vec![3, 4]]);
        let b = RationalMatrix::from_integers(&[vec![0, 1], vec![1, 0]]);
        assert_eq!(
            &a * &b,
            RationalMatrix::from_integers(&[vec![2, 1], vec![4, 3]])
        );
        assert_eq!(&(&a - &a) + &b, b);
        assert_eq!(a.transpose().get(0, 1), &q(3));
        assert_eq!(a.mul_vec(&[q(1), q(1)]), vec![q(3), q(7)]);
        assert_eq!(a.minor(0, 1), RationalMatrix::from_integers(&[vec![3]]));
        assert_eq!(a.row_sums(), vec![q(3), q(7)]);
        assert_eq!(a.col_sums(), vec![q(4), q(6)]);
        assert_eq!(a.mismatches(&b).len(), 4);
    }
}
