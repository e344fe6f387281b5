//! Part sizes of a complete multipartite graph `K_{n_1,...,n_t}`.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::format::ser_fraction;

/// The multiset `(n_1, ..., n_t)` of part sizes, stored in canonical order:
/// parts with `n_i >= 2` first in non-increasing order, then the `h` unit
/// parts. That order also fixes the vertex indexing of every matrix.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Partition {
    sizes: Vec<usize>,
    n: usize,
    t: usize,
    h: usize,
    s: usize,
}

impl Partition {
    pub fn new(sizes: &[i64]) -> Result<Self> {
        if sizes.len() < 2 {
            return Err(Error::EmptyOrSingletonPartition { parts: sizes.len() });
        }
        if let Some((index, &value)) = sizes.iter().enumerate().find(|(_, &v)| v < 1) {
            return Err(Error::NonPositivePart { index, value });
        }
        let mut canonical: Vec<usize> = sizes.iter().map(|&v| v as usize).collect();
        canonical.sort_unstable_by(|a, b| b.cmp(a));
        Ok(Self::from_canonical(canonical))
    }

    fn from_canonical(sizes: Vec<usize>) -> Self {
        debug_assert!(sizes.windows(2).all(|w| w[0] >= w[1]));
        let n = sizes.iter().sum();
        let t = sizes.len();
        let h = sizes.iter().filter(|&&v| v == 1).count();
        Self {
            sizes,
            n,
            t,
            h,
            s: t - h,
        }
    }

    pub fn sizes(&self) -> &[usize] {
        &self.sizes
    }

    /// Total number of vertices.
    pub fn n(&self) -> usize {
        self.n
    }

    /// Number of parts.
    pub fn t(&self) -> usize {
        self.t
    }

    /// Number of singleton parts.
    pub fn h(&self) -> usize {
        self.h
    }

    /// Number of parts with at least two vertices.
    pub fn s(&self) -> usize {
        self.s
    }

    /// The sizes of the non-singleton parts, `n_1, ..., n_s`.
    pub fn large_parts(&self) -> &[usize] {
        &self.sizes[..self.s]
    }

    pub fn is_all_large(&self) -> bool {
        self.h == 0
    }

    /// Part index of every vertex, in block order.
    pub fn vertex_parts(&self) -> Vec<usize> {
        self.sizes
            .iter()
            .enumerate()
            .flat_map(|(part, &size)| std::iter::repeat(part).take(size))
            .collect()
    }

    /// First vertex index of every part.
    pub fn offsets(&self) -> Vec<usize> {
        self.sizes
            .iter()
            .scan(0, |acc, &size| {
                let start = *acc;
                *acc += size;
                Some(start)
            })
            .collect()
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.sizes.iter().map(ToString::to_string).collect();
        f.write_str(&parts.join(","))
    }
}

impl FromStr for Partition {
    type Err = Error;

    /// Parses a comma-separated token such as `"2,2,1"`.
    fn from_str(token: &str) -> Result<Self> {
        let sizes = token
            .split(',')
            .map(|part| {
                part.trim()
                    .parse::<i64>()
                    .map_err(|e| Error::ParsePartition {
                        token: token.to_string(),
                        reason: format!("{:?}: {e}", part.trim()),
                    })
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(&sizes)
    }
}

/// Exact vanishing predicates for `det Δ` and `cof Δ`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Classification {
    pub det_zero: bool,
    pub cof_zero: bool,
    /// `(h - 1) - Σ_{i<=s} n_i / (3 n_i - 4)`; zero exactly when `det Δ = 0`.
    #[serde(serialize_with = "ser_fraction")]
    pub margin: BigRational,
    /// `h - Σ_{i<=s} n_i / (3 n_i - 4)`; zero exactly when `cof Δ = 0`.
    #[serde(serialize_with = "ser_fraction")]
    pub cof_margin: BigRational,
}

impl Classification {
    /// Necessary ranges on `h` for the flagged cases:
    /// `t/4 + 3/4 < h <= t/2 + 1/2` when `det Δ = 0` and
    /// `t/4 < h <= t/2` when `cof Δ = 0`.
    pub fn ranges_hold(&self, p: &Partition) -> bool {
        let (t, h) = (p.t(), p.h());
        let det_ok = !self.det_zero || (4 * h > t + 3 && 2 * h <= t + 1);
        let cof_ok = !self.cof_zero || (4 * h > t && 2 * h <= t);
        det_ok && cof_ok
    }
}

pub fn classify(p: &Partition) -> Classification {
    let sum = p
        .large_parts()
        .iter()
        .fold(BigRational::zero(), |acc, &ni| {
            acc + BigRational::new(BigInt::from(ni), BigInt::from(3 * ni as i64 - 4))
        });
    let h = BigRational::from_integer(BigInt::from(p.h()));
    let cof_margin = &h - &sum;
    let margin = &cof_margin - BigRational::one();
    Classification {
        det_zero: margin.is_zero(),
        cof_zero: cof_margin.is_zero(),
        margin,
        cof_margin,
    }
}

/// Every multiset partition with at least two parts and `2 <= n <= n_max`.
///
/// Ordered by `n`, then reverse-lexicographically on the non-increasing size
/// sequence, so `n_max = 3` yields `[1,1]`, `[2,1]`, `[1,1,1]`.
pub fn enumerate_partitions(n_max: usize) -> Partitions {
    Partitions {
        n: 2,
        n_max,
        current: (n_max >= 2).then(|| vec![2]),
    }
}

#[derive(Debug, Clone)]
pub struct Partitions {
    n: usize,
    n_max: usize,
    current: Option<Vec<usize>>,
}

impl Partitions {
    fn advance(&mut self) {
        let Some(parts) = self.current.as_mut() else {
            return;
        };
        match parts.iter().rposition(|&v| v > 1) {
            Some(k) => {
                let mut rest: usize = parts[k + 1..].iter().sum::<usize>() + 1;
                parts[k] -= 1;
                let cap = parts[k];
                parts.truncate(k + 1);
                while rest > 0 {
                    let take = rest.min(cap);
                    parts.push(take);
                    rest -= take;
                }
            }
            None => {
                self.n += 1;
                self.current = (self.n <= self.n_max).then(|| vec![self.n]);
            }
        }
    }
}

impl Iterator for Partitions {
    type Item = Partition;

    fn next(&mut self) -> Option<Partition> {
        loop {
            let parts = self.current.as_ref()?;
            if parts.len() >= 2 {
                let p = Partition::from_canonical(parts.clone());
                self.advance();
                return Some(p);
            }
            self.advance();
        }
    }
}
