//! Exact textual forms for rationals, big integers, and matrices.
//!
//! Fractions always print as `p/q` in lowest terms with `q > 0`; integral
//! values print without a denominator.

use num_bigint::BigInt;
use num_rational::BigRational;
use serde::Serializer;

use crate::matrix::RationalMatrix;

/// Documentation string attached to every JSON matrix.
pub const VERTEX_ORDER_DOC: &str = "rows and columns follow the canonical block order: \
parts with at least two vertices in non-increasing size, then the singleton parts; \
vertices of one part are contiguous";

pub fn fraction(value: &BigRational) -> String {
    // BigRational is always normalized with a positive denominator.
    if value.is_integer() {
        value.numer().to_string()
    } else {
        format!("{}/{}", value.numer(), value.denom())
    }
}

/// CSV body without a header row, one matrix row per line.
pub fn matrix_csv(m: &RationalMatrix) -> String {
    let mut out = String::new();
    for i in 0..m.order() {
        let row: Vec<String> = m.row(i).iter().map(fraction).collect();
        out.push_str(&row.join(","));
        out.push('\n');
    }
    out
}

pub fn matrix_json(m: &RationalMatrix) -> serde_json::Value {
    let rows: Vec<Vec<String>> = (0..m.order())
        .map(|i| m.row(i).iter().map(fraction).collect())
        .collect();
    serde_json::json!({
        "order": m.order(),
        "vertex_order": VERTEX_ORDER_DOC,
        "entries": rows,
    })
}

/// Right-aligned columns for terminal output.
pub fn matrix_pretty(m: &RationalMatrix) -> String {
    let cells: Vec<Vec<String>> = (0..m.order())
        .map(|i| m.row(i).iter().map(fraction).collect())
        .collect();
    let width = cells.iter().flatten().map(String::len).max().unwrap_or(1);
    let mut out = String::new();
    for row in &cells {
        let line: Vec<String> = row.iter().map(|c| format!("{c:>width$}")).collect();
        out.push_str(line.join("  ").trim_end());
        out.push('\n');
    }
    out
}

pub(crate) fn ser_fraction<S: Serializer>(value: &BigRational, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_str(&fraction(value))
}

pub(crate) fn ser_fractions<S: Serializer>(
    values: &[BigRational],
    s: S,
) -> Result<S::Ok, S::Error> {
    s.collect_seq(values.iter().map(fraction))
}

pub(crate) fn ser_fraction_grid<S: Serializer>(
    values: &[Vec<BigRational>],
    s: S,
) -> Result<S::Ok, S::Error> {
    s.collect_seq(
        values
            .iter()
            .map(|row| row.iter().map(fraction).collect::<Vec<_>>()),
    )
}

pub(crate) fn ser_decimal<S: Serializer>(value: &BigInt, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_str(&value.to_string())
}

pub(crate) fn ser_decimals<S: Serializer>(values: &[BigInt], s: S) -> Result<S::Ok, S::Error> {
    s.collect_seq(values.iter().map(ToString::to_string))
}

pub(crate) fn ser_decimal_grid<S: Serializer>(
    values: &[Vec<BigInt>],
    s: S,
) -> Result<S::Ok, S::Error> {
    s.collect_seq(
        values
            .iter()
            .map(|row| row.iter().map(ToString::to_string).collect::<Vec<_>>()),
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(BigInt::from(n), BigInt::from(d))
    }

    #[test]
    fn fractions_are_reduced_with_positive_denominator() {
        assert_eq!(fraction(&q(6, 4)), "3/2");
        assert_eq!(fraction(&q(3, -6)), "-1/2");
        assert_eq!(fraction(&q(-8, -4)), "2");
        assert_eq!(fraction(&q(0, 7)), "0");
    }

    #[test]
    fn csv_has_no_header() {
        let m = RationalMatrix::from_fn(2, |i, j| q((i * 2 + j) as i64, 3));
        assert_eq!(matrix_csv(&m), "0,1/3\n2/3,1\n");
    }

    #[test]
    fn json_carries_vertex_order() {
        let m = RationalMatrix::identity(2);
        let v = matrix_json(&m);
        assert_eq!(v["order"], 2);
        assert_eq!(v["entries"][0][0], "1");
        assert_eq!(v["entries"][0][1], "0");
        assert!(v["vertex_order"].as_str().unwrap().contains("block order"));
    }
}
