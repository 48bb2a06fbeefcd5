//! Text renderings of count triangles and series, plus a CSV reader for the cache.

use std::fmt::Write as _;

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{Signed, Zero};

use crate::counting::CountTriangle;
use crate::error::{Error, Result};
use crate::lattice::Family;
use crate::series::SeriesXY;

fn join<T: ToString>(row: &[T], sep: &str) -> String {
    row.iter().map(ToString::to_string).collect::<Vec<_>>().join(sep)
}

/// One line per row: `n: c_1 c_2 … c_k`.
pub fn to_text(triangle: &CountTriangle) -> String {
    let mut out = String::new();
    for (n, row) in triangle.rows() {
        let _ = writeln!(out, "{n}: {}", join(row, " "));
    }
    out
}

/// Header `n,k,count`, then one line per entry.
pub fn to_csv(triangle: &CountTriangle) -> String {
    let mut out = String::from("n,k,count\n");
    for (n, row) in triangle.rows() {
        for (i, c) in row.iter().enumerate() {
            let _ = writeln!(out, "{n},{},{c}", i + 1);
        }
    }
    out
}

/// Array of rows; counts are bare JSON integers of arbitrary length.
pub fn to_json(triangle: &CountTriangle) -> String {
    let rows: Vec<String> = triangle.rows().map(|(_, row)| format!("  [{}]", join(row, ", "))).collect();
    format!("[\n{}\n]\n", rows.join(",\n"))
}

/// OEIS b-file: the triangle read by rows, indexed from 1.
pub fn to_bfile(triangle: &CountTriangle) -> String {
    let mut out = format!("# family={} n_max={}\n", triangle.family(), triangle.n_max());
    let entries = triangle.rows().flat_map(|(_, row)| row.iter());
    for (i, c) in entries.enumerate() {
        let _ = writeln!(out, "{} {c}", i + 1);
    }
    out
}

/// `n: c_1 … c_k` for each `x^n` coefficient of a bivariate series, `n ≥ 1`.
pub fn series_dump(series: &SeriesXY, n_max: usize) -> String {
    let mut out = String::new();
    for n in 1..=n_max.min(series.order()) {
        let coeffs: &[BigInt] = series.term(n).coeffs();
        let shown = coeffs.get(1..).unwrap_or(&[]);
        let _ = writeln!(out, "{n}: {}", join(shown, " "));
    }
    out
}

/// Reads back the output of [`to_csv`].
pub fn from_csv(family: Family, text: &str) -> Result<CountTriangle> {
    let bad = |reason: String| Error::Cache {
        path: std::path::PathBuf::new(),
        reason,
    };
    let mut lines = text.lines();
    if lines.next() != Some("n,k,count") {
        return Err(bad("missing header".into()));
    }
    let mut rows: Vec<Vec<BigUint>> = Vec::new();
    for (i, line) in lines.enumerate() {
        let fields: Vec<&str> = line.split(',').collect();
        let [n, k, c] = fields[..] else {
            return Err(bad(format!("line {}: expected 3 fields", i + 2)));
        };
        let parse = |s: &str| s.parse::<usize>().map_err(|e| bad(format!("line {}: {e}", i + 2)));
        let (n, k) = (parse(n)?, parse(k)?);
        let c: BigUint = c.parse().map_err(|e| bad(format!("line {}: {e}", i + 2)))?;
        if n == 0 || k == 0 || n > rows.len() + 1 {
            return Err(bad(format!("line {}: entry out of order", i + 2)));
        }
        if n > rows.len() {
            rows.push(Vec::new());
        }
        let row = rows.last_mut().expect("row pushed above");
        if k != row.len() + 1 {
            return Err(bad(format!("line {}: entry out of order", i + 2)));
        }
        row.push(c);
    }
    if rows.is_empty() {
        return Err(bad("no rows".into()));
    }
    Ok(CountTriangle::from_rows(family, rows))
}

/// Decimal expansion truncated (not rounded) to `digits` places.
pub fn format_decimal(x: &BigRational, digits: usize) -> String {
    let negative = x.is_negative();
    let magnitude = x.abs();
    let whole = magnitude.floor().to_integer();
    let mut out = String::new();
    if negative && !(magnitude.is_zero()) {
        out.push('-');
    }
    out.push_str(&whole.to_string());
    if digits > 0 {
        let frac = magnitude - BigRational::from_integer(whole);
        let scaled = (frac * BigRational::from_integer(BigInt::from(10).pow(digits as u32))).floor().to_integer();
        let _ = write!(out, ".{:0>width$}", scaled.to_string(), width = digits);
    }
    out
}
