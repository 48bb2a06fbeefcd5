//! Structural checks on count triangles: column recurrences, polynomial
//! columns and diagonals, expected part counts, and Fibonacci identities.
//!
//! Everything is exact until the final comparison against an irrational
//! target; there the observed value is either rounded to `f64` or scaled by
//! a power of ten and compared as an integer.

use std::fmt;
use std::ops::RangeInclusive;

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::counting::{bar_total, binomial, hex_total, CountTriangle, FibCache};
use crate::error::{Error, Result};
use crate::lattice::{Family, Lattice};
use crate::oracle::{oracle_refined_counts, OracleConfig};

fn big(x: &BigUint) -> BigInt {
    BigInt::from(x.clone())
}

fn rational(x: &BigUint) -> BigRational {
    BigRational::from_integer(big(x))
}

fn require_rows(triangle: &CountTriangle, needed: usize) -> Result<()> {
    if triangle.n_max() < needed {
        return Err(Error::InsufficientRows {
            needed,
            available: triangle.n_max(),
        });
    }
    Ok(())
}

/// `Σ_{j=0}^{2k-1} (-1)^j C(2k-1, j) c_k(n-j)`; entries with `n-j < 1` count as zero.
pub fn column_recurrence_residual(triangle: &CountTriangle, k: usize, n: usize) -> BigInt {
    let order = 2 * k as i64 - 1;
    (0..=order)
        .filter(|&j| n as i64 - j >= 1)
        .map(|j| {
            let term = BigInt::from(binomial(order, j)) * big(&triangle.get(n - j as usize, k));
            if j % 2 == 0 { term } else { -term }
        })
        .sum()
}

/// The residual vanishes for every `2k ≤ n ≤ n_max`.
pub fn check_column_recurrence(triangle: &CountTriangle, k: usize, n_max: usize) -> Result<bool> {
    if k < 1 {
        return Err(Error::InvalidColumn);
    }
    require_rows(triangle, n_max)?;
    Ok((2 * k..=n_max).all(|n| column_recurrence_residual(triangle, k, n).is_zero()))
}

/// Polynomial in `n` with exact rational coefficients, lowest power first.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ColumnPolynomial {
    /// Column `k`, or the offset `j` of the diagonal `c_{k_max(n)-j}(n)`.
    pub index: usize,
    pub coefficients: Vec<BigRational>,
    pub fitted_range: RangeInclusive<usize>,
}

impl ColumnPolynomial {
    pub fn eval(&self, n: usize) -> BigRational {
        let x = BigRational::from_integer(BigInt::from(n));
        self.coefficients
            .iter()
            .rev()
            .fold(BigRational::zero(), |acc, c| acc * &x + c)
    }

    pub fn degree(&self) -> Option<usize> {
        self.coefficients.iter().rposition(|c| !c.is_zero())
    }

    pub fn leading_coefficient(&self) -> BigRational {
        self.degree()
            .map(|d| self.coefficients[d].clone())
            .unwrap_or_else(BigRational::zero)
    }
}

impl fmt::Display for ColumnPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let Some(degree) = self.degree() else {
            return f.write_str("0");
        };
        for power in (0..=degree).rev() {
            let c = &self.coefficients[power];
            if c.is_zero() {
                continue;
            }
            let sign = if c.is_negative() { "-" } else { "+" };
            if power == degree {
                if c.is_negative() {
                    f.write_str("-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            let mag = c.abs();
            let show_coeff = power == 0 || !mag.is_one();
            if show_coeff {
                if mag.is_integer() {
                    write!(f, "{}", mag.numer())?;
                } else {
                    write!(f, "({}/{})", mag.numer(), mag.denom())?;
                }
            }
            match power {
                0 => {}
                1 => f.write_str("n")?,
                p => write!(f, "n^{p}")?,
            }
        }
        Ok(())
    }
}

/// Interpolates `values[i]` at `n = first + i` through forward differences,
/// then expands `Σ Δ^j v_0 · C(n - first, j)` into the monomial basis.
pub fn newton_forward_fit(first: usize, values: &[BigInt]) -> Vec<BigRational> {
    let mut diffs: Vec<BigInt> = values.to_vec();
    let mut leading = Vec::with_capacity(values.len());
    while let Some(head) = diffs.first() {
        leading.push(head.clone());
        diffs = diffs.windows(2).map(|w| &w[1] - &w[0]).collect();
    }

    let mut result = vec![BigRational::zero(); values.len().max(1)];
    // basis_j(n) = C(n - first, j), kept in monomial form
    let mut basis = vec![BigRational::one()];
    for (j, delta) in leading.iter().enumerate() {
        if j > 0 {
            let shift = BigRational::from_integer(BigInt::from(first + j - 1));
            let scale = BigRational::from_integer(BigInt::from(j));
            let mut next = vec![BigRational::zero(); basis.len() + 1];
            for (p, c) in basis.iter().enumerate() {
                next[p + 1] += c / &scale;
                next[p] -= c * &shift / &scale;
            }
            basis = next;
        }
        let delta = BigRational::from_integer(delta.clone());
        for (p, c) in basis.iter().enumerate() {
            result[p] += c * &delta;
        }
    }
    result
}

fn fit_and_check(
    triangle: &CountTriangle,
    index: usize,
    label: String,
    fitted_range: RangeInclusive<usize>,
    checked_from: usize,
    entry: impl Fn(usize) -> BigUint,
) -> Result<ColumnPolynomial> {
    require_rows(triangle, *fitted_range.end())?;
    let values: Vec<BigInt> = fitted_range.clone().map(|n| big(&entry(n))).collect();
    let poly = ColumnPolynomial {
        index,
        coefficients: newton_forward_fit(*fitted_range.start(), &values),
        fitted_range,
    };
    for n in checked_from..=triangle.n_max() {
        let actual = rational(&entry(n));
        let predicted = poly.eval(n);
        if predicted != actual {
            return Err(Error::NotPolynomial {
                series: label,
                n,
                predicted: predicted.to_string(),
                actual: actual.to_string(),
            });
        }
    }
    Ok(poly)
}

/// Fits column `k` on rows `k..=3k-2` (degree ≤ 2k-2) and requires every
/// other row of the triangle to match the fitted polynomial exactly.
pub fn fit_column(triangle: &CountTriangle, k: usize) -> Result<ColumnPolynomial> {
    if k < 1 {
        return Err(Error::InvalidColumn);
    }
    fit_and_check(
        triangle,
        k,
        format!("{} column k={k}", triangle.family()),
        k..=3 * k - 2,
        1,
        |n| triangle.get(n, k),
    )
}

/// First row where the diagonal `c_{k_max(n)-j}(n)` has a nonnegative index.
fn diagonal_start(family: Family, j: usize) -> usize {
    (1..).find(|&n| family.k_max(n) >= j).unwrap()
}

/// Fits `c_{k_max(n)-j}(n)` with a polynomial of degree ≤ j and checks all
/// later rows against it.
pub fn fit_diagonal(triangle: &CountTriangle, j: usize) -> Result<ColumnPolynomial> {
    let family = triangle.family();
    let start = diagonal_start(family, j);
    fit_and_check(
        triangle,
        j,
        format!("{family} diagonal j={j}"),
        start..=start + j,
        start,
        |n| triangle.get(n, family.k_max(n) - j),
    )
}

/// `3^j / j!`, the leading coefficient of the bar diagonal `r_{2n-j}(n)`.
pub fn bar_diagonal_leading_coefficient(j: usize) -> BigRational {
    let num = BigInt::from(3).pow(j as u32);
    let den: BigInt = (1..=j).map(BigInt::from).product();
    BigRational::new(num, den)
}

/// Mean part count over all divisions of row `n`, every division equally likely.
pub fn expected_parts(triangle: &CountTriangle, n: usize) -> Result<BigRational> {
    let row = triangle.row(n).ok_or(Error::EmptyRow { n })?;
    let total: BigUint = row.iter().sum();
    if total.is_zero() {
        return Err(Error::EmptyRow { n });
    }
    let weighted: BigUint = row.iter().enumerate().map(|(i, c)| c * (i + 1)).sum();
    Ok(BigRational::new(big(&weighted), big(&total)))
}

/// `a + b·√c` with rational parts.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuadraticSurd {
    pub rational: BigRational,
    pub surd_coefficient: BigRational,
    pub radicand: BigRational,
}

impl QuadraticSurd {
    fn new(a: (i64, i64), b: (i64, i64), c: (i64, i64)) -> Self {
        let r = |(p, q): (i64, i64)| BigRational::new(BigInt::from(p), BigInt::from(q));
        QuadraticSurd {
            rational: r(a),
            surd_coefficient: r(b),
            radicand: r(c),
        }
    }

    pub fn to_f64(&self) -> f64 {
        let f = |x: &BigRational| x.to_f64().unwrap_or(f64::NAN);
        f(&self.rational) + f(&self.surd_coefficient) * f(&self.radicand).sqrt()
    }

    /// `floor(|x - self| · 10^digits)`, exact up to one unit of the last place.
    pub fn scaled_distance(&self, x: &BigRational, digits: u32) -> BigInt {
        let scale = BigInt::from(10).pow(digits);
        let shifted = (x - &self.rational) * BigRational::from_integer(scale.clone());
        // √c · 10^d = √(num · 10^{2d} / den)
        let under = (self.radicand.numer() * &scale * &scale) / self.radicand.denom();
        let root = BigRational::from_integer(under.sqrt());
        (shifted - &self.surd_coefficient * root).abs().floor().to_integer()
    }
}

/// Limits the observed statistics should approach.
#[derive(Debug, Clone)]
pub struct AsymptoticProfile {
    pub family: Family,
    /// Exact form of `slope_target`.
    pub slope_exact: QuadraticSurd,
    pub slope_target: f64,
    pub growth_target: f64,
    /// `observed_slope[n-1] = E(n+1) - E(n)`.
    pub observed_slope: Vec<f64>,
    /// `observed_growth[n-1] = total(n+1) / total(n)`.
    pub observed_growth: Vec<f64>,
}

impl AsymptoticProfile {
    /// Targets only; observed sequences empty.
    pub fn targets(family: Family) -> Self {
        let (slope_exact, growth_target) = match family {
            // 3/2 - √(2/5) and 3 + √10
            Family::ChocolateBar => (QuadraticSurd::new((3, 2), (-1, 1), (2, 5)), 3.0 + 10f64.sqrt()),
            // √(1/5) and (3 + √5)/2
            Family::Honeycomb => (QuadraticSurd::new((0, 1), (1, 1), (1, 5)), (3.0 + 5f64.sqrt()) / 2.0),
        };
        AsymptoticProfile {
            family,
            slope_target: slope_exact.to_f64(),
            slope_exact,
            growth_target,
            observed_slope: Vec::new(),
            observed_growth: Vec::new(),
        }
    }

    /// Fills the observed sequences for `n = 1..=n_max` from an exact triangle
    /// with at least `n_max + 1` rows.
    pub fn observe(family: Family, triangle: &CountTriangle, n_max: usize) -> Result<Self> {
        require_rows(triangle, n_max + 1)?;
        let mut profile = AsymptoticProfile::targets(family);
        let expected: Vec<BigRational> = (1..=n_max + 1)
            .map(|n| expected_parts(triangle, n))
            .collect::<Result<_>>()?;
        profile.observed_slope = expected
            .windows(2)
            .map(|w| (&w[1] - &w[0]).to_f64().unwrap_or(f64::NAN))
            .collect();
        profile.observed_growth = (1..=n_max)
            .map(|n| {
                let ratio = BigRational::new(big(&triangle.row_sum(n + 1)), big(&triangle.row_sum(n)));
                ratio.to_f64().unwrap_or(f64::NAN)
            })
            .collect();
        Ok(profile)
    }
}

/// Observed slope `E(n+1) - E(n)`.
pub fn slope_convergence(profile: &AsymptoticProfile, n: usize) -> f64 {
    n.checked_sub(1)
        .and_then(|i| profile.observed_slope.get(i))
        .copied()
        .unwrap_or(f64::NAN)
}

/// `E(n+1) - E(n)` as an exact rational.
pub fn slope_exact(triangle: &CountTriangle, n: usize) -> Result<BigRational> {
    Ok(expected_parts(triangle, n + 1)? - expected_parts(triangle, n)?)
}

/// Total division count of a strip from the closed recurrences.
pub fn total_count(family: Family, n: usize) -> BigUint {
    match family {
        Family::ChocolateBar => bar_total(n),
        Family::Honeycomb => hex_total(n),
    }
}

/// `d(n+m)` rebuilt from the two strips' `(d, s, t)`: pieces that stay apart,
/// plus every way of merging parts across the glued boundary.
pub fn gluing_decomposition(left: [&BigUint; 3], right: [&BigUint; 3]) -> BigUint {
    let [d_n, s_n, t_n] = left;
    let [d_m, s_m, t_m] = right;
    d_n * d_m + 4u32 * s_n * s_m + t_n * t_m + 2u32 * s_n * t_m + 2u32 * t_n * s_m
}

/// `(d, s, t) = (F_{2n-1}, F_{2n-2}, F_{2n-3})`, with `F_{-1} = 1`.
fn fib_dst(fib: &FibCache, n: usize) -> [BigUint; 3] {
    let f = |i: i64| fib.signed(i).to_biguint().expect("F_i ≥ 0 for i ≥ -1");
    let n = n as i64;
    [f(2 * n - 1), f(2 * n - 2), f(2 * n - 3)]
}

/// `F_{2n+2m-1} = F_{2n-1} F_{2m-1} + F_{2n} F_{2m}` and the gluing decomposition
/// of `d(n+m)` with Fibonacci-valued `d`, `s`, `t`.
pub fn verify_gluing_identity(n: usize, m: usize) -> bool {
    if n == 0 || m == 0 {
        return false;
    }
    let fib = FibCache::up_to(2 * (n + m));
    let identity = fib.get(2 * n + 2 * m - 1) == &(fib.get(2 * n - 1) * fib.get(2 * m - 1) + fib.get(2 * n) * fib.get(2 * m));
    let [dn, sn, tn] = fib_dst(&fib, n);
    let [dm, sm, tm] = fib_dst(&fib, m);
    let decomposition = gluing_decomposition([&dn, &sn, &tn], [&dm, &sm, &tm]);
    identity && &decomposition == fib.get(2 * n + 2 * m - 1)
}

fn oracle_dst(n: usize, config: &OracleConfig) -> Result<[BigUint; 3]> {
    if n == 1 {
        // a lone hexagon merges like a joined tail
        return Ok([BigUint::one(), BigUint::zero(), BigUint::one()]);
    }
    let counts = oracle_refined_counts(Lattice::hex(n), config)?;
    Ok([counts.grand_total(), counts.separated_total(), counts.together_total()])
}

/// Same decomposition from brute-force counts: it must reproduce the oracle's
/// `d(n+m)` and match the Fibonacci-valued terms one by one.
pub fn oracle_gluing_check(n: usize, m: usize, config: &OracleConfig) -> Result<bool> {
    if n == 0 || m == 0 {
        return Err(Error::EmptyLattice);
    }
    config.check(Lattice::hex(n + m))?;
    let left = oracle_dst(n, config)?;
    let right = oracle_dst(m, config)?;
    let glued = oracle_refined_counts(Lattice::hex(n + m), config)?.grand_total();
    let fib = FibCache::up_to(2 * (n + m));
    let terms_match = left == fib_dst(&fib, n) && right == fib_dst(&fib, m);
    let [dn, sn, tn] = &left;
    let [dm, sm, tm] = &right;
    Ok(terms_match && gluing_decomposition([dn, sn, tn], [dm, sm, tm]) == glued)
}

/// `Σ_{k=1}^{n} C(n+k-2, n-k) = F_{2n-1}` for every `1 ≤ n ≤ n_max`.
pub fn verify_binomial_fib_sum(n_max: usize) -> bool {
    let fib = FibCache::up_to(2 * n_max.max(1));
    (1..=n_max as i64).all(|n| {
        let sum: BigUint = (1..=n).map(|k| binomial(n + k - 2, n - k)).sum();
        &sum == fib.get(2 * n as usize - 1)
    })
}
