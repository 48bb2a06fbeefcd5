//! 2×2 transfer matrices over `PolyY`.
//!
//! States are ordered (Together, Separated) for rows and columns. A strip is
//! extended by multiplying its state vector on the left by the matrix, and
//! the count polynomial is the sum of the two components.

use std::ops::Mul;

use num_bigint::BigInt;
use num_traits::ToPrimitive;

use crate::counting::{binomial, CountTriangle, FibCache};
use crate::lattice::Family;
use crate::series::PolyY;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TransferMatrix2 {
    pub entries: [[PolyY; 2]; 2],
}

/// State vector, components ordered (Together, Separated).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StateVector(pub [PolyY; 2]);

impl StateVector {
    /// `(y, y²)`: a single column (bar) or a pair of hexagons, joined or split.
    pub fn initial() -> Self {
        StateVector([PolyY::from_i64s(&[0, 1]), PolyY::from_i64s(&[0, 0, 1])])
    }

    /// `[1 1] · v`
    pub fn total(&self) -> PolyY {
        &self.0[0] + &self.0[1]
    }
}

fn poly(coeffs: &[i64]) -> PolyY {
    PolyY::from_i64s(coeffs)
}

impl TransferMatrix2 {
    pub fn new(entries: [[PolyY; 2]; 2]) -> Self {
        TransferMatrix2 { entries }
    }

    pub fn identity() -> Self {
        TransferMatrix2::new([[PolyY::one(), PolyY::zero()], [PolyY::zero(), PolyY::one()]])
    }

    pub fn eval_at_one(&self) -> [[BigInt; 2]; 2] {
        let e = &self.entries;
        [
            [e[0][0].eval_at_one(), e[0][1].eval_at_one()],
            [e[1][0].eval_at_one(), e[1][1].eval_at_one()],
        ]
    }

    pub fn apply(&self, v: &StateVector) -> StateVector {
        let e = &self.entries;
        StateVector([
            &(&e[0][0] * &v.0[0]) + &(&e[0][1] * &v.0[1]),
            &(&e[1][0] * &v.0[0]) + &(&e[1][1] * &v.0[1]),
        ])
    }
}

impl Mul for &TransferMatrix2 {
    type Output = TransferMatrix2;

    fn mul(self, rhs: &TransferMatrix2) -> TransferMatrix2 {
        let (a, b) = (&self.entries, &rhs.entries);
        let cell = |i: usize, j: usize| &(&a[i][0] * &b[0][j]) + &(&a[i][1] * &b[1][j]);
        TransferMatrix2::new([[cell(0, 0), cell(0, 1)], [cell(1, 0), cell(1, 1)]])
    }
}

/// `H(y) = [[1, 1], [y, 1+y]]`, one hexagon at a time.
pub fn hex_matrix() -> TransferMatrix2 {
    TransferMatrix2::new([[poly(&[1]), poly(&[1])], [poly(&[0, 1]), poly(&[1, 1])]])
}

/// `Q(y) = [[1+y, 2+y], [y(2+y), (1+y)²]]`, one column of squares at a time.
pub fn bar_matrix() -> TransferMatrix2 {
    TransferMatrix2::new([
        [poly(&[1, 1]), poly(&[2, 1])],
        [poly(&[0, 2, 1]), poly(&[1, 2, 1])],
    ])
}

/// Binary powering; `O(log e)` matrix products.
pub fn matrix_power(m: &TransferMatrix2, mut e: u64) -> TransferMatrix2 {
    let mut acc = TransferMatrix2::identity();
    let mut base = m.clone();
    while e > 0 {
        if e & 1 == 1 {
            acc = &acc * &base;
        }
        e >>= 1;
        if e > 0 {
            base = &base * &base;
        }
    }
    acc
}

/// Coefficient of `y^k` is `d_k(n)`: `[1 1] · H^{n-2} · (y, y²)` for `n ≥ 2`.
pub fn hex_polynomial(n: usize) -> PolyY {
    assert!(n >= 1, "honeycomb length must be at least 1");
    if n == 1 {
        return poly(&[0, 1]);
    }
    matrix_power(&hex_matrix(), (n - 2) as u64)
        .apply(&StateVector::initial())
        .total()
}

/// Coefficient of `y^k` is `r_k(n)`: `[1 1] · Q^{n-1} · (y, y²)`.
pub fn bar_polynomial(n: usize) -> PolyY {
    assert!(n >= 1, "bar length must be at least 1");
    matrix_power(&bar_matrix(), (n - 1) as u64)
        .apply(&StateVector::initial())
        .total()
}

pub fn polynomial_for(family: Family, n: usize) -> PolyY {
    match family {
        Family::ChocolateBar => bar_polynomial(n),
        Family::Honeycomb => hex_polynomial(n),
    }
}

/// Rows `1..=n_max` by stepping the state vector once per unit of length.
pub fn triangle_by_transfer(family: Family, n_max: usize) -> CountTriangle {
    let (matrix, first_stepped) = match family {
        Family::ChocolateBar => (bar_matrix(), 1),
        Family::Honeycomb => (hex_matrix(), 2),
    };
    let mut rows = Vec::with_capacity(n_max);
    let mut state = StateVector::initial();
    for n in 1..=n_max {
        let p = if n < first_stepped {
            poly(&[0, 1])
        } else {
            if n > first_stepped {
                state = matrix.apply(&state);
            }
            state.total()
        };
        rows.push(p.to_count_row(family.k_max(n)).expect("transfer counts are nonnegative"));
    }
    CountTriangle::from_rows(family, rows)
}

fn binomial_poly(n: usize, upper_shift: i64) -> PolyY {
    let n = n as i64;
    PolyY::new(
        (1..=n)
            .map(|k| BigInt::from(binomial(n + k - 2 + upper_shift, n - k)))
            .collect(),
    )
}

/// `H(y)^n = [[p(n), s(n)], [y s(n), p(n+1)]]` with
/// `p(n) = Σ C(n+k-2, n-k) y^{k-1}` and `s(n) = Σ C(n+k-1, n-k) y^{k-1}`.
pub fn h_power_closed_form(n: usize) -> TransferMatrix2 {
    let p = |m| binomial_poly(m, 0);
    let s = binomial_poly(n, 1);
    TransferMatrix2::new([[p(n), s.clone()], [s.shift(1), p(n + 1)]])
}

pub fn verify_h_power_closed_form(n: usize) -> bool {
    matrix_power(&hex_matrix(), n as u64) == h_power_closed_form(n)
}

/// `H(1)^n = [[F_{2n-1}, F_{2n}], [F_{2n}, F_{2n+1}]]`
pub fn verify_fib_power(n: usize) -> bool {
    if n == 0 {
        return false;
    }
    let fib = FibCache::up_to(2 * n + 1);
    let f = |i: usize| BigInt::from(fib.get(i).clone());
    let expected = [[f(2 * n - 1), f(2 * n)], [f(2 * n), f(2 * n + 1)]];
    matrix_power(&hex_matrix(), n as u64).eval_at_one() == expected
}

/// Larger root of `λ² - tr·λ + det` for the matrix at `y = 1`.
pub fn dominant_eigenvalue_at_one(m: &TransferMatrix2) -> f64 {
    let [[a, b], [c, d]] = m.eval_at_one();
    let trace = (&a + &d).to_f64().unwrap_or(f64::NAN);
    let det = (&a * &d - &b * &c).to_f64().unwrap_or(f64::NAN);
    let disc = trace * trace - 4.0 * det;
    (trace + disc.max(0.0).sqrt()) / 2.0
}
