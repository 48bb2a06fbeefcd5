//! Count triangles from recurrences and closed forms.
//!
//! Bars are built by iterating the coupled system for `r_k(n)` (all
//! divisions) and `q_k(n)` (last column split), and cross-checked against
//! the single recurrence that eliminates `q` using two rows of history.
//! Honeycomb rows come from `d_k(n+1) = d_{k-1}(n) + 2 d_k(n) - d_k(n-1)`
//! and agree with the binomial `C(n+k-2, n-k)`.

use num_bigint::{BigInt, BigUint, Sign};
use num_traits::{One, Zero};

use crate::lattice::Family;

/// Rows `n = 1..=n_max` of `c_k(n)` for `k = 1..=k_max(n)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CountTriangle {
    family: Family,
    rows: Vec<Vec<BigUint>>,
}

impl CountTriangle {
    /// `rows[n-1][k-1]` holds `c_k(n)`. Rows are padded or truncated to `k_max(n)`.
    pub fn from_rows(family: Family, mut rows: Vec<Vec<BigUint>>) -> Self {
        for (i, row) in rows.iter_mut().enumerate() {
            row.resize(family.k_max(i + 1), BigUint::zero());
        }
        CountTriangle { family, rows }
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn n_max(&self) -> usize {
        self.rows.len()
    }

    pub fn row(&self, n: usize) -> Option<&[BigUint]> {
        n.checked_sub(1).and_then(|i| self.rows.get(i)).map(Vec::as_slice)
    }

    pub fn rows(&self) -> impl Iterator<Item = (usize, &[BigUint])> {
        self.rows.iter().enumerate().map(|(i, r)| (i + 1, r.as_slice()))
    }

    /// `c_k(n)`, zero for any `k` or `n` outside the triangle.
    pub fn get(&self, n: usize, k: usize) -> BigUint {
        self.get_ref(n, k).cloned().unwrap_or_default()
    }

    fn get_ref(&self, n: usize, k: usize) -> Option<&BigUint> {
        self.row(n).and_then(|r| k.checked_sub(1).and_then(|i| r.get(i)))
    }

    pub fn row_sum(&self, n: usize) -> BigUint {
        self.row(n).map(|r| r.iter().sum()).unwrap_or_default()
    }

    /// Overwrites one entry; used to inject faults when testing disagreement paths.
    pub fn set(&mut self, n: usize, k: usize, value: BigUint) {
        self.rows[n - 1][k - 1] = value;
    }

    /// First `(n, k)` where the two triangles differ, over the shorter of the two.
    pub fn first_difference(&self, other: &CountTriangle) -> Option<(usize, usize)> {
        let n_max = self.n_max().min(other.n_max());
        for n in 1..=n_max {
            for k in 1..=self.family.k_max(n).max(other.family.k_max(n)) {
                if self.get(n, k) != other.get(n, k) {
                    return Some((n, k));
                }
            }
        }
        None
    }
}

/// Fibonacci numbers `F_0 = 0, F_1 = 1, …` up to a fixed index.
#[derive(Debug, Clone)]
pub struct FibCache {
    values: Vec<BigUint>,
}

impl FibCache {
    pub fn up_to(max_index: usize) -> Self {
        let mut values = vec![BigUint::zero(), BigUint::one()];
        while values.len() <= max_index {
            let next = &values[values.len() - 1] + &values[values.len() - 2];
            values.push(next);
        }
        values.truncate(max_index.max(1) + 1);
        FibCache { values }
    }

    pub fn max_index(&self) -> usize {
        self.values.len() - 1
    }

    /// Panics past the cached range.
    pub fn get(&self, index: usize) -> &BigUint {
        &self.values[index]
    }

    /// `F_i` extended to negative indices by `F_{-i} = (-1)^{i+1} F_i`.
    pub fn signed(&self, index: i64) -> BigInt {
        let magnitude = BigInt::from(self.values[index.unsigned_abs() as usize].clone());
        if index < 0 && index % 2 == 0 {
            -magnitude
        } else {
            magnitude
        }
    }
}

pub fn fibonacci(index: usize) -> BigUint {
    FibCache::up_to(index).get(index).clone()
}

/// `C(n, k)` by the multiplicative formula; zero when `k < 0`, `n < 0` or `k > n`.
pub fn binomial(n: i64, k: i64) -> BigUint {
    if n < 0 || k < 0 || k > n {
        return BigUint::zero();
    }
    let k = k.min(n - k) as u64;
    let n = n as u64;
    let mut acc = BigUint::one();
    for i in 0..k {
        acc *= n - i;
        acc /= i + 1;
    }
    acc
}

fn to_natural(x: BigInt) -> BigUint {
    match x.sign() {
        Sign::Minus => panic!("negative count {x} from a recurrence"),
        _ => x.magnitude().clone(),
    }
}

fn signed_at(row: &[BigInt], k: isize) -> BigInt {
    if k < 1 {
        return BigInt::zero();
    }
    row.get(k as usize - 1).cloned().unwrap_or_default()
}

fn natural_at(row: &[BigUint], k: isize) -> BigUint {
    if k < 1 {
        return BigUint::zero();
    }
    row.get(k as usize - 1).cloned().unwrap_or_default()
}

/// Joint `(r, q)` rows for `n = 1..=n_max`, indexed `[n-1][k-1]`, `k ≤ 2n`.
pub fn joint_system(n_max: usize) -> (Vec<Vec<BigUint>>, Vec<Vec<BigUint>>) {
    let one = BigUint::one;
    let mut r = vec![vec![one(), one()]];
    let mut q = vec![vec![BigUint::zero(), one()]];
    for n in 1..n_max {
        let (r_n, q_n) = (&r[n - 1], &q[n - 1]);
        let width = 2 * (n + 1);
        let mut r_next = Vec::with_capacity(width);
        let mut q_next = Vec::with_capacity(width);
        for k in 1..=width as isize {
            let r1 = natural_at(r_n, k - 1);
            let r2 = natural_at(r_n, k - 2);
            let qk = natural_at(q_n, k);
            r_next.push(natural_at(r_n, k) + 3u32 * &r1 + &r2 + 2u32 * &qk);
            q_next.push(2u32 * r1 + r2 + qk);
        }
        r.push(r_next);
        q.push(q_next);
    }
    r.truncate(n_max);
    q.truncate(n_max);
    (r, q)
}

/// Bar rows from the q-free recurrence, seeded with rows 1 and 2 of the joint system.
pub fn bar_triangle_by_history(n_max: usize) -> CountTriangle {
    let (seed, _) = joint_system(n_max.min(2));
    let mut rows: Vec<Vec<BigInt>> = seed
        .into_iter()
        .map(|row| row.into_iter().map(BigInt::from).collect())
        .collect();
    for n in 2..n_max {
        let (cur, prev) = (&rows[n - 1], &rows[n - 2]);
        let next: Vec<BigInt> = (1..=2 * (n as isize + 1))
            .map(|k| {
                signed_at(cur, k - 2) + 3 * signed_at(cur, k - 1) + 2 * signed_at(cur, k)
                    + signed_at(prev, k - 2)
                    + signed_at(prev, k - 1)
                    - signed_at(prev, k)
            })
            .collect();
        rows.push(next);
    }
    let rows = rows
        .into_iter()
        .map(|row| row.into_iter().map(to_natural).collect())
        .collect();
    CountTriangle::from_rows(Family::ChocolateBar, rows)
}

pub fn bar_triangle_by_system(n_max: usize) -> CountTriangle {
    CountTriangle::from_rows(Family::ChocolateBar, joint_system(n_max).0)
}

/// `r_k(n)` for `n ≤ n_max`; the joint system and the history recurrence must agree.
pub fn bar_triangle(n_max: usize) -> CountTriangle {
    assert!(n_max >= 1, "n_max must be at least 1");
    let by_system = bar_triangle_by_system(n_max);
    let by_history = bar_triangle_by_history(n_max);
    if let Some((n, k)) = by_system.first_difference(&by_history) {
        panic!("bar recurrences disagree at n={n}, k={k}");
    }
    by_system
}

/// `q_k(n)`: bar divisions into k parts whose last column is split.
pub fn bar_q_counts(n_max: usize) -> Vec<Vec<BigUint>> {
    joint_system(n_max).1
}

/// Total bar divisions `r(n)` from `r(n+1) = 6 r(n) + r(n-1)`, `r(1) = 2`, `r(2) = 12`.
pub fn bar_total(n: usize) -> BigUint {
    assert!(n >= 1, "bar length must be at least 1");
    let (mut prev, mut cur) = (BigUint::from(2u32), BigUint::from(12u32));
    if n == 1 {
        return prev;
    }
    for _ in 2..n {
        let next = 6u32 * &cur + &prev;
        prev = std::mem::replace(&mut cur, next);
    }
    cur
}

/// `d_k(n)` with the conventions `d_1(0) = 1` and `d_k(n) = 0` outside `1 ≤ k ≤ n`.
pub fn hex_triangle(n_max: usize) -> CountTriangle {
    assert!(n_max >= 1, "n_max must be at least 1");
    let mut rows: Vec<Vec<BigInt>> = vec![vec![BigInt::one()], vec![BigInt::one()]];
    for n in 1..n_max {
        let (cur, prev) = (&rows[n], &rows[n - 1]);
        let next = (1..=(n as isize + 1))
            .map(|k| signed_at(cur, k - 1) + 2 * signed_at(cur, k) - signed_at(prev, k))
            .collect();
        rows.push(next);
    }
    let rows = rows
        .into_iter()
        .skip(1)
        .map(|row| row.into_iter().map(to_natural).collect())
        .collect();
    CountTriangle::from_rows(Family::Honeycomb, rows)
}

/// `d_k(n) = C(n+k-2, n-k)`.
pub fn hex_closed_form(n: usize, k: i64) -> BigUint {
    let n = n as i64;
    if k < 1 || k > n {
        return BigUint::zero();
    }
    binomial(n + k - 2, n - k)
}

/// `(s_k(n), t_k(n))`: tail hexagons separated / together.
pub fn hex_refined(n: usize, k: i64) -> (BigUint, BigUint) {
    let s = if n < 2 || k < 1 || k > n as i64 {
        BigUint::zero()
    } else {
        let n = n as i64;
        binomial(n + k - 3, n - k)
    };
    let t = if n == 1 {
        // a lone hexagon extends like a closed tail: t_1(1) = d_1(0) = 1
        if k == 1 { BigUint::one() } else { BigUint::zero() }
    } else {
        hex_closed_form(n - 1, k)
    };
    (s, t)
}

pub fn hex_closed_form_triangle(n_max: usize) -> CountTriangle {
    let rows = (1..=n_max)
        .map(|n| (1..=n as i64).map(|k| hex_closed_form(n, k)).collect())
        .collect();
    CountTriangle::from_rows(Family::Honeycomb, rows)
}

/// `d(n) = F_{2n-1}`.
pub fn hex_total(n: usize) -> BigUint {
    assert!(n >= 1, "honeycomb length must be at least 1");
    fibonacci(2 * n - 1)
}
