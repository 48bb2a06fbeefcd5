//! Exact polynomials in `y` and power series in `x` over them.
//!
//! A bivariate rational function `N(x, y) / D(x, y)` with `D(0, y) = 1` is
//! expanded term by term: `a_m = N_m - Σ_{j≥1} D_j · a_{m-j}`, every step
//! a convolution of polynomials in `y` with signed big-integer coefficients.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Signed, Zero};

use crate::counting::CountTriangle;
use crate::error::{Error, Result};
use crate::lattice::Family;

/// Dense polynomial in `y`; index is the power, trailing zeros trimmed.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct PolyY {
    coeffs: Vec<BigInt>,
}

impl PolyY {
    pub fn new(coeffs: Vec<BigInt>) -> Self {
        let mut p = PolyY { coeffs };
        p.trim();
        p
    }

    pub fn from_i64s(coeffs: &[i64]) -> Self {
        PolyY::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero() -> Self {
        PolyY::default()
    }

    pub fn one() -> Self {
        PolyY::constant(BigInt::one())
    }

    pub fn constant(c: BigInt) -> Self {
        PolyY::new(vec![c])
    }

    /// `c · y^power`
    pub fn monomial(c: BigInt, power: usize) -> Self {
        let mut coeffs = vec![BigInt::zero(); power + 1];
        coeffs[power] = c;
        PolyY::new(coeffs)
    }

    fn trim(&mut self) {
        while self.coeffs.last().is_some_and(Zero::is_zero) {
            self.coeffs.pop();
        }
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn coeff(&self, power: usize) -> BigInt {
        self.coeffs.get(power).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn eval_at_one(&self) -> BigInt {
        self.coeffs.iter().sum()
    }

    /// `y^by · self`
    pub fn shift(&self, by: usize) -> PolyY {
        if self.is_zero() {
            return PolyY::zero();
        }
        let mut coeffs = vec![BigInt::zero(); by];
        coeffs.extend(self.coeffs.iter().cloned());
        PolyY { coeffs }
    }

    /// Coefficients of `y^1 ..= y^width` as naturals; `None` if any is negative.
    pub fn to_count_row(&self, width: usize) -> Option<Vec<BigUint>> {
        (1..=width).map(|k| self.coeff(k).to_biguint()).collect()
    }
}

pub fn poly_add(a: &PolyY, b: &PolyY) -> PolyY {
    a + b
}

pub fn poly_mul(a: &PolyY, b: &PolyY) -> PolyY {
    a * b
}

pub fn poly_eval_at_one(p: &PolyY) -> BigInt {
    p.eval_at_one()
}

impl Add for &PolyY {
    type Output = PolyY;

    fn add(self, rhs: &PolyY) -> PolyY {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        PolyY::new((0..len).map(|i| self.coeff(i) + rhs.coeff(i)).collect())
    }
}

impl Sub for &PolyY {
    type Output = PolyY;

    fn sub(self, rhs: &PolyY) -> PolyY {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        PolyY::new((0..len).map(|i| self.coeff(i) - rhs.coeff(i)).collect())
    }
}

impl Neg for &PolyY {
    type Output = PolyY;

    fn neg(self) -> PolyY {
        PolyY {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Mul for &PolyY {
    type Output = PolyY;

    fn mul(self, rhs: &PolyY) -> PolyY {
        if self.is_zero() || rhs.is_zero() {
            return PolyY::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        PolyY::new(out)
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for PolyY {
            type Output = PolyY;
            fn $m(self, rhs: PolyY) -> PolyY {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl fmt::Display for PolyY {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (power, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let sign = if c.is_negative() { "-" } else if first { "" } else { "+" };
            let mag = c.abs();
            f.write_str(sign)?;
            match (power, mag.is_one()) {
                (0, _) => write!(f, "{mag}")?,
                (_, true) => {}
                (_, false) => write!(f, "{mag}")?,
            }
            match power {
                0 => {}
                1 => f.write_str("y")?,
                p => write!(f, "y^{p}")?,
            }
            first = false;
        }
        Ok(())
    }
}

/// Power series in `x` with `PolyY` coefficients, truncated after `x^order`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SeriesXY {
    terms: Vec<PolyY>,
}

impl SeriesXY {
    pub fn zero(order: usize) -> Self {
        SeriesXY {
            terms: vec![PolyY::zero(); order + 1],
        }
    }

    pub fn order(&self) -> usize {
        self.terms.len() - 1
    }

    /// Coefficient of `x^power`; zero past the truncation order.
    pub fn term(&self, power: usize) -> &PolyY {
        static ZERO: PolyY = PolyY { coeffs: Vec::new() };
        self.terms.get(power).unwrap_or(&ZERO)
    }

    pub fn terms(&self) -> &[PolyY] {
        &self.terms
    }

    /// Product truncated at the smaller of the two orders.
    pub fn mul_truncated(&self, other: &[PolyY]) -> SeriesXY {
        let order = self.order();
        let mut out = SeriesXY::zero(order);
        for (i, a) in self.terms.iter().enumerate() {
            for (j, b) in other.iter().enumerate().take(order + 1 - i) {
                out.terms[i + j] = &out.terms[i + j] + &(a * b);
            }
        }
        out
    }

    /// Reads `c_k(n)` for `n = 1..=order`, `k = 1..=k_max(n)`.
    pub fn to_triangle(&self, family: Family) -> Option<CountTriangle> {
        let rows = (1..=self.order())
            .map(|n| self.terms[n].to_count_row(family.k_max(n)))
            .collect::<Option<Vec<_>>>()?;
        Some(CountTriangle::from_rows(family, rows))
    }
}

/// `numerator / denominator`, both polynomials in `x` whose coefficients are `PolyY`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RationalGF {
    pub numerator: Vec<PolyY>,
    pub denominator: Vec<PolyY>,
}

impl RationalGF {
    pub fn new(numerator: Vec<PolyY>, denominator: Vec<PolyY>) -> Result<Self> {
        if denominator.first() != Some(&PolyY::one()) {
            return Err(Error::DenominatorNotMonic);
        }
        Ok(RationalGF {
            numerator,
            denominator,
        })
    }
}

pub fn expand_rational(gf: &RationalGF, order: usize) -> Result<SeriesXY> {
    if gf.denominator.first() != Some(&PolyY::one()) {
        return Err(Error::DenominatorNotMonic);
    }
    let mut out = SeriesXY::zero(order);
    for m in 0..=order {
        let mut acc = gf.numerator.get(m).cloned().unwrap_or_default();
        for (j, den) in gf.denominator.iter().enumerate().skip(1).take(m) {
            acc = &acc - &(den * &out.terms[m - j]);
        }
        out.terms[m] = acc;
    }
    Ok(out)
}

fn p(coeffs: &[i64]) -> PolyY {
    PolyY::from_i64s(coeffs)
}

/// `xy(1 - x + y + xy) / (1 - (2+3y+y²)x - (y²+y-1)x²)`
pub fn bar_gf() -> RationalGF {
    RationalGF {
        numerator: vec![p(&[]), p(&[0, 1, 1]), p(&[0, -1, 1])],
        denominator: vec![p(&[1]), p(&[-2, -3, -1]), p(&[1, -1, -1])],
    }
}

/// `xy(1 + x(y-1) - xy) / (1 - (2+y)x + x²)`
pub fn hex_gf() -> RationalGF {
    let y = p(&[0, 1]);
    let inner = [p(&[1]), &p(&[-1, 1]) - &y];
    RationalGF {
        numerator: std::iter::once(PolyY::zero())
            .chain(inner.iter().map(|c| c * &y))
            .collect(),
        denominator: vec![p(&[1]), p(&[-2, -1]), p(&[1])],
    }
}

pub fn gf_for(family: Family) -> RationalGF {
    match family {
        Family::ChocolateBar => bar_gf(),
        Family::Honeycomb => hex_gf(),
    }
}

/// Triangle read off the expanded generating function.
pub fn triangle_from_gf(family: Family, n_max: usize) -> CountTriangle {
    let series = expand_rational(&gf_for(family), n_max).expect("fixed generating functions are monic");
    series
        .to_triangle(family)
        .expect("generating function coefficients are nonnegative")
}

/// Univariate rational function in `x` with integer coefficients.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UnivariateRational {
    pub numerator: Vec<BigInt>,
    pub denominator: Vec<BigInt>,
}

impl UnivariateRational {
    fn trimmed(mut v: Vec<BigInt>) -> Vec<BigInt> {
        while v.last().is_some_and(Zero::is_zero) {
            v.pop();
        }
        v
    }

    pub fn expand(&self, order: usize) -> Result<Vec<BigInt>> {
        if self.denominator.first() != Some(&BigInt::one()) {
            return Err(Error::DenominatorNotMonic);
        }
        let mut out: Vec<BigInt> = Vec::with_capacity(order + 1);
        for m in 0..=order {
            let mut acc = self.numerator.get(m).cloned().unwrap_or_default();
            for (j, den) in self.denominator.iter().enumerate().skip(1).take(m) {
                acc -= den * &out[m - j];
            }
            out.push(acc);
        }
        Ok(out)
    }
}

/// Sets `y = 1` coefficient-wise in numerator and denominator.
pub fn specialize_y(gf: &RationalGF) -> UnivariateRational {
    let eval = |v: &[PolyY]| UnivariateRational::trimmed(v.iter().map(PolyY::eval_at_one).collect());
    UnivariateRational {
        numerator: eval(&gf.numerator),
        denominator: eval(&gf.denominator),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&c| BigInt::from(c)).collect()
    }

    #[test]
    fn poly_ops() {
        let a = p(&[1, 1]);
        assert_eq!(poly_mul(&a, &a), p(&[1, 2, 1]));
        assert_eq!(poly_eval_at_one(&p(&[0, 1, 3, 1])), BigInt::from(5));
        assert_eq!(poly_mul(&p(&[0, 1]), &p(&[2, 1])), p(&[0, 2, 1]));
        assert_eq!(poly_add(&p(&[1, 2]), &p(&[-1, -2])), PolyY::zero());
        assert_eq!(p(&[1, 0, 0]).degree(), Some(0));
        assert_eq!(PolyY::zero().degree(), None);
        assert_eq!(p(&[1, -3, 0, 1]).to_string(), "1-3y+y^3");
        assert_eq!(p(&[0, 2, 1]).shift(1), p(&[0, 0, 2, 1]));
    }

    #[test]
    fn bar_expansion() {
        let s = expand_rational(&bar_gf(), 3).unwrap();
        assert!(s.term(0).is_zero());
        assert_eq!(s.term(1), &p(&[0, 1, 1]));
        assert_eq!(s.term(2), &p(&[0, 1, 6, 4, 1]));
        assert_eq!(s.term(3), &p(&[0, 1, 15, 29, 21, 7, 1]));
    }

    #[test]
    fn hex_expansion() {
        let s = expand_rational(&hex_gf(), 4).unwrap();
        assert_eq!(s.term(4), &p(&[0, 1, 6, 5, 1]));
        assert_eq!(hex_gf().numerator[1], p(&[0, 1]));
    }

    #[test]
    fn zero_numerator() {
        let gf = RationalGF::new(vec![], bar_gf().denominator).unwrap();
        let s = expand_rational(&gf, 5).unwrap();
        assert!(s.terms().iter().all(PolyY::is_zero));
        assert_eq!(specialize_y(&gf).numerator, Vec::<BigInt>::new());
    }

    #[test]
    fn non_monic_rejected() {
        assert!(RationalGF::new(vec![], vec![p(&[2])]).is_err());
        let gf = RationalGF {
            numerator: vec![],
            denominator: vec![p(&[1, 1])],
        };
        assert!(matches!(expand_rational(&gf, 2), Err(Error::DenominatorNotMonic)));
    }

    #[test]
    fn specializations() {
        let f = specialize_y(&bar_gf());
        assert_eq!(f.numerator, ints(&[0, 2]));
        assert_eq!(f.denominator, ints(&[1, -6, -1]));
        assert_eq!(f.expand(3).unwrap(), ints(&[0, 2, 12, 74]));
        let g = specialize_y(&hex_gf());
        assert_eq!(g.numerator, ints(&[0, 1, -1]));
        assert_eq!(g.denominator, ints(&[1, -3, 1]));
        assert_eq!(g.expand(5).unwrap(), ints(&[0, 1, 2, 5, 13, 34]));
    }

    #[test]
    fn denominator_multiplies_back() {
        for gf in [bar_gf(), hex_gf()] {
            let s = expand_rational(&gf, 25).unwrap();
            let back = s.mul_truncated(&gf.denominator);
            for m in 0..=25 {
                let expected = gf.numerator.get(m).cloned().unwrap_or_default();
                assert_eq!(back.term(m), &expected, "x^{m}");
            }
        }
    }

    #[test]
    fn specialization_commutes() {
        for gf in [bar_gf(), hex_gf()] {
            let s = expand_rational(&gf, 30).unwrap();
            let u = specialize_y(&gf).expand(30).unwrap();
            for n in 0..=30 {
                assert_eq!(s.term(n).eval_at_one(), u[n]);
            }
        }
    }
}
