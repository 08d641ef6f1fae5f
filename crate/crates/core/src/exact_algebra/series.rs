use std::ops::{Add, Mul, Neg, Sub};

use num_rational::BigRational;

use super::comb::catalan;
use super::{big_rat, ExactPoly};
use crate::error::{Error, Result};

/// A power series in `y` truncated after `y^order`, whose coefficients are
/// exact polynomials in `x`.
///
/// Entry `(i, j)` of the bivariate table is `coeff(j).coeff(i)`, the
/// coefficient of `x^i y^j`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BiSeries {
    order: usize,
    coeffs: Vec<ExactPoly>,
}

impl BiSeries {
    pub fn zero(order: usize) -> Self {
        Self {
            order,
            coeffs: vec![ExactPoly::zero(); order + 1],
        }
    }

    pub fn one(order: usize) -> Self {
        Self::constant(order, ExactPoly::one())
    }

    /// The series `p(x)`, constant in `y`.
    pub fn constant(order: usize, p: ExactPoly) -> Self {
        Self::monomial(order, p, 0)
    }

    /// `p(x) y^k`, which is zero if `k > order`.
    pub fn monomial(order: usize, p: ExactPoly, k: usize) -> Self {
        let mut s = Self::zero(order);
        if k <= order {
            s.coeffs[k] = p;
        }
        s
    }

    /// Builds a series from its `y`-coefficients, dropping any past `order`.
    pub fn from_coeffs(order: usize, coeffs: impl IntoIterator<Item = ExactPoly>) -> Self {
        let mut s = Self::zero(order);
        for (k, c) in coeffs.into_iter().take(order + 1).enumerate() {
            s.coeffs[k] = c;
        }
        s
    }

    pub fn order(&self) -> usize {
        self.order
    }

    /// Coefficient of `y^k` (zero past the truncation order).
    pub fn coeff(&self, k: usize) -> ExactPoly {
        self.coeffs.get(k).cloned().unwrap_or_default()
    }

    pub fn coeffs(&self) -> &[ExactPoly] {
        &self.coeffs
    }

    /// Coefficient of `x^i y^j`.
    pub fn entry(&self, i: usize, j: usize) -> BigRational {
        self.coeffs.get(j).map(|p| p.coeff(i)).unwrap_or_default()
    }

    /// `y^k` times this series.
    pub fn shift_up(&self, k: usize) -> Self {
        Self::from_coeffs(
            self.order,
            std::iter::repeat_n(ExactPoly::zero(), k).chain(self.coeffs.iter().cloned()),
        )
    }

    /// Multiplies every coefficient by the polynomial `p(x)`.
    pub fn scale(&self, p: &ExactPoly) -> Self {
        Self::from_coeffs(self.order, self.coeffs.iter().map(|c| c * p))
    }

    /// Applies `f` to every `y`-coefficient (e.g. the substitution `x ↦ x - 1`).
    pub fn map_coeffs(&self, f: impl Fn(&ExactPoly) -> ExactPoly) -> Self {
        Self::from_coeffs(self.order, self.coeffs.iter().map(f))
    }

    /// `f(y^2)`, still truncated at the same order.
    pub fn substitute_y_squared(&self) -> Self {
        let mut s = Self::zero(self.order);
        for (k, c) in self.coeffs.iter().enumerate() {
            if 2 * k > self.order {
                break;
            }
            s.coeffs[2 * k] = c.clone();
        }
        s
    }

    /// Exact quotient `self / divisor`.
    ///
    /// The `y^0` coefficient of the divisor must be a nonzero polynomial `d0`;
    /// each step divides by `d0` and must be exact, otherwise the offending
    /// power of `y` is returned in [`Error::InexactDivision`].
    pub fn try_div(&self, divisor: &Self) -> Result<Self> {
        let order = self.order.min(divisor.order);
        let d0 = &divisor.coeffs[0];
        if d0.is_zero() {
            return Err(Error::ZeroConstantTerm);
        }
        let mut quot: Vec<ExactPoly> = Vec::with_capacity(order + 1);
        for k in 0..=order {
            let mut acc = self.coeffs[k].clone();
            for j in 1..=k {
                let d = &divisor.coeffs[j];
                if !d.is_zero() {
                    acc = &acc - &(d * &quot[k - j]);
                }
            }
            let q = acc
                .exact_div(d0)
                .map_err(|_| Error::InexactDivision { power: k })?;
            quot.push(q);
        }
        Ok(Self::from_coeffs(order, quot))
    }

    /// Divides every coefficient exactly by `p(x)`.
    pub fn try_div_poly(&self, p: &ExactPoly) -> Result<Self> {
        self.try_div(&Self::constant(self.order, p.clone()))
    }

    fn zip_with(&self, rhs: &Self, f: impl Fn(&ExactPoly, &ExactPoly) -> ExactPoly) -> Self {
        let order = self.order.min(rhs.order);
        Self::from_coeffs(order, (0..=order).map(|k| f(&self.coeffs[k], &rhs.coeffs[k])))
    }
}

/// `C(y) = Σ_{m=0}^{order} c_m y^m`, the Catalan generating function.
///
/// This series stands in for `(1 - √(1 - 4y)) / (2y)` everywhere; no radical
/// is ever evaluated.
pub fn catalan_series(order: usize) -> BiSeries {
    BiSeries::from_coeffs(
        order,
        (0..=order as u64).map(|m| ExactPoly::constant(big_rat(catalan(m)))),
    )
}

impl Add<&BiSeries> for &BiSeries {
    type Output = BiSeries;
    fn add(self, rhs: &BiSeries) -> BiSeries {
        self.zip_with(rhs, |a, b| a + b)
    }
}

impl Sub<&BiSeries> for &BiSeries {
    type Output = BiSeries;
    fn sub(self, rhs: &BiSeries) -> BiSeries {
        self.zip_with(rhs, |a, b| a - b)
    }
}

impl Mul<&BiSeries> for &BiSeries {
    type Output = BiSeries;
    fn mul(self, rhs: &BiSeries) -> BiSeries {
        let order = self.order.min(rhs.order);
        let mut out = BiSeries::zero(order);
        for (i, a) in self.coeffs.iter().enumerate().take(order + 1) {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate().take(order + 1 - i) {
                if !b.is_zero() {
                    out.coeffs[i + j] = &out.coeffs[i + j] + &(a * b);
                }
            }
        }
        out
    }
}

impl Neg for &BiSeries {
    type Output = BiSeries;
    fn neg(self) -> BiSeries {
        self.map_coeffs(|c| -c)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact_algebra::int;

    fn c(k: i64) -> ExactPoly {
        ExactPoly::constant(int(k))
    }

    #[test]
    fn catalan_series_examples() {
        assert_eq!(catalan_series(0), BiSeries::one(0));
        let s = catalan_series(4);
        let got: Vec<_> = (0..=4).map(|k| s.entry(0, k)).collect();
        assert_eq!(got, [1, 1, 2, 5, 14].map(int));
        assert_eq!(s.entry(0, 3), int(5));
    }

    #[test]
    fn geometric_series_division() {
        // 1 / (1 - y) = Σ y^k
        let one = BiSeries::one(6);
        let denom = BiSeries::from_coeffs(6, [c(1), c(-1)]);
        let q = one.try_div(&denom).unwrap();
        assert!(q.coeffs().iter().all(|p| *p == c(1)));
    }

    #[test]
    fn division_by_polynomial_constant_term() {
        // (x + x^2 y) / x = 1 + x y
        let num = BiSeries::from_coeffs(3, [ExactPoly::x(), ExactPoly::from_integers([0, 0, 1])]);
        let den = BiSeries::constant(3, ExactPoly::x());
        let q = num.try_div(&den).unwrap();
        assert_eq!(q.coeff(0), c(1));
        assert_eq!(q.coeff(1), ExactPoly::x());
        // 1 / x is not a polynomial
        assert_eq!(BiSeries::one(3).try_div(&den), Err(Error::InexactDivision { power: 0 }));
        let bad = BiSeries::from_coeffs(3, [ExactPoly::zero(), c(1)]);
        assert_eq!(BiSeries::one(3).try_div(&bad), Err(Error::ZeroConstantTerm));
    }

    #[test]
    fn y_squared_substitution() {
        let s = catalan_series(6).substitute_y_squared();
        let got: Vec<_> = (0..=6).map(|k| s.entry(0, k)).collect();
        assert_eq!(got, [1, 0, 1, 0, 2, 0, 5].map(int));
    }

    #[test]
    fn square_root_identity() {
        // (1 - 2y C(y))^2 = 1 - 4y
        let order = 20;
        let root = &BiSeries::one(order) - &catalan_series(order).shift_up(1).scale(&c(2));
        let square = &root * &root;
        let expected = BiSeries::from_coeffs(order, [c(1), c(-4)]);
        assert_eq!(square, expected);
    }
}
