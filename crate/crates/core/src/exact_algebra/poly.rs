use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Serialize, Serializer};

use super::{big_rat, rational_to_string};
use crate::error::{Error, Result};

/// Dense univariate polynomial with exact rational coefficients.
///
/// `coeffs[k]` is the coefficient of `x^k`. The highest stored coefficient is
/// never zero; the zero polynomial has no coefficients.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct ExactPoly {
    coeffs: Vec<BigRational>,
}

impl ExactPoly {
    pub fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(BigRational::one())
    }

    /// The polynomial `x`.
    pub fn x() -> Self {
        Self::monomial(BigRational::one(), 1)
    }

    pub fn constant(c: BigRational) -> Self {
        Self::from_coeffs(vec![c])
    }

    pub fn monomial(c: BigRational, degree: usize) -> Self {
        let mut coeffs = vec![BigRational::zero(); degree + 1];
        coeffs[degree] = c;
        Self::from_coeffs(coeffs)
    }

    pub fn from_coeffs(mut coeffs: Vec<BigRational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn from_integers<I, T>(coeffs: I) -> Self
    where
        I: IntoIterator<Item = T>,
        T: Into<BigInt>,
    {
        Self::from_coeffs(coeffs.into_iter().map(|c| big_rat(c.into())).collect())
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    /// Coefficient of `x^k`, zero past the degree.
    pub fn coeff(&self, k: usize) -> BigRational {
        self.coeffs.get(k).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading_coeff(&self) -> Option<&BigRational> {
        self.coeffs.last()
    }

    /// Horner evaluation.
    pub fn eval(&self, at: &BigRational) -> BigRational {
        self.coeffs
            .iter()
            .rev()
            .fold(BigRational::zero(), |acc, c| acc * at + c)
    }

    pub fn eval_int(&self, at: i64) -> BigRational {
        self.eval(&BigRational::from_integer(at.into()))
    }

    /// `p(x + by)`, computed by Horner's scheme on `(x + by)`.
    pub fn translate(&self, by: &BigRational) -> Self {
        let step = Self::from_coeffs(vec![by.clone(), BigRational::one()]);
        self.coeffs
            .iter()
            .rev()
            .fold(Self::zero(), |acc, c| &(&acc * &step) + &Self::constant(c.clone()))
    }

    /// `p(x - 1)`.
    pub fn shift(&self) -> Self {
        self.translate(&-BigRational::one())
    }

    /// `p(x + 1)`, the inverse of [`ExactPoly::shift`].
    pub fn shift_inverse(&self) -> Self {
        self.translate(&BigRational::one())
    }

    /// `x^d p(1/x)` for `d >= deg p`.
    pub fn reversed(&self, d: usize) -> Self {
        assert!(self.coeffs.len() <= d + 1, "reversal degree below polynomial degree");
        let mut coeffs = vec![BigRational::zero(); d + 1];
        for (k, c) in self.coeffs.iter().enumerate() {
            coeffs[d - k] = c.clone();
        }
        Self::from_coeffs(coeffs)
    }

    pub fn derivative(&self) -> Self {
        Self::from_coeffs(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, c)| c * BigRational::from_integer(k.into()))
                .collect(),
        )
    }

    pub fn scale(&self, by: &BigRational) -> Self {
        Self::from_coeffs(self.coeffs.iter().map(|c| c * by).collect())
    }

    /// `x^k p(x)`.
    pub fn shift_up(&self, k: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![BigRational::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        Self { coeffs }
    }

    /// Drops every term of degree above `max_degree`.
    pub fn truncate(&self, max_degree: usize) -> Self {
        Self::from_coeffs(self.coeffs.iter().take(max_degree + 1).cloned().collect())
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            e >>= 1;
        }
        acc
    }

    /// Euclidean division over the rationals. Panics on a zero divisor.
    pub fn div_rem(&self, divisor: &Self) -> (Self, Self) {
        let d = divisor.degree().expect("polynomial division by zero");
        let lead = divisor.coeffs[d].clone();
        let mut rem = self.coeffs.clone();
        if rem.len() <= d {
            return (Self::zero(), self.clone());
        }
        let mut quot = vec![BigRational::zero(); rem.len() - d];
        for k in (0..quot.len()).rev() {
            let q = &rem[k + d] / &lead;
            if !q.is_zero() {
                for (j, c) in divisor.coeffs.iter().enumerate() {
                    rem[k + j] = &rem[k + j] - &q * c;
                }
            }
            quot[k] = q;
        }
        (Self::from_coeffs(quot), Self::from_coeffs(rem))
    }

    /// Division that must leave no remainder.
    pub fn exact_div(&self, divisor: &Self) -> Result<Self> {
        let (q, r) = self.div_rem(divisor);
        if r.is_zero() {
            Ok(q)
        } else {
            Err(Error::NonzeroRemainder)
        }
    }

    pub fn is_integral(&self) -> bool {
        self.coeffs.iter().all(BigRational::is_integer)
    }

    /// Integer coefficients, low to high, if every coefficient is an integer.
    pub fn integer_coeffs(&self) -> Option<Vec<BigInt>> {
        self.coeffs
            .iter()
            .map(|c| c.is_integer().then(|| c.to_integer()))
            .collect()
    }

    /// Coefficients as `"p"` / `"p/q"` strings, low to high.
    pub fn coeff_strings(&self) -> Vec<String> {
        self.coeffs.iter().map(rational_to_string).collect()
    }
}

impl fmt::Display for ExactPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            if first {
                if neg {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if neg { " - " } else { " + " })?;
            }
            first = false;
            let abs = c.abs();
            let body = rational_to_string(&abs);
            let unit = abs.is_one();
            let body = if abs.is_integer() || k == 0 {
                body
            } else {
                format!("({body})")
            };
            match k {
                0 => f.write_str(&body)?,
                _ => {
                    if !unit {
                        f.write_str(&body)?;
                    }
                    if k == 1 {
                        f.write_str("x")?;
                    } else {
                        write!(f, "x^{k}")?;
                    }
                }
            }
        }
        Ok(())
    }
}

impl Serialize for ExactPoly {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.coeff_strings().serialize(serializer)
    }
}

impl Add<&ExactPoly> for &ExactPoly {
    type Output = ExactPoly;
    fn add(self, rhs: &ExactPoly) -> ExactPoly {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        ExactPoly::from_coeffs((0..len).map(|k| self.coeff(k) + rhs.coeff(k)).collect())
    }
}

impl Sub<&ExactPoly> for &ExactPoly {
    type Output = ExactPoly;
    fn sub(self, rhs: &ExactPoly) -> ExactPoly {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        ExactPoly::from_coeffs((0..len).map(|k| self.coeff(k) - rhs.coeff(k)).collect())
    }
}

impl Mul<&ExactPoly> for &ExactPoly {
    type Output = ExactPoly;
    fn mul(self, rhs: &ExactPoly) -> ExactPoly {
        if self.is_zero() || rhs.is_zero() {
            return ExactPoly::zero();
        }
        let mut coeffs = vec![BigRational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        ExactPoly::from_coeffs(coeffs)
    }
}

impl Neg for &ExactPoly {
    type Output = ExactPoly;
    fn neg(self) -> ExactPoly {
        ExactPoly::from_coeffs(self.coeffs.iter().map(|c| -c).collect())
    }
}

macro_rules! forward_owned {
    ($($tr:ident $method:ident),*) => {$(
        impl $tr<ExactPoly> for ExactPoly {
            type Output = ExactPoly;
            fn $method(self, rhs: ExactPoly) -> ExactPoly {
                (&self).$method(&rhs)
            }
        }
        impl $tr<&ExactPoly> for ExactPoly {
            type Output = ExactPoly;
            fn $method(self, rhs: &ExactPoly) -> ExactPoly {
                (&self).$method(rhs)
            }
        }
        impl $tr<ExactPoly> for &ExactPoly {
            type Output = ExactPoly;
            fn $method(self, rhs: ExactPoly) -> ExactPoly {
                self.$method(&rhs)
            }
        }
    )*};
}

forward_owned!(Add add, Sub sub, Mul mul);

impl Neg for ExactPoly {
    type Output = ExactPoly;
    fn neg(self) -> ExactPoly {
        -&self
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact_algebra::{int, rat};

    fn p(c: &[i64]) -> ExactPoly {
        ExactPoly::from_integers(c.iter().copied())
    }

    #[test]
    fn eval_examples() {
        assert_eq!(p(&[1, 1]).eval(&int(-1)), int(0));
        assert_eq!(p(&[1, 1]).eval(&rat(1, 2)), rat(3, 2));
        assert_eq!(p(&[2, 3, 1]).eval(&int(-1)), int(0));
    }

    #[test]
    fn shift_examples() {
        assert_eq!(p(&[1, 1]).shift(), p(&[0, 1]));
        assert_eq!(ExactPoly::one().shift(), ExactPoly::one());
        assert_eq!(p(&[2, 3, 1]).shift(), p(&[0, 1, 1]));
        assert_eq!(ExactPoly::zero().shift(), ExactPoly::zero());
    }

    #[test]
    fn normalizes_trailing_zeros() {
        let q = p(&[1, 2, 0, 0]);
        assert_eq!(q.degree(), Some(1));
        assert_eq!(p(&[0, 0]).degree(), None);
        assert!((&q - &q).is_zero());
    }

    #[test]
    fn division() {
        // (x^2 + x) / (x - 1) = x + 2 remainder 2
        let (q, r) = p(&[0, 1, 1]).div_rem(&p(&[-1, 1]));
        assert_eq!(q, p(&[2, 1]));
        assert_eq!(r, p(&[2]));
        assert_eq!(p(&[-1, 0, 1]).exact_div(&p(&[-1, 1])), Ok(p(&[1, 1])));
        assert_eq!(p(&[0, 1, 1]).exact_div(&p(&[-1, 1])), Err(Error::NonzeroRemainder));
        let (q, r) = p(&[1]).div_rem(&p(&[0, 2]));
        assert!(q.is_zero());
        assert_eq!(r, p(&[1]));
    }

    #[test]
    fn reversal_and_derivative() {
        assert_eq!(p(&[2, 3, 1]).reversed(2), p(&[1, 3, 2]));
        assert_eq!(p(&[2, 3]).reversed(3), p(&[0, 0, 3, 2]));
        assert_eq!(p(&[5, 3, 1]).derivative(), p(&[3, 2]));
        assert_eq!(p(&[1, 1]).pow(3), p(&[1, 3, 3, 1]));
    }

    #[test]
    fn display() {
        assert_eq!(p(&[2, 3, 1]).to_string(), "x^2 + 3x + 2");
        assert_eq!(p(&[0, -1, 0, 2]).to_string(), "2x^3 - x");
        assert_eq!(ExactPoly::constant(rat(-1, 2)).to_string(), "-1/2");
        assert_eq!(ExactPoly::zero().to_string(), "0");
    }
}
