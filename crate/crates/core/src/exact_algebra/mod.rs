//! Exact integer/rational arithmetic, dense univariate polynomials, truncated
//! power series in `y` with polynomial coefficients in `x`, and the handful of
//! combinatorial numbers everything else is built from.
//!
//! Nothing in this crate touches floating point.

pub mod comb;
mod poly;
mod series;

pub use num_bigint::BigInt;
pub use num_rational::BigRational;
pub use poly::ExactPoly;
pub use series::{catalan_series, BiSeries};

use num_traits::One;

/// Shorthand for an exact rational built from machine integers.
pub fn rat(numer: i64, denom: i64) -> BigRational {
    BigRational::new(BigInt::from(numer), BigInt::from(denom))
}

pub fn int(value: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(value))
}

pub(crate) fn big_rat(value: BigInt) -> BigRational {
    BigRational::from_integer(value)
}

/// `(-1)^k` as a rational.
pub(crate) fn sign(k: i64) -> BigRational {
    if k.rem_euclid(2) == 0 {
        BigRational::one()
    } else {
        -BigRational::one()
    }
}

/// Renders a rational as `"p"` or `"p/q"`.
pub fn rational_to_string(q: &BigRational) -> String {
    if q.is_integer() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

/// Returns the integer value of `q`, or `None` if `q` has a denominator.
pub fn as_integer(q: &BigRational) -> Option<BigInt> {
    q.is_integer().then(|| q.to_integer())
}
