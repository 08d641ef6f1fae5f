//! The h-polynomial `H_n(x) = P_n(x - 1)` and the h-vector of `P_n`.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Zero;
use serde::Serialize;

use crate::complex::{f_generating_series, f_polynomial};
use crate::error::{Error, Result};
use crate::exact_algebra::comb::{binomial, catalan, epsilon};
use crate::exact_algebra::{big_rat, catalan_series, rat, BiSeries, ExactPoly};
use crate::peak_sets::max_peak_count;
use crate::serial;

/// Longest Dyck word the brute-force oracle will scan (2^24 words).
pub const DYCK_ORACLE_CAP: usize = 24;

/// `(h_{n,0}, …, h_{n,d})`, `d = ⌊(n-1)/2⌋`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HVector {
    pub n: usize,
    #[serde(serialize_with = "serial::big_ints")]
    pub h: Vec<BigInt>,
}

impl HVector {
    /// `Σ_i h_{n,i} x^{d-i}`.
    pub fn to_polynomial(&self) -> ExactPoly {
        ExactPoly::from_integers(self.h.iter().rev().cloned())
    }
}

pub fn h_polynomial(n: usize) -> ExactPoly {
    f_polynomial(n).shift()
}

/// `H_n(x)` from `H_3 = x`, `H_{n+1} = x H_n` for even `n` and
/// `(x - 1) H_{n+1} = x H_n - (2/(n+1)) C(n-1, (n-1)/2)` for odd `n`.
pub fn h_polynomial_by_recurrence(n: usize) -> Result<ExactPoly> {
    if n < 3 {
        return Err(Error::Domain(format!("P_n needs n >= 3, got {n}")));
    }
    let x = ExactPoly::x();
    let x_minus_1 = ExactPoly::from_integers([-1, 1]);
    let mut h = x.clone();
    for m in 3..n {
        let grown = &x * &h;
        h = if m % 2 == 0 {
            grown
        } else {
            let c = big_rat(binomial(m as i64 - 1, (m as i64 - 1) / 2)) * rat(2, m as i64 + 1);
            (&grown - &ExactPoly::constant(c)).exact_div(&x_minus_1)?
        };
    }
    Ok(h)
}

/// `h_{n,i} = ((⌊n/2⌋ - i)/(⌊n/2⌋ + i)) C(⌊n/2⌋ + i, ⌊n/2⌋)`.
pub fn h_entry(n: usize, i: usize) -> Result<BigInt> {
    if n < 3 {
        return Err(Error::Domain(format!("P_n needs n >= 3, got {n}")));
    }
    if i > max_peak_count(n) {
        return Err(Error::Domain(format!(
            "h-vector index {i} outside [0, {}] for n = {n}",
            max_peak_count(n)
        )));
    }
    let m = (n / 2) as i64;
    let i = i as i64;
    let (q, r) = (binomial(m + i, m) * (m - i)).div_rem(&BigInt::from(m + i));
    assert!(r.is_zero(), "h-vector closed form is not integral");
    Ok(q)
}

/// The h-vector from the closed form.
pub fn h_vector(n: usize) -> Result<HVector> {
    let h = (0..=max_peak_count(n))
        .map(|i| h_entry(n, i))
        .collect::<Result<_>>()?;
    Ok(HVector { n, h })
}

/// The h-vector built only from the parity recurrence, starting at
/// `(h_{3,0}, h_{3,1}) = (1, 0)`.
pub fn h_recurrence_table(n: usize) -> HVector {
    assert!(n >= 3, "P_n needs n >= 3");
    let mut h = vec![BigInt::from(1), BigInt::zero()];
    for m in 3..n {
        let half = m / 2;
        let eps = BigInt::from(epsilon(m as u64));
        let mut next = vec![h[0].clone()];
        for i in 1..half {
            let carried = &eps * &next[i - 1];
            next.push(h.get(i).cloned().unwrap_or_default() + carried);
        }
        next.push(&eps * catalan(half as u64));
        h = next;
    }
    HVector { n, h }
}

/// `Σ_{n>=3} H_n(x) y^n`, i.e. the f-series with `x ↦ x - 1`.
pub fn h_generating_series(order: usize) -> BiSeries {
    f_generating_series(order).map_coeffs(ExactPoly::shift)
}

/// The printed closed form
/// `[((x²-1)y² - (x-1)y² C(y²))(1+xy)] / [x(x-1-xy²)] - y²`.
///
/// Like the printed `P(x, y)` it stops producing polynomials at `y^4`.
pub fn printed_h_generating_form(order: usize) -> Result<BiSeries> {
    let x = ExactPoly::x();
    let c_sq = catalan_series(order).substitute_y_squared();
    let x_sq_minus_1 = ExactPoly::from_integers([-1, 0, 1]);
    let x_minus_1 = ExactPoly::from_integers([-1, 1]);
    let bracket = (&BiSeries::constant(order, x_sq_minus_1) - &c_sq.scale(&x_minus_1)).shift_up(2);
    let numer = &bracket * &BiSeries::from_coeffs(order, [ExactPoly::one(), x.clone()]);
    let denom = &BiSeries::constant(order, &x * &x_minus_1)
        - &BiSeries::monomial(order, &x * &x, 2);
    (&numer - &denom.shift_up(2)).try_div(&denom)
}

/// Number of left factors of Dyck paths from `(0,0)` to
/// `(⌊n/2⌋ + i - 1, ⌊n/2⌋ - i - 1)`, by scanning every `{U,D}` word.
pub fn h_dyck_oracle(n: usize, i: usize) -> Result<BigInt> {
    if n < 3 || i > max_peak_count(n) {
        return Err(Error::Domain(format!("no h-vector index {i} for n = {n}")));
    }
    let half = n / 2;
    let length = half + i - 1;
    if length > DYCK_ORACLE_CAP {
        return Err(Error::ResourceLimit {
            what: "Dyck word scan (path length)",
            n: length,
            cap: DYCK_ORACLE_CAP,
        });
    }
    let Some(height) = (half + 1).checked_sub(i + 2) else {
        return Ok(BigInt::zero());
    };
    let height = height as i64;
    let count = (0u64..1 << length)
        .filter(|bits| {
            let mut h = 0i64;
            for b in 0..length {
                h += if bits >> b & 1 == 1 { -1 } else { 1 };
                if h < 0 {
                    return false;
                }
            }
            h == height
        })
        .count();
    Ok(BigInt::from(count))
}
