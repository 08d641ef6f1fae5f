//! The graded algebras `A = K[x_S]/I` and `B = K[x_S]/J` attached to `P_n`.
//!
//! `I` is generated by `x_S x_T` for incomparable faces `S, T`; `J` adds every
//! square `x_S²`. Neither ideal is ever written out: a monomial survives in `A`
//! exactly when its support is a chain, and in `B` when it is also squarefree.
//! Variables are indexed by faces in lexicographic order of their element
//! lists, as in [`PeakComplex`].

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::Serialize;

use crate::chains::chain_count_formula;
use crate::complex::{f_polynomial, PeakComplex, POSET_CAP};
use crate::error::{Error, Result};
use crate::exact_algebra::comb::binomial;
use crate::exact_algebra::{big_rat, int, rat, ExactPoly};
use crate::peak_sets::max_peak_count;
use crate::serial;

/// Highest degree the standard monomial oracle will enumerate.
pub const MONOMIAL_DEGREE_CAP: usize = 6;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum Algebra {
    A,
    B,
}

impl fmt::Display for Algebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Algebra::A => "A",
            Algebra::B => "B",
        })
    }
}

impl FromStr for Algebra {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "A" | "a" => Ok(Algebra::A),
            "B" | "b" => Ok(Algebra::B),
            other => Err(Error::Format(format!("unknown algebra {other:?}, expected A or B"))),
        }
    }
}

/// `dims[i] = dim` of the degree-`i` piece, for `i = 0..dims.len()`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GradedDimensions {
    pub n: usize,
    pub algebra: Algebra,
    #[serde(serialize_with = "serial::big_ints")]
    pub dims: Vec<BigInt>,
}

/// `numerator / (1 - x)^denominator_exponent`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RationalSeriesForm {
    pub numerator: ExactPoly,
    pub denominator_exponent: usize,
}

impl RationalSeriesForm {
    /// Taylor coefficients through `x^order`.
    pub fn expand(&self, order: usize) -> ExactPoly {
        let e = self.denominator_exponent as i64;
        let inverse = ExactPoly::from_integers((0..=order as i64).map(|k| binomial(k + e - 1, e - 1)));
        (&self.numerator * &inverse).truncate(order)
    }
}

fn check_n(n: usize) {
    assert!(n >= 3, "P_n needs n >= 3, got {n}");
}

/// The Hilbert polynomial of `A`, `x^d P_n(1/x) = Σ_k f_{k-1} x^k`.
///
/// Its constant term is `f_{-1} = 1`, so it agrees with `dim A^i` for every
/// `i >= 0`, degree zero included.
pub fn hilbert_polynomial_a(n: usize) -> ExactPoly {
    check_n(n);
    f_polynomial(n).reversed(max_peak_count(n))
}

/// `dim A^i`: the number of multichains of length `i` in `P_n`.
pub fn dim_a(n: usize, i: usize) -> BigInt {
    let value = hilbert_polynomial_a(n).eval_int(i as i64);
    assert!(value.is_integer(), "Hilbert polynomial value must be an integer");
    value.to_integer()
}

/// `dim B^i`: the number of strict chains of length `i` in `P_n`.
pub fn dim_b(n: usize, i: usize) -> BigInt {
    check_n(n);
    if i == 0 {
        return BigInt::one();
    }
    if i > max_peak_count(n) + 1 {
        return BigInt::zero();
    }
    let value = chain_count_formula(n, i);
    assert!(value.is_integer(), "chain count formula must give an integer");
    value.to_integer()
}

pub fn graded_dimensions(n: usize, algebra: Algebra, max_degree: usize) -> GradedDimensions {
    let dims = (0..=max_degree)
        .map(|i| match algebra {
            Algebra::A => dim_a(n, i),
            Algebra::B => dim_b(n, i),
        })
        .collect();
    GradedDimensions { n, algebra, dims }
}

/// `Σ_{i=0}^{order} dim A^i x^i`.
pub fn hilbert_series_a(n: usize, order: usize) -> ExactPoly {
    ExactPoly::from_integers((0..=order).map(|i| dim_a(n, i)))
}

/// The numerator of `Hilb A` over `(1 - x)^{⌊(n+1)/2⌋}`.
pub fn numerator_a(n: usize) -> RationalSeriesForm {
    check_n(n);
    let e = (n + 1) / 2;
    let order = e + max_peak_count(n) + 2;
    let one_minus_x = ExactPoly::from_integers([1, -1]);
    let product = (&hilbert_series_a(n, order) * &one_minus_x.pow(e as u32)).truncate(order);
    assert!(
        (e..=order).all(|k| product.coeff(k).is_zero()),
        "Hilbert series numerator must have degree below {e}"
    );
    RationalSeriesForm {
        numerator: product,
        denominator_exponent: e,
    }
}

/// The numerator polynomials rebuilt from `A_3 = 1`, `A_4 = 1 + x` and the
/// two parity recurrences, without touching the series.
pub fn numerator_a_by_recurrence(n: usize) -> Result<ExactPoly> {
    if n < 3 {
        return Err(Error::Domain(format!("P_n needs n >= 3, got {n}")));
    }
    let x = ExactPoly::x();
    let one_minus_x = ExactPoly::from_integers([1, -1]);
    let x_one_minus_x = &x * &one_minus_x;
    let mut table = vec![ExactPoly::one(), ExactPoly::from_integers([1, 1])];
    for m in 5..=n {
        let prev = &table[m - 4];
        let next = if m % 2 == 1 {
            // m - 1 even
            let k = m as i64 - 1;
            let linear = ExactPoly::from_coeffs(vec![int(1), rat(k - 2, 2)]);
            &(&x_one_minus_x * &prev.derivative()) + &(&linear * prev)
        } else {
            // m = k + 3 with k odd
            let k = m as i64 - 3;
            let (a0, a1, a2) = (&table[m - 6], &table[m - 5], &table[m - 4]);
            let c = rat(4 * k, k + 3);
            let mut rhs = &x_one_minus_x * &a2.derivative();
            rhs = &rhs + &(&ExactPoly::from_coeffs(vec![int(1), rat(k + 1, 2)]) * a2);
            rhs = &rhs + &(&(&x_one_minus_x * &one_minus_x) * &a1.derivative()).scale(&c);
            rhs = &rhs + &(&x_one_minus_x * a1).scale(&rat(2 * k * (k + 1), k + 3));
            let lin_a = ExactPoly::from_integers([2, k - 1]);
            rhs = &rhs - &(&(&x_one_minus_x * &lin_a) * &a0.derivative()).scale(&c);
            let lin_b = ExactPoly::from_integers([0, 4, k - 1]);
            rhs = &rhs - &(&lin_b * a0).scale(&rat(k * (k + 1), k + 3));
            let sq = &x_one_minus_x * &x_one_minus_x;
            rhs = &rhs - &(&sq * &a0.derivative().derivative()).scale(&c);
            rhs.exact_div(&one_minus_x)?
        };
        table.push(next);
    }
    Ok(table.swap_remove(n - 3))
}

/// Residual of the derivative recurrence for `Hilb A` started at `n`, with
/// every series truncated at `x^order`; zero means the identity holds there.
///
/// Even `n`: `Hilb_{n+1} - x Hilb'_n - Hilb_n`. Odd `n`: `Hilb_{n+3}` minus
/// `x Hilb'_{n+2} + Hilb_{n+2} + c x Hilb'_{n+1} - 2c x Hilb'_n - c x² Hilb''_n`
/// with `c = 4n/(n+3)`.
pub fn series_recurrence_residual(n: usize, order: usize) -> ExactPoly {
    check_n(n);
    let x = ExactPoly::x();
    let h = |m| hilbert_series_a(m, order);
    let x_d = |p: &ExactPoly| &x * &p.derivative();
    if n % 2 == 0 {
        let base = h(n);
        return &(&h(n + 1) - &x_d(&base)) - &base;
    }
    let k = n as i64;
    let c = rat(4 * k, k + 3);
    let (h0, h1, h2) = (h(n), h(n + 1), h(n + 2));
    let x2_dd = &(&x * &x) * &h0.derivative().derivative();
    let mut rhs = &x_d(&h2) + &h2;
    rhs = &rhs + &x_d(&h1).scale(&c);
    rhs = &rhs - &x_d(&h0).scale(&(&c * big_rat(BigInt::from(2))));
    rhs = &rhs - &x2_dd.scale(&c);
    (&h(n + 3) - &rhs).truncate(order)
}

/// `Hilb B` from the chain-count formula; a polynomial of degree `d + 1`.
pub fn hilbert_series_b(n: usize) -> ExactPoly {
    check_n(n);
    ExactPoly::from_integers((0..=max_peak_count(n) + 1).map(|i| dim_b(n, i)))
}

/// `Hilb B` from chains counted directly in the face poset.
pub fn hilbert_series_b_oracle(n: usize) -> Result<ExactPoly> {
    let complex = PeakComplex::new(n)?;
    let dims = (0..=max_peak_count(n) + 1)
        .map(|i| crate::chains::count_chains(&complex, i, true))
        .collect::<Result<Vec<_>>>()?;
    Ok(ExactPoly::from_integers(dims))
}

/// Counts degree-`degree` monomials in the face variables that survive in the
/// given algebra, one monomial at a time.
pub fn standard_monomial_oracle(n: usize, algebra: Algebra, degree: usize) -> Result<BigInt> {
    if degree > MONOMIAL_DEGREE_CAP {
        return Err(Error::ResourceLimit {
            what: "standard monomial enumeration (degree)",
            n: degree,
            cap: MONOMIAL_DEGREE_CAP,
        });
    }
    if n > POSET_CAP {
        return Err(Error::ResourceLimit {
            what: "standard monomial enumeration",
            n,
            cap: POSET_CAP,
        });
    }
    let complex = PeakComplex::new(n)?;
    let all: Vec<usize> = (0..complex.len()).collect();
    Ok(BigInt::from(count_monomials(&complex, algebra, &all, degree)))
}

/// `allowed` holds the indices that may still be appended: at least the last
/// index used and comparable with every index used so far.
fn count_monomials(complex: &PeakComplex, algebra: Algebra, allowed: &[usize], left: usize) -> u64 {
    if left == 0 {
        return 1;
    }
    if left == 1 {
        return allowed.len() as u64;
    }
    let mut total = 0;
    for (pos, &j) in allowed.iter().enumerate() {
        let skip = if algebra == Algebra::A { pos } else { pos + 1 };
        let next: Vec<usize> = allowed[skip..]
            .iter()
            .copied()
            .filter(|&k| complex.comparable(j, k))
            .collect();
        total += count_monomials(complex, algebra, &next, left - 1);
    }
    total
}

/// Whether `x_{i_1} ⋯ x_{i_k}` is nonzero in the algebra, tested against the
/// generators: no incomparable pair, and for `B` no repeated variable.
pub fn monomial_is_nonvanishing(complex: &PeakComplex, algebra: Algebra, indices: &[usize]) -> bool {
    for (a, &i) in indices.iter().enumerate() {
        for &j in &indices[a + 1..] {
            if i == j {
                if algebra == Algebra::B {
                    return false;
                }
            } else if !complex.comparable(i, j) {
                return false;
            }
        }
    }
    true
}

/// Whether the faces, sorted by size, form a multichain (`strict = false`) or
/// a chain (`strict = true`) under inclusion.
pub fn forms_chain(complex: &PeakComplex, indices: &[usize], strict: bool) -> bool {
    let mut sorted: Vec<&crate::PeakSet> = indices.iter().map(|&i| &complex.faces()[i]).collect();
    sorted.sort_by_key(|f| f.len());
    sorted.windows(2).all(|w| {
        let ok = w[0].is_subset(w[1]);
        if strict {
            ok && w[0].len() < w[1].len()
        } else {
            ok
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn poly(c: &[i64]) -> ExactPoly {
        ExactPoly::from_integers(c.iter().copied())
    }

    #[test]
    fn dim_a_examples() {
        assert_eq!(dim_a(3, 2), BigInt::from(3));
        for n in 3..10 {
            assert_eq!(dim_a(n, 0), BigInt::one());
        }
        for i in 0..10 {
            assert_eq!(dim_a(3, i), BigInt::from(i + 1));
            assert_eq!(dim_a(4, i), BigInt::from(2 * i + 1));
        }
    }

    #[test]
    fn series_a_examples() {
        assert_eq!(hilbert_series_a(3, 4), poly(&[1, 2, 3, 4, 5]));
        assert_eq!(hilbert_series_a(4, 3), poly(&[1, 3, 5, 7]));
        assert_eq!(hilbert_series_a(7, 0), poly(&[1]));
    }

    #[test]
    fn numerator_examples() {
        let form = numerator_a(3);
        assert_eq!((form.numerator, form.denominator_exponent), (poly(&[1]), 2));
        let form = numerator_a(4);
        assert_eq!((form.numerator, form.denominator_exponent), (poly(&[1, 1]), 2));
        assert_eq!(numerator_a(5).numerator, poly(&[1, 3]));
        assert_eq!(numerator_a(8).numerator, poly(&[1, 31, 47, 5]));
        assert_eq!(numerator_a(12).numerator, poly(&[1, 456, 5184, 8102, 2055, 42]));
        for n in 3..=12 {
            let form = numerator_a(n);
            assert_eq!(form.expand(12), hilbert_series_a(n, 12), "n = {n}");
        }
    }

    #[test]
    fn numerator_recurrence_matches() {
        for n in 3..=14 {
            assert_eq!(numerator_a_by_recurrence(n).unwrap(), numerator_a(n).numerator, "n = {n}");
        }
    }

    #[test]
    fn series_recurrences_hold() {
        for n in 3..=10 {
            assert!(series_recurrence_residual(n, 12).is_zero(), "n = {n}");
        }
    }

    #[test]
    fn dim_b_examples() {
        assert_eq!(dim_b(3, 1), BigInt::from(2));
        assert_eq!(dim_b(3, 2), BigInt::from(1));
        assert_eq!(dim_b(3, 3), BigInt::zero());
        assert_eq!(hilbert_series_b(3), poly(&[1, 2, 1]));
        assert_eq!(hilbert_series_b(4), poly(&[1, 3, 2]));
        assert_eq!(hilbert_series_b(5), poly(&[1, 6, 9, 4]));
        for n in 3..=9 {
            assert_eq!(hilbert_series_b_oracle(n).unwrap(), hilbert_series_b(n));
        }
    }

    #[test]
    fn monomial_oracle_examples() {
        assert_eq!(standard_monomial_oracle(3, Algebra::A, 2).unwrap(), BigInt::from(3));
        assert_eq!(standard_monomial_oracle(3, Algebra::B, 2).unwrap(), BigInt::from(1));
        assert_eq!(standard_monomial_oracle(6, Algebra::A, 0).unwrap(), BigInt::from(1));
        assert!(standard_monomial_oracle(5, Algebra::A, 7).is_err());
        for n in 3..=7 {
            for i in 0..=5 {
                assert_eq!(standard_monomial_oracle(n, Algebra::A, i).unwrap(), dim_a(n, i));
                assert_eq!(standard_monomial_oracle(n, Algebra::B, i).unwrap(), dim_b(n, i));
            }
        }
    }

    #[test]
    fn nonvanishing_matches_chains() {
        let complex = PeakComplex::new(5).unwrap();
        let (empty, three, three_five, five) = (0, 1, 2, 5);
        assert_eq!(complex.faces()[three_five].to_string(), "{3,5}");
        let cases: [&[usize]; 4] = [
            &[empty, three, three_five],
            &[three, five],
            &[three, three],
            &[five, three_five],
        ];
        for indices in cases {
            assert_eq!(
                monomial_is_nonvanishing(&complex, Algebra::A, indices),
                forms_chain(&complex, indices, false)
            );
            assert_eq!(
                monomial_is_nonvanishing(&complex, Algebra::B, indices),
                forms_chain(&complex, indices, true)
            );
        }
    }

    #[test]
    fn algebra_parses() {
        assert_eq!("A".parse::<Algebra>().unwrap(), Algebra::A);
        assert_eq!("b".parse::<Algebra>().unwrap(), Algebra::B);
        assert!("C".parse::<Algebra>().is_err());
    }
}
