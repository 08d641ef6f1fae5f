//! Chains and multichains in `P_n`: the zeta polynomial, the multinomial
//! chain-count formula, and direct counting oracles.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::complex::{f_polynomial, PeakComplex};
use crate::error::{Error, Result};
use crate::exact_algebra::comb::{factorial, multinomial};
use crate::exact_algebra::{big_rat, int, rat, ExactPoly};
use crate::peak_sets::max_peak_count;

/// `Z(P_n, i)` as a polynomial in `i`: `(i-1)^d P_n(1/(i-1))` expanded.
pub fn zeta_polynomial(n: usize) -> ExactPoly {
    f_polynomial(n).reversed(max_peak_count(n)).shift()
}

/// `Z(P_n, i)`, the number of multichains `x_1 ⪯ … ⪯ x_{i-1}` in `P_n`.
pub fn zeta(n: usize, i: usize) -> Result<BigInt> {
    if i < 2 {
        return Err(Error::Domain(format!("zeta needs i >= 2, got {i}")));
    }
    if n < 3 {
        return Err(Error::Domain(format!("P_n needs n >= 3, got {n}")));
    }
    let value = zeta_polynomial(n).eval_int(i as i64);
    assert!(value.is_integer(), "zeta value must be an integer");
    Ok(value.to_integer())
}

/// Counts weakly increasing `length`-tuples of faces by dynamic programming
/// over the containment relation.
pub fn multichain_oracle(n: usize, length: usize) -> Result<BigInt> {
    count_chains(&PeakComplex::new(n)?, length, false)
}

/// Counts strictly increasing `i`-tuples of faces.
pub fn chain_oracle(n: usize, i: usize) -> Result<BigInt> {
    count_chains(&PeakComplex::new(n)?, i, true)
}

pub(crate) fn count_chains(complex: &PeakComplex, length: usize, strict: bool) -> Result<BigInt> {
    if length == 0 {
        return Ok(BigInt::one());
    }
    let m = complex.len();
    let below: Vec<Vec<usize>> = (0..m)
        .map(|j| {
            (0..m)
                .filter(|&i| complex.leq(i, j) && !(strict && i == j))
                .collect()
        })
        .collect();
    let mut ending: Vec<BigInt> = vec![BigInt::one(); m];
    for _ in 1..length {
        ending = below
            .iter()
            .map(|b| b.iter().map(|&i| &ending[i]).sum())
            .collect();
    }
    Ok(ending.into_iter().sum())
}

/// Calls `visit` with every `(d_1, …, d_{i+1})` summing to `n` with
/// `d_1 >= 0`, `d_k >= 1` for `2 <= k <= i`, and `d_{i+1} >= n - ⌊(n-1)/2⌋`.
pub fn for_each_chain_composition(n: usize, i: usize, mut visit: impl FnMut(&[u64])) {
    assert!(i >= 1, "chain compositions need i >= 1");
    let low_last = n - max_peak_count(n);
    let mut parts = vec![0u64; i + 1];
    for last in low_last..=n {
        parts[i] = last as u64;
        let rest = n - last;
        // d_2..d_i take at least one each; d_1 takes whatever remains.
        if rest + 1 < i {
            continue;
        }
        distribute(&mut parts, 1, i, rest, &mut visit);
    }
}

fn distribute(parts: &mut [u64], k: usize, i: usize, left: usize, visit: &mut impl FnMut(&[u64])) {
    if k == i {
        parts[0] = left as u64;
        visit(parts);
        return;
    }
    let still_needed = i - k - 1;
    for v in 1..=left.saturating_sub(still_needed) {
        parts[k] = v as u64;
        distribute(parts, k + 1, i, left - v, visit);
    }
}

/// `d_{P_n,i} = Σ C(n; d_1, …, d_{i+1}) (2 d_{i+1} - n) / n` over the
/// compositions of [`for_each_chain_composition`].
///
/// Returned as a rational; a non-integer value would mean the formula has been
/// misread, so callers compare rather than truncate.
pub fn chain_count_formula(n: usize, i: usize) -> BigRational {
    assert!(i >= 1, "chain counts need i >= 1");
    let mut total = BigRational::zero();
    for_each_chain_composition(n, i, |parts| {
        let weight = rat(2 * parts[i] as i64 - n as i64, n as i64);
        total += big_rat(multinomial(parts)) * weight;
    });
    total
}

/// `P_n(x)` rebuilt from chain counts:
/// `Σ_{i=2}^{d+2} x^{d+2-i} / (i-2)! · Π_{j=1}^{i-2} (1 - jx) · d_{P_n,i-1}`.
pub fn f_polynomial_from_chains(n: usize) -> ExactPoly {
    let d = max_peak_count(n);
    let mut total = ExactPoly::zero();
    for i in 2..=d + 2 {
        let mut term = ExactPoly::monomial(
            chain_count_formula(n, i - 1) / big_rat(factorial(i as u64 - 2)),
            d + 2 - i,
        );
        for j in 1..=(i - 2) as i64 {
            term = &term * &ExactPoly::from_coeffs(vec![int(1), int(-j)]);
        }
        total = &total + &term;
    }
    total
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn zeta_examples() {
        for i in 2..=6 {
            assert_eq!(zeta(3, i).unwrap(), BigInt::from(i));
        }
        for n in 3..10 {
            assert_eq!(zeta(n, 2).unwrap(), crate::peak_sets::count_valid(n));
        }
        assert_eq!(zeta(5, 3).unwrap(), BigInt::from(15));
        assert!(zeta(5, 1).is_err());
    }

    #[test]
    fn oracle_examples() {
        assert_eq!(multichain_oracle(3, 1).unwrap(), BigInt::from(2));
        assert_eq!(multichain_oracle(3, 2).unwrap(), BigInt::from(3));
        assert_eq!(multichain_oracle(5, 2).unwrap(), BigInt::from(15));
        assert_eq!(multichain_oracle(5, 0).unwrap(), BigInt::from(1));
        // nine strict pairs among the six faces of P_5
        assert_eq!(chain_oracle(5, 2).unwrap(), BigInt::from(9));
        assert_eq!(chain_oracle(3, 1).unwrap(), BigInt::from(2));
        assert_eq!(chain_oracle(4, 3).unwrap(), BigInt::from(0));
        assert!(chain_oracle(15, 1).is_err());
    }

    #[test]
    fn formula_examples() {
        assert_eq!(chain_count_formula(3, 1), int(2));
        assert_eq!(chain_count_formula(3, 2), int(1));
        assert_eq!(chain_count_formula(5, 1), int(6));
        assert_eq!(chain_count_formula(5, 2), int(9));
    }

    #[test]
    fn compositions_for_n3() {
        let mut seen = Vec::new();
        for_each_chain_composition(3, 1, |p| seen.push(p.to_vec()));
        assert_eq!(seen, vec![vec![1, 2], vec![0, 3]]);
        seen.clear();
        for_each_chain_composition(3, 2, |p| seen.push(p.to_vec()));
        assert_eq!(seen, vec![vec![0, 1, 2]]);
    }

    #[test]
    fn f_polynomial_from_chain_examples() {
        let poly = |c: &[i64]| ExactPoly::from_integers(c.iter().copied());
        assert_eq!(f_polynomial_from_chains(3), poly(&[1, 1]));
        assert_eq!(f_polynomial_from_chains(5), poly(&[2, 3, 1]));
        assert_eq!(f_polynomial_from_chains(4), poly(&[2, 1]));
    }
}
