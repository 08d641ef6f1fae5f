//! Binomials, factorials, multinomials, Catalan and central binomial numbers.

use num_bigint::BigInt;
use num_traits::{One, Zero};

pub fn factorial(n: u64) -> BigInt {
    (2..=n).fold(BigInt::one(), |acc, k| acc * k)
}

/// `C(n, k)`, zero when `k < 0`, `k > n` or `n < 0`.
pub fn binomial(n: i64, k: i64) -> BigInt {
    if n < 0 || k < 0 || k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for j in 0..k {
        acc = acc * (n - j) / (j + 1);
    }
    acc
}

/// `(Σ parts)! / Π parts!`.
pub fn multinomial(parts: &[u64]) -> BigInt {
    let mut total = 0i64;
    let mut acc = BigInt::one();
    for &p in parts {
        for j in 1..=p as i64 {
            total += 1;
            acc = acc * total / j;
        }
    }
    acc
}

/// `c_m = C(2m, m) / (m + 1)`.
pub fn catalan(m: u64) -> BigInt {
    binomial(2 * m as i64, m as i64) / (m + 1)
}

/// `b_n = C(n, ⌊n/2⌋)`, the number of left factors of Dyck paths of length `n`.
pub fn central_binomial(n: u64) -> BigInt {
    binomial(n as i64, (n / 2) as i64)
}

/// 0 for even `n`, 1 for odd `n`.
pub fn epsilon(n: u64) -> u64 {
    n % 2
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn binomial_edges() {
        assert_eq!(binomial(5, -1), BigInt::zero());
        assert_eq!(binomial(5, 6), BigInt::zero());
        assert_eq!(binomial(5, 0), BigInt::one());
        assert_eq!(binomial(10, 4), BigInt::from(210));
        assert_eq!(binomial(60, 30), "118264581564861424".parse::<BigInt>().unwrap());
    }

    #[test]
    fn multinomial_examples() {
        assert_eq!(multinomial(&[3]), BigInt::from(1));
        assert_eq!(multinomial(&[1, 2]), BigInt::from(3));
        assert_eq!(multinomial(&[0, 3]), BigInt::from(1));
        assert_eq!(multinomial(&[]), BigInt::from(1));
        assert_eq!(multinomial(&[2, 2, 1]), BigInt::from(30));
    }

    #[test]
    fn multinomial_matches_factorials() {
        for a in 0..6u64 {
            for b in 0..6u64 {
                for c in 0..6u64 {
                    let expected =
                        factorial(a + b + c) / (factorial(a) * factorial(b) * factorial(c));
                    assert_eq!(multinomial(&[a, b, c]), expected);
                }
            }
        }
    }

    #[test]
    fn catalan_and_central() {
        let c: Vec<BigInt> = (0..6).map(catalan).collect();
        assert_eq!(c, [1, 1, 2, 5, 14, 42].map(BigInt::from));
        let b: Vec<BigInt> = (0..7).map(central_binomial).collect();
        assert_eq!(b, [1, 1, 2, 3, 6, 10, 20].map(BigInt::from));
        assert_eq!(epsilon(4), 0);
        assert_eq!(epsilon(7), 1);
    }
}
