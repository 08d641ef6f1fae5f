//! The simplicial complex `P_n` of circular peak sets, ordered by inclusion.
//!
//! Closed forms are the production path for face counts; the subset scan in
//! [`PeakComplex`] and the recurrences below exist to check them.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::exact_algebra::comb::{binomial, central_binomial};
use crate::exact_algebra::{big_rat, catalan_series, int, rat, sign, BiSeries, ExactPoly};
use crate::peak_sets::{max_peak_count, PeakSet};
use crate::serial;

/// Largest `n` for which whole-complex enumeration is allowed (2^12 subsets
/// of `[3, n]`).
pub const POSET_CAP: usize = 14;

/// The f-vector `(p_{n,-1}, p_{n,0}, …, p_{n,d-1})`, `d = ⌊(n-1)/2⌋`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FaceTable {
    pub n: usize,
    #[serde(serialize_with = "serial::big_ints")]
    pub f: Vec<BigInt>,
}

impl FaceTable {
    /// `p_{n,dim}`, zero outside the stored range.
    pub fn get(&self, dim: isize) -> BigInt {
        usize::try_from(dim + 1)
            .ok()
            .and_then(|k| self.f.get(k).cloned())
            .unwrap_or_default()
    }

    pub fn total(&self) -> BigInt {
        self.f.iter().sum()
    }

    /// `(dim, p_{n,dim})` pairs starting at `dim = -1`.
    pub fn rows(&self) -> impl Iterator<Item = (isize, &BigInt)> {
        self.f.iter().enumerate().map(|(k, v)| (k as isize - 1, v))
    }
}

/// `dim P_n = ⌊(n-1)/2⌋ - 1`.
pub fn dimension(n: usize) -> isize {
    max_peak_count(n) as isize - 1
}

/// Valid peak sets of cardinality `dim + 1`, lexicographically. Empty when
/// `dim` is out of range.
pub fn faces(n: usize, dim: isize) -> Vec<PeakSet> {
    let mut out = Vec::new();
    if n < 3 || dim < -1 || dim > dimension(n) {
        return out;
    }
    let k = (dim + 1) as usize;
    let mut current = Vec::with_capacity(k);
    extend_faces(n, k, &mut current, &mut out);
    out
}

fn extend_faces(n: usize, k: usize, current: &mut Vec<usize>, out: &mut Vec<PeakSet>) {
    let j = current.len();
    if j == k {
        out.push(PeakSet::new(n, current.iter().copied()).expect("elements in range"));
        return;
    }
    let lo = current.last().map_or(0, |&v| v + 1).max(2 * (j + 1) + 1);
    let hi = n - (k - j - 1);
    for v in lo..=hi {
        current.push(v);
        extend_faces(n, k, current, out);
        current.pop();
    }
}

/// Every face of `P_n`, in lexicographic order of the ascending sequences
/// (`∅ < {3} < {3,5} < … < {4} < …`).
pub fn all_faces(n: usize) -> Vec<PeakSet> {
    let mut out = Vec::new();
    if n >= 3 {
        let mut current = Vec::new();
        extend_all(n, &mut current, &mut out);
    }
    out
}

fn extend_all(n: usize, current: &mut Vec<usize>, out: &mut Vec<PeakSet>) {
    out.push(PeakSet::new(n, current.iter().copied()).expect("elements in range"));
    let j = current.len() + 1;
    let lo = current.last().map_or(0, |&v| v + 1).max(2 * j + 1);
    for v in lo..=n {
        current.push(v);
        extend_all(n, current, out);
        current.pop();
    }
}

/// `p_{n,i}`: 1 for `i = -1`, `((n - 2i - 2)/(i + 1)) C(n-1, i)` for
/// `0 <= i <= ⌊(n-1)/2⌋ - 1`, zero otherwise.
pub fn face_count(n: usize, dim: isize) -> BigInt {
    if n < 3 || dim < -1 || dim > dimension(n) {
        return BigInt::zero();
    }
    if dim == -1 {
        return BigInt::one();
    }
    let i = dim as i64;
    let n = n as i64;
    let (q, r) = (binomial(n - 1, i) * (n - 2 * i - 2)).div_rem(&BigInt::from(i + 1));
    assert!(r.is_zero(), "face count closed form is not integral");
    q
}

/// The f-vector from the closed form.
pub fn face_table(n: usize) -> FaceTable {
    FaceTable {
        n,
        f: (-1..=dimension(n)).map(|i| face_count(n, i)).collect(),
    }
}

/// The f-vector built only from `p_{n+1,i} = p_{n,i-1} + p_{n,i}` and its
/// parity-dependent boundary rows, starting at `(p_{3,-1}, p_{3,0}) = (1, 1)`.
pub fn face_counts_by_recurrence(n: usize) -> FaceTable {
    assert!(n >= 3, "P_n needs n >= 3");
    // f[k] = p_{m, k-1}
    let mut f = vec![BigInt::one(), BigInt::one()];
    for m in 3..n {
        let mut next = vec![BigInt::one()];
        if m % 2 == 0 {
            for i in 0..=(m / 2 - 2) {
                next.push(&f[i] + &f[i + 1]);
            }
            next.push(f[m / 2 - 1].clone());
        } else {
            for i in 0..=((m - 3) / 2) {
                next.push(&f[i] + &f[i + 1]);
            }
        }
        f = next;
    }
    FaceTable { n, f }
}

/// `P_n(x) = Σ_{i=0}^{d} p_{n,i-1} x^{d-i}`.
pub fn f_polynomial(n: usize) -> ExactPoly {
    let table = face_table(n);
    ExactPoly::from_integers(table.f.into_iter().rev())
}

/// `P_n(x)` from `P_3 = x + 1`, `P_{n+1} = (1+x) P_n` for even `n` and
/// `x P_{n+1} = (1+x) P_n - (2/(n+1)) C(n-1, (n-1)/2)` for odd `n`.
pub fn f_polynomial_by_recurrence(n: usize) -> ExactPoly {
    assert!(n >= 3, "P_n needs n >= 3");
    let one_plus_x = ExactPoly::from_integers([1, 1]);
    let mut p = one_plus_x.clone();
    for m in 3..n {
        let grown = &one_plus_x * &p;
        p = if m % 2 == 0 {
            grown
        } else {
            let c = big_rat(binomial(m as i64 - 1, (m as i64 - 1) / 2)) * rat(2, m as i64 + 1);
            (&grown - &ExactPoly::constant(c))
                .exact_div(&ExactPoly::x())
                .expect("odd-step f-polynomial recurrence divides by x")
        };
    }
    p
}

/// `Σ_{n>=3} P_n(x) y^n` truncated after `y^order`.
///
/// Uses `P_odd = (1+x) y^3 (1 + x - C(y^2)) / (x - (1+x)^2 y^2)` and
/// `P_even = ((1+x) y P_odd - y^2 (C(y^2) - 1)) / x`, both of which expand to
/// polynomial coefficients.
pub fn f_generating_series(order: usize) -> BiSeries {
    let one_plus_x = ExactPoly::from_integers([1, 1]);
    let c_sq = catalan_series(order).substitute_y_squared();
    let one = BiSeries::one(order);
    let constant = BiSeries::constant(order, one_plus_x.clone());

    let odd_num = (&constant - &c_sq).scale(&one_plus_x).shift_up(3);
    let odd_den = &BiSeries::constant(order, ExactPoly::x())
        - &BiSeries::monomial(order, one_plus_x.pow(2), 2);
    let odd = odd_num.try_div(&odd_den).expect("P_odd expands with polynomial coefficients");

    let even_num = &odd.scale(&one_plus_x).shift_up(1) - &(&c_sq - &one).shift_up(2);
    let even = even_num
        .try_div_poly(&ExactPoly::x())
        .expect("P_even expands with polynomial coefficients");
    &odd + &even
}

/// The closed form for `P(x, y)` exactly as printed, read as
/// `[(x y^2 (x+2) - x y^2 C(y^2)) / (x - (x+1) y^2)] · [(1+y+xy)/(x+1)] - y^2`.
///
/// Its `y^4` coefficient is not a polynomial, so this returns
/// [`Error::InexactDivision`] for any `order >= 4`.
pub fn printed_f_generating_form(order: usize) -> Result<BiSeries> {
    let x = ExactPoly::x();
    let x_plus_1 = ExactPoly::from_integers([1, 1]);
    let c_sq = catalan_series(order).substitute_y_squared();
    let a = (&BiSeries::constant(order, ExactPoly::from_integers([2, 1])) - &c_sq)
        .scale(&x)
        .shift_up(2);
    let b = &BiSeries::constant(order, x.clone()) - &BiSeries::monomial(order, x_plus_1.clone(), 2);
    let g = BiSeries::from_coeffs(order, [ExactPoly::one(), x_plus_1.clone()]);
    let denom = b.scale(&x_plus_1);
    let numer = &(&a * &g) - &denom.shift_up(2);
    numer.try_div(&denom)
}

/// How a generating-function expansion compares with the polynomials it is
/// meant to generate.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FormCheck {
    /// Smallest `n` in `3..=order` whose `y^n` coefficient disagrees (or is
    /// not a polynomial), if any.
    pub first_mismatch: Option<usize>,
    pub checked_up_to: usize,
    pub detail: String,
}

impl FormCheck {
    pub fn matches(&self) -> bool {
        self.first_mismatch.is_none()
    }
}

/// Compares `y^n` coefficients of `series` against `expected(n)` for
/// `3 <= n <= order` (and checks the `y^0..y^2` coefficients vanish).
pub fn check_generating_form(
    series: Result<BiSeries>,
    order: usize,
    expected: impl Fn(usize) -> ExactPoly,
) -> FormCheck {
    let series = match series {
        Ok(s) => s,
        Err(Error::InexactDivision { power }) => {
            return FormCheck {
                first_mismatch: Some(power),
                checked_up_to: order,
                detail: format!("coefficient of y^{power} is not a polynomial in x"),
            }
        }
        Err(e) => {
            return FormCheck {
                first_mismatch: Some(0),
                checked_up_to: order,
                detail: e.to_string(),
            }
        }
    };
    for k in 0..=order {
        let want = if k >= 3 { expected(k) } else { ExactPoly::zero() };
        let got = series.coeff(k);
        if got != want {
            return FormCheck {
                first_mismatch: Some(k),
                checked_up_to: order,
                detail: format!("coefficient of y^{k} is {got}, expected {want}"),
            };
        }
    }
    FormCheck {
        first_mismatch: None,
        checked_up_to: order,
        detail: format!("coefficients of y^3..y^{order} match"),
    }
}

fn same_complex(s: &PeakSet, t: &PeakSet) -> Result<()> {
    if s.n() != t.n() {
        return Err(Error::Domain(format!(
            "faces from different complexes (n = {} and n = {})",
            s.n(),
            t.n()
        )));
    }
    s.check_valid()?;
    t.check_valid()?;
    if !s.is_subset(t) {
        return Err(Error::Domain(format!("{s} is not contained in {t}")));
    }
    Ok(())
}

/// `μ(S, T) = (-1)^{|T| - |S|}` for faces `S ⊆ T`.
pub fn moebius(s: &PeakSet, t: &PeakSet) -> Result<i64> {
    same_complex(s, t)?;
    Ok(if (t.len() - s.len()) % 2 == 0 { 1 } else { -1 })
}

/// `μ(S, T)` from the defining recursion `μ(S,S) = 1`,
/// `μ(S,T) = -Σ_{S ⊆ U ⊊ T} μ(S,U)` over faces `U`.
pub fn moebius_recursive_oracle(s: &PeakSet, t: &PeakSet) -> Result<i64> {
    same_complex(s, t)?;
    let complex = PeakComplex::new(s.n())?;
    let from = complex.index_of(s).expect("valid face is enumerated");
    let to = complex.index_of(t).expect("valid face is enumerated");
    Ok(complex.moebius_from(from)[to].expect("T lies above S"))
}

/// `χ̃(P_n) = Σ_{i=0}^{d} (-1)^{i-1} p_{n,i-1}`.
pub fn euler_characteristic(n: usize) -> BigRational {
    face_table(n)
        .f
        .into_iter()
        .enumerate()
        .map(|(i, p)| sign(i as i64 - 1) * big_rat(p))
        .sum()
}

/// 0 for odd `n`; `(2 (-1)^{n/2} / n) C(n-2, (n-2)/2)` for even `n`.
pub fn euler_characteristic_closed_form(n: usize) -> BigRational {
    if n % 2 == 1 {
        return BigRational::zero();
    }
    let value = sign((n / 2) as i64) * int(2) / int(n as i64) * big_rat(central_binomial(n as u64 - 2));
    assert!(value.is_integer(), "reduced Euler characteristic must be an integer");
    value
}

/// The whole face poset of `P_n`, found by scanning every subset of `[3, n]`.
#[derive(Clone, Debug)]
pub struct PeakComplex {
    n: usize,
    faces: Vec<PeakSet>,
    masks: Vec<u64>,
    index: HashMap<u64, usize>,
}

impl PeakComplex {
    pub fn new(n: usize) -> Result<Self> {
        if n > POSET_CAP {
            return Err(Error::ResourceLimit {
                what: "complex enumeration",
                n,
                cap: POSET_CAP,
            });
        }
        if n < 3 {
            return Err(Error::Domain(format!("P_n needs n >= 3, got {n}")));
        }
        let mut faces: Vec<PeakSet> = (0u64..1 << (n - 2))
            .map(|bits| {
                let elements = (0..n - 2).filter(|b| bits >> b & 1 == 1).map(|b| b + 3);
                PeakSet::new(n, elements).expect("elements in range")
            })
            .filter(PeakSet::is_valid)
            .collect();
        faces.sort_by(|a, b| a.elements().cmp(b.elements()));
        let masks: Vec<u64> = faces.iter().map(PeakSet::mask).collect();
        let index = masks.iter().enumerate().map(|(i, &m)| (m, i)).collect();
        Ok(Self {
            n,
            faces,
            masks,
            index,
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn faces(&self) -> &[PeakSet] {
        &self.faces
    }

    pub fn masks(&self) -> &[u64] {
        &self.masks
    }

    pub fn len(&self) -> usize {
        self.faces.len()
    }

    pub fn is_empty(&self) -> bool {
        self.faces.is_empty()
    }

    pub fn index_of(&self, s: &PeakSet) -> Option<usize> {
        (s.n() == self.n).then(|| self.index.get(&s.mask()).copied())?
    }

    /// `faces[i] ⊆ faces[j]`.
    pub fn leq(&self, i: usize, j: usize) -> bool {
        self.masks[i] & !self.masks[j] == 0
    }

    pub fn comparable(&self, i: usize, j: usize) -> bool {
        self.leq(i, j) || self.leq(j, i)
    }

    /// Hasse diagram edges `(lower, upper)`.
    pub fn covers(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for i in 0..self.len() {
            for j in 0..self.len() {
                if self.faces[j].len() == self.faces[i].len() + 1 && self.leq(i, j) {
                    out.push((i, j));
                }
            }
        }
        out
    }

    /// `μ(faces[from], U)` for every face `U`, `None` where `U ⊉ faces[from]`.
    pub fn moebius_from(&self, from: usize) -> Vec<Option<i64>> {
        let mut above: Vec<usize> = (0..self.len()).filter(|&u| self.leq(from, u)).collect();
        above.sort_by_key(|&u| self.faces[u].len());
        let mut mu = vec![None; self.len()];
        for (pos, &u) in above.iter().enumerate() {
            let value = if u == from {
                1
            } else {
                -above[..pos]
                    .iter()
                    .filter(|&&v| v != u && self.leq(v, u))
                    .map(|&v| mu[v].expect("smaller faces are done first"))
                    .sum::<i64>()
            };
            mu[u] = Some(value);
        }
        mu
    }
}

/// Checks that `S ↦ ([n+1 ∈ S], S \ {n+1})` is an order isomorphism from
/// `P_{n+1}` onto `2 × P_n` (even `n`) or onto `2 × P_n` minus the pairs
/// `(1, F)` with `F` a top-dimensional face of `P_n` (odd `n`).
pub fn verify_product_structure(n: usize) -> Result<bool> {
    if n + 1 > POSET_CAP {
        return Err(Error::ResourceLimit {
            what: "product structure check",
            n,
            cap: POSET_CAP - 1,
        });
    }
    let big = PeakComplex::new(n + 1)?;
    let small = PeakComplex::new(n)?;
    let top_size = max_peak_count(n);
    let in_target = |flag: bool, face: usize| {
        !(n % 2 == 1 && flag && small.faces()[face].len() == top_size)
    };
    let target_size = (0..small.len())
        .flat_map(|f| [(false, f), (true, f)])
        .filter(|&(flag, f)| in_target(flag, f))
        .count();

    let mut image = Vec::with_capacity(big.len());
    for s in big.faces() {
        let flag = s.contains(n + 1);
        let Ok(rest) = s.without(n + 1).with_ambient(n) else {
            return Ok(false);
        };
        let Some(face) = small.index_of(&rest) else {
            return Ok(false);
        };
        if !in_target(flag, face) {
            return Ok(false);
        }
        image.push((flag, face));
    }
    let mut distinct = image.clone();
    distinct.sort_unstable();
    distinct.dedup();
    if distinct.len() != image.len() || image.len() != target_size {
        return Ok(false);
    }
    for (i, &(fi, si)) in image.iter().enumerate() {
        for (j, &(fj, sj)) in image.iter().enumerate() {
            let product_leq = (!fi || fj) && small.leq(si, sj);
            if big.leq(i, j) != product_leq {
                return Ok(false);
            }
        }
    }
    Ok(true)
}
