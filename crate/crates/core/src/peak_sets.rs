//! Which subsets of `[n]` occur as circular peak sets, a permutation realizing
//! each one, and the bijection with left factors of Dyck paths.
//!
//! A set `S = {i_1 < … < i_k}` is a circular peak set of some `σ ∈ S_n`
//! exactly when `i_j >= 2j + 1` for every `j`. Reading `S` as the word
//! `w_1 … w_{n-1}` with `w_i = D` iff `i + 1 ∈ S` turns that condition into
//! "every prefix has at least as many `U` as `D`".

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::exact_algebra::comb::central_binomial;
use crate::perm::Permutation;

/// A subset of `[n]`, stored ascending. May or may not be a valid face.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct PeakSet {
    n: usize,
    elements: Vec<usize>,
}

impl PeakSet {
    /// Normalizes `elements` (sort, dedup) and checks they lie in `[1, n]`.
    pub fn new(n: usize, elements: impl IntoIterator<Item = usize>) -> Result<Self> {
        if n < 3 {
            return Err(Error::Domain(format!("peak sets need n >= 3, got {n}")));
        }
        let mut elements: Vec<usize> = elements.into_iter().collect();
        elements.sort_unstable();
        elements.dedup();
        if let Some(&bad) = elements.iter().find(|&&v| v == 0 || v > n) {
            return Err(Error::ElementOutOfRange { n, element: bad });
        }
        Ok(Self { n, elements })
    }

    pub fn empty(n: usize) -> Result<Self> {
        Self::new(n, [])
    }

    /// Parses `"4,5"`; the empty string is the empty set.
    pub fn parse(n: usize, text: &str) -> Result<Self> {
        let text = text.trim();
        let text = text
            .strip_prefix('{')
            .and_then(|t| t.strip_suffix('}'))
            .unwrap_or(text);
        let elements = text
            .split(',')
            .map(str::trim)
            .filter(|t| !t.is_empty())
            .map(|t| {
                t.parse::<usize>()
                    .map_err(|_| Error::Format(format!("bad set element {t:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(n, elements)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn elements(&self) -> &[usize] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    /// Dimension as a face: `|S| - 1`.
    pub fn dim(&self) -> isize {
        self.elements.len() as isize - 1
    }

    pub fn contains(&self, v: usize) -> bool {
        self.elements.binary_search(&v).is_ok()
    }

    pub fn is_subset(&self, other: &Self) -> bool {
        self.elements.iter().all(|&v| other.contains(v))
    }

    /// Bit `v` set for each element `v`. Only meaningful for `n < 64`.
    pub fn mask(&self) -> u64 {
        assert!(self.n < 64, "mask needs n < 64");
        self.elements.iter().fold(0, |m, &v| m | 1 << v)
    }

    /// The same elements viewed inside `[m]`, `m >= max element`.
    pub fn with_ambient(&self, m: usize) -> Result<Self> {
        Self::new(m, self.elements.iter().copied())
    }

    /// `S ∪ {v}`.
    pub fn with(&self, v: usize) -> Result<Self> {
        Self::new(self.n, self.elements.iter().copied().chain([v]))
    }

    /// `S \ {v}`.
    pub fn without(&self, v: usize) -> Self {
        Self {
            n: self.n,
            elements: self.elements.iter().copied().filter(|&x| x != v).collect(),
        }
    }

    /// The first violated index `j` with `(i_j, 2j + 1)`, if any.
    pub fn first_violation(&self) -> Option<(usize, usize, usize)> {
        self.elements
            .iter()
            .enumerate()
            .map(|(idx, &v)| (idx + 1, v, 2 * (idx + 1) + 1))
            .find(|&(_, v, bound)| v < bound)
    }

    /// Whether `S` is the circular peak set of some permutation of `[n]`.
    pub fn is_valid(&self) -> bool {
        self.first_violation().is_none()
    }

    /// `Ok(())` for a valid face, otherwise the diagnostic error.
    pub fn check_valid(&self) -> Result<()> {
        match self.first_violation() {
            None => Ok(()),
            Some((j, element, bound)) => Err(Error::InvalidPeakSet {
                n: self.n,
                set: self.to_string(),
                j,
                element,
                bound,
            }),
        }
    }

    /// Elements joined as `"4,5"`.
    pub fn joined(&self) -> String {
        let parts: Vec<String> = self.elements.iter().map(usize::to_string).collect();
        parts.join(",")
    }
}

impl fmt::Display for PeakSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{}}}", self.joined())
    }
}

/// `⌊(n-1)/2⌋`, the largest size of a circular peak set in `S_n`.
pub fn max_peak_count(n: usize) -> usize {
    n.saturating_sub(1) / 2
}

/// `|P_n| = C(n-1, ⌊(n-1)/2⌋)`.
pub fn count_valid(n: usize) -> BigInt {
    central_binomial(n as u64 - 1)
}

/// A permutation whose circular peak set is exactly `s`.
///
/// With `T = [i_k] \ S = {a_1 < … < a_m}` the result is
/// `a_1 i_1 a_2 i_2 … a_k i_k a_{k+1} … a_m (i_k + 1) … n`; the empty set
/// maps to the identity.
pub fn witness(s: &PeakSet) -> Result<Permutation> {
    s.check_valid()?;
    let n = s.n();
    let Some(&top) = s.elements().last() else {
        return Ok(Permutation::identity(n));
    };
    let rest: Vec<usize> = (1..=top).filter(|v| !s.contains(*v)).collect();
    let k = s.len();
    let mut values = Vec::with_capacity(n);
    for (a, &peak) in rest.iter().zip(s.elements()) {
        values.push(*a);
        values.push(peak);
    }
    values.extend_from_slice(&rest[k..]);
    values.extend(top + 1..=n);
    Permutation::new(values)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Step {
    U,
    D,
}

/// A word over `{U, D}` in which every prefix has at least as many `U` as `D`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DyckPrefix {
    steps: Vec<Step>,
}

impl DyckPrefix {
    pub fn new(steps: Vec<Step>) -> Result<Self> {
        let mut height = 0i64;
        for (i, s) in steps.iter().enumerate() {
            height += match s {
                Step::U => 1,
                Step::D => -1,
            };
            if height < 0 {
                return Err(Error::Format(format!(
                    "not a left factor: prefix of length {} dips below zero",
                    i + 1
                )));
            }
        }
        Ok(Self { steps })
    }

    pub fn steps(&self) -> &[Step] {
        &self.steps
    }

    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    pub fn down_count(&self) -> usize {
        self.steps.iter().filter(|&&s| s == Step::D).count()
    }

    /// `(length, final height)`.
    pub fn endpoint(&self) -> (usize, usize) {
        let d = self.down_count();
        (self.len(), self.len() - 2 * d)
    }
}

impl FromStr for DyckPrefix {
    type Err = Error;

    fn from_str(text: &str) -> Result<Self> {
        let steps = text
            .trim()
            .chars()
            .map(|c| match c {
                'U' | 'u' => Ok(Step::U),
                'D' | 'd' => Ok(Step::D),
                other => Err(Error::Format(format!("unexpected letter {other:?} in Dyck word"))),
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(steps)
    }
}

impl fmt::Display for DyckPrefix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for s in &self.steps {
            f.write_str(match s {
                Step::U => "U",
                Step::D => "D",
            })?;
        }
        Ok(())
    }
}

/// `w_i = D` iff `i + 1 ∈ S`, for `i = 1 … n-1`.
pub fn to_dyck(s: &PeakSet) -> Result<DyckPrefix> {
    s.check_valid()?;
    let steps = (1..s.n())
        .map(|i| if s.contains(i + 1) { Step::D } else { Step::U })
        .collect();
    DyckPrefix::new(steps)
}

/// `S = {i + 1 : w_i = D}`; the word must have length `n - 1`.
pub fn from_dyck(n: usize, w: &DyckPrefix) -> Result<PeakSet> {
    if n < 3 || w.len() != n - 1 {
        return Err(Error::Format(format!(
            "Dyck word {w} has length {}, expected n - 1 = {}",
            w.len(),
            n.saturating_sub(1)
        )));
    }
    let elements = w
        .steps()
        .iter()
        .enumerate()
        .filter(|(_, &s)| s == Step::D)
        .map(|(i, _)| i + 2);
    PeakSet::new(n, elements)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(n: usize, e: &[usize]) -> PeakSet {
        PeakSet::new(n, e.iter().copied()).unwrap()
    }

    #[test]
    fn validity_examples() {
        assert!(set(5, &[4, 5]).is_valid());
        for n in 4..10 {
            assert!(!set(n, &[3, 4]).is_valid());
            assert!(set(n, &[]).is_valid());
        }
        assert_eq!(set(7, &[3, 4, 7]).first_violation(), Some((2, 4, 5)));
        let err = set(7, &[3, 4, 7]).check_valid().unwrap_err();
        assert!(matches!(err, Error::InvalidPeakSet { j: 2, element: 4, bound: 5, .. }));
    }

    #[test]
    fn max_counts() {
        assert_eq!(max_peak_count(3), 1);
        assert_eq!(max_peak_count(5), 2);
        assert_eq!(max_peak_count(8), 3);
    }

    #[test]
    fn witness_examples() {
        assert_eq!(witness(&set(5, &[4, 5])).unwrap().values(), &[1, 4, 2, 5, 3]);
        assert_eq!(witness(&set(7, &[])).unwrap(), Permutation::identity(7));
        let w = witness(&set(6, &[3, 5])).unwrap();
        assert_eq!(w.values(), &[1, 3, 2, 5, 4, 6]);
        assert_eq!(w.circular_peak_set(), vec![3, 5]);
        assert!(witness(&set(6, &[3, 4])).is_err());
    }

    #[test]
    fn dyck_examples() {
        assert_eq!(to_dyck(&set(5, &[])).unwrap().to_string(), "UUUU");
        assert_eq!(to_dyck(&set(5, &[4, 5])).unwrap().to_string(), "UUDD");
        assert_eq!(to_dyck(&set(6, &[3, 5])).unwrap().to_string(), "UDUDU");
        let parse = |t: &str| t.parse::<DyckPrefix>().unwrap();
        assert_eq!(from_dyck(5, &parse("UUDD")).unwrap(), set(5, &[4, 5]));
        assert_eq!(from_dyck(5, &parse("UUUU")).unwrap(), set(5, &[]));
        assert_eq!(from_dyck(6, &parse("UDUDU")).unwrap(), set(6, &[3, 5]));
    }

    #[test]
    fn dyck_errors() {
        assert!("UDD".parse::<DyckPrefix>().is_err());
        assert!("UXD".parse::<DyckPrefix>().is_err());
        let w: DyckPrefix = "UUD".parse().unwrap();
        assert!(from_dyck(5, &w).is_err());
        assert_eq!(w.endpoint(), (3, 1));
        assert!(to_dyck(&set(5, &[3, 4])).is_err());
    }

    #[test]
    fn counts() {
        assert_eq!(count_valid(5), BigInt::from(6));
        assert_eq!(count_valid(3), BigInt::from(2));
        assert_eq!(count_valid(4), BigInt::from(3));
    }

    #[test]
    fn parsing() {
        assert_eq!(PeakSet::parse(5, "5, 4").unwrap(), set(5, &[4, 5]));
        assert_eq!(PeakSet::parse(5, "").unwrap(), set(5, &[]));
        assert_eq!(PeakSet::parse(5, "{3,5}").unwrap(), set(5, &[3, 5]));
        assert!(PeakSet::parse(5, "6").is_err());
        assert!(PeakSet::parse(5, "a").is_err());
        assert!(PeakSet::new(2, []).is_err());
        assert_eq!(set(5, &[3, 5]).to_string(), "{3,5}");
    }
}
