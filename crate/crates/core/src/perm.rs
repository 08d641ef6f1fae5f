//! Permutations of `[n]` and their circular peak / circular descent statistics.
//!
//! A value `σ(i)` is a circular peak when `σ(i-1) < σ(i) > σ(i+1)` for an
//! interior position `2 <= i <= n-1`; the ends are never peaks and nothing
//! wraps around. A circular descent is a value with `σ(i) > σ(i+1)`.

use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};

/// Largest `n` for which `S_n` may be enumerated exhaustively.
pub const PERMUTATION_CAP: usize = 10;

/// A permutation `σ(1) … σ(n)` of `[n]`, stored by value sequence.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(transparent)]
pub struct Permutation {
    values: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PeakStatistics {
    pub cp: Vec<usize>,
    pub cdes: Vec<usize>,
}

impl Permutation {
    /// Checks that `values` is a bijection on `[n]`, `n = values.len() >= 1`.
    pub fn new(values: Vec<usize>) -> Result<Self> {
        let n = values.len();
        if n == 0 {
            return Err(Error::InvalidPermutation {
                n,
                reason: "empty sequence".into(),
            });
        }
        let mut seen = vec![false; n + 1];
        for &v in &values {
            if v == 0 || v > n {
                return Err(Error::InvalidPermutation {
                    n,
                    reason: format!("value {v} outside [1, {n}]"),
                });
            }
            if std::mem::replace(&mut seen[v], true) {
                return Err(Error::InvalidPermutation {
                    n,
                    reason: format!("value {v} repeated"),
                });
            }
        }
        Ok(Self { values })
    }

    pub fn identity(n: usize) -> Self {
        Self {
            values: (1..=n).collect(),
        }
    }

    /// Parses `"4,8,3,6,2,5,1,7"`.
    pub fn parse(text: &str) -> Result<Self> {
        let values = text
            .split(',')
            .map(|t| {
                t.trim()
                    .parse::<usize>()
                    .map_err(|_| Error::Format(format!("bad permutation entry {t:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(values)
    }

    pub fn n(&self) -> usize {
        self.values.len()
    }

    pub fn values(&self) -> &[usize] {
        &self.values
    }

    /// `σ(i)` for one-based `i`.
    pub fn at(&self, i: usize) -> usize {
        self.values[i - 1]
    }

    pub fn circular_peak_set(&self) -> Vec<usize> {
        circular_peak_set(&self.values)
    }

    pub fn circular_descent_set(&self) -> Vec<usize> {
        circular_descent_set(&self.values)
    }

    pub fn statistics(&self) -> PeakStatistics {
        PeakStatistics {
            cp: self.circular_peak_set(),
            cdes: self.circular_descent_set(),
        }
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sep = if self.n() < 10 { "" } else { "," };
        let parts: Vec<String> = self.values.iter().map(usize::to_string).collect();
        f.write_str(&parts.join(sep))
    }
}

/// Positions `2..=n-1` (one-based) whose value beats both neighbours, as an
/// ascending set of values.
pub fn circular_peak_set(values: &[usize]) -> Vec<usize> {
    let mut peaks: Vec<usize> = values
        .windows(3)
        .filter(|w| w[0] < w[1] && w[1] > w[2])
        .map(|w| w[1])
        .collect();
    peaks.sort_unstable();
    peaks
}

pub fn circular_descent_set(values: &[usize]) -> Vec<usize> {
    let mut descents: Vec<usize> = values
        .windows(2)
        .filter(|w| w[0] > w[1])
        .map(|w| w[0])
        .collect();
    descents.sort_unstable();
    descents
}

/// The circular peak set as a bitmask, bit `v` set for each peak value `v`.
pub fn peak_mask(values: &[usize]) -> u64 {
    values
        .windows(3)
        .filter(|w| w[0] < w[1] && w[1] > w[2])
        .fold(0, |m, w| m | 1 << w[1])
}

/// Rearranges `values` into the next permutation in lexicographic order.
/// Returns `false` (leaving `values` sorted ascending) after the last one.
pub fn next_permutation(values: &mut [usize]) -> bool {
    let n = values.len();
    if n < 2 {
        return false;
    }
    let Some(i) = (0..n - 1).rev().find(|&i| values[i] < values[i + 1]) else {
        values.reverse();
        return false;
    };
    let j = (i + 1..n).rev().find(|&j| values[j] > values[i]).unwrap();
    values.swap(i, j);
    values[i + 1..].reverse();
    true
}

/// Visits every permutation of `[n]` in lexicographic order.
pub fn for_each_permutation(n: usize, mut visit: impl FnMut(&[usize])) -> Result<()> {
    check_cap(n)?;
    let mut values: Vec<usize> = (1..=n).collect();
    loop {
        visit(&values);
        if !next_permutation(&mut values) {
            return Ok(());
        }
    }
}

fn check_cap(n: usize) -> Result<()> {
    if n > PERMUTATION_CAP {
        return Err(Error::ResourceLimit {
            what: "permutation enumeration",
            n,
            cap: PERMUTATION_CAP,
        });
    }
    if n == 0 {
        return Err(Error::Domain("n must be at least 1".into()));
    }
    Ok(())
}

fn normalize_set(n: usize, s: &[usize]) -> Result<Vec<usize>> {
    let mut set = s.to_vec();
    set.sort_unstable();
    set.dedup();
    if let Some(&bad) = set.iter().find(|&&v| v == 0 || v > n) {
        return Err(Error::ElementOutOfRange { n, element: bad });
    }
    Ok(set)
}

/// `CP_n(S)`: every `σ ∈ S_n` whose circular peak set is exactly `s`, in
/// lexicographic order.
pub fn enumerate_cp_class(n: usize, s: &[usize]) -> Result<Vec<Permutation>> {
    let target = normalize_set(n, s)?;
    let mut out = Vec::new();
    for_each_permutation(n, |values| {
        if circular_peak_set(values) == target {
            out.push(Permutation {
                values: values.to_vec(),
            });
        }
    })?;
    Ok(out)
}

/// `|CP_n(S)|`.
pub fn cp_class_size(n: usize, s: &[usize]) -> Result<u64> {
    let target = normalize_set(n, s)?
        .into_iter()
        .fold(0u64, |m, v| m | 1 << v);
    let mut count = 0;
    for_each_permutation(n, |values| {
        if peak_mask(values) == target {
            count += 1;
        }
    })?;
    Ok(count)
}

/// `|CP_n(S)|` for every `S ⊆ [n]` in one pass over `S_n`, indexed by the
/// bitmask of `S` shifted so that bit `v - 1` stands for value `v`.
pub fn cp_histogram(n: usize) -> Result<Vec<u64>> {
    check_cap(n)?;
    let mut hist = vec![0u64; 1 << n];
    for_each_permutation(n, |values| {
        hist[(peak_mask(values) >> 1) as usize] += 1;
    })?;
    Ok(hist)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn perm(v: &[usize]) -> Permutation {
        Permutation::new(v.to_vec()).unwrap()
    }

    #[test]
    fn peak_set_examples() {
        assert_eq!(perm(&[4, 8, 3, 6, 2, 5, 1, 7]).circular_peak_set(), vec![5, 6, 8]);
        assert!(Permutation::identity(6).circular_peak_set().is_empty());
        assert_eq!(perm(&[1, 4, 2, 5, 3]).circular_peak_set(), vec![4, 5]);
    }

    #[test]
    fn descent_set_examples() {
        assert!(Permutation::identity(5).circular_descent_set().is_empty());
        assert_eq!(perm(&[5, 4, 3, 2, 1]).circular_descent_set(), vec![2, 3, 4, 5]);
        assert_eq!(perm(&[1, 4, 2, 5, 3]).circular_descent_set(), vec![4, 5]);
        assert_eq!(perm(&[4, 8, 3, 6, 2, 5, 1, 7]).circular_descent_set(), vec![5, 6, 8]);
    }

    #[test]
    fn rejects_non_permutations() {
        assert!(Permutation::new(vec![1, 1, 2]).is_err());
        assert!(Permutation::new(vec![0, 1]).is_err());
        assert!(Permutation::new(vec![1, 4]).is_err());
        assert!(Permutation::new(vec![]).is_err());
        assert!(Permutation::parse("1,x").is_err());
        assert_eq!(Permutation::parse("2, 1").unwrap().values(), &[2, 1]);
    }

    #[test]
    fn small_n_has_no_peaks() {
        for n in 1..=2 {
            for_each_permutation(n, |v| assert!(circular_peak_set(v).is_empty())).unwrap();
        }
    }

    #[test]
    fn example_class_of_4_5() {
        let class: Vec<String> = enumerate_cp_class(5, &[4, 5])
            .unwrap()
            .iter()
            .map(ToString::to_string)
            .collect();
        let mut expected = vec![
            "14253", "14352", "24153", "34152", "24351", "34251", "15243", "15342", "25143",
            "35142", "25341", "35241",
        ];
        expected.sort();
        assert_eq!(class, expected);
    }

    #[test]
    fn class_sizes() {
        assert!(enumerate_cp_class(4, &[1, 2]).unwrap().is_empty());
        let three: Vec<String> = enumerate_cp_class(3, &[])
            .unwrap()
            .iter()
            .map(ToString::to_string)
            .collect();
        assert_eq!(three, ["123", "213", "312", "321"]);
        assert_eq!(cp_class_size(5, &[4, 5]).unwrap(), 12);
        assert_eq!(cp_class_size(5, &[3, 4]).unwrap(), 0);
        assert_eq!(cp_class_size(3, &[3]).unwrap(), 2);
        // unsorted input is normalized
        assert_eq!(cp_class_size(5, &[5, 4]).unwrap(), 12);
    }

    #[test]
    fn caps_and_ranges() {
        assert!(matches!(
            cp_class_size(11, &[]),
            Err(Error::ResourceLimit { cap: 10, .. })
        ));
        assert!(matches!(
            enumerate_cp_class(4, &[5]),
            Err(Error::ElementOutOfRange { element: 5, .. })
        ));
    }

    #[test]
    fn classes_partition_sn() {
        let mut factorial = 1u64;
        for n in 1..=8 {
            factorial *= n as u64;
            let hist = cp_histogram(n).unwrap();
            assert_eq!(hist.iter().sum::<u64>(), factorial);
        }
    }

    #[test]
    fn lexicographic_enumeration() {
        let mut seen = Vec::new();
        for_each_permutation(4, |v| seen.push(v.to_vec())).unwrap();
        assert_eq!(seen.len(), 24);
        assert!(seen.windows(2).all(|w| w[0] < w[1]));
    }
}
