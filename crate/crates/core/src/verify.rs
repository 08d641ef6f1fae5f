//! Closed forms checked against brute-force oracles and against each other.
//!
//! Each suite returns one [`Check`] per property. Oracle-backed checks run up
//! to `min(bound, max_n)` when a `max_n` is configured; checks that compare
//! two closed forms always use their full range.

use std::fmt;
use std::panic::{catch_unwind, AssertUnwindSafe};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use serde::Serialize;

use crate::chains::{
    chain_count_formula, chain_oracle, f_polynomial_from_chains, multichain_oracle, zeta,
};
use crate::complex::{
    all_faces, check_generating_form, dimension, euler_characteristic,
    euler_characteristic_closed_form, f_generating_series, f_polynomial,
    f_polynomial_by_recurrence, face_count, face_counts_by_recurrence, face_table, faces,
    moebius, moebius_recursive_oracle, printed_f_generating_form, verify_product_structure,
    PeakComplex,
};
use crate::error::{Error, Result};
use crate::exact_algebra::comb::{binomial, catalan, central_binomial, epsilon};
use crate::exact_algebra::{big_rat, catalan_series, int, rat, BiSeries, ExactPoly};
use crate::hilbert::{
    dim_a, dim_b, forms_chain, hilbert_polynomial_a, hilbert_series_a, hilbert_series_b,
    hilbert_series_b_oracle, monomial_is_nonvanishing, numerator_a, numerator_a_by_recurrence,
    series_recurrence_residual, standard_monomial_oracle, Algebra,
};
use crate::hvector::{
    h_dyck_oracle, h_entry, h_generating_series, h_polynomial, h_polynomial_by_recurrence,
    h_recurrence_table, h_vector, printed_h_generating_form,
};
use crate::peak_sets::{
    count_valid, from_dyck, max_peak_count, to_dyck, witness, DyckPrefix, PeakSet, Step,
};
use crate::perm::{circular_peak_set, cp_histogram, enumerate_cp_class, for_each_permutation};

pub const SUITES: [&str; 7] = [
    "exact_algebra",
    "perm_core",
    "peak_sets",
    "complex_poset",
    "chains_zeta",
    "hvector",
    "hilbert_algebras",
];

const SEED: u64 = 0x5eed_cafe;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Outcome {
    Pass,
    Fail,
    /// A printed formula that does not hold; the corrected form is checked
    /// separately and is what the library ships.
    Documented,
}

impl fmt::Display for Outcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.pad(match self {
            Outcome::Pass => "pass",
            Outcome::Fail => "FAIL",
            Outcome::Documented => "documented",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Check {
    pub suite: &'static str,
    pub name: String,
    pub outcome: Outcome,
    pub detail: String,
}

impl Check {
    pub fn failed(&self) -> bool {
        self.outcome == Outcome::Fail
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct VerifyConfig {
    /// Caps every oracle-backed range; `None` uses each check's own bound.
    pub max_n: Option<usize>,
}

impl VerifyConfig {
    pub fn new(max_n: Option<usize>) -> Result<Self> {
        if let Some(m) = max_n {
            if !(3..=crate::complex::POSET_CAP).contains(&m) {
                return Err(Error::Domain(format!(
                    "--max-n must lie in [3, {}], got {m}",
                    crate::complex::POSET_CAP
                )));
            }
        }
        Ok(Self { max_n })
    }

    fn limit(&self, bound: usize) -> usize {
        self.max_n.map_or(bound, |m| m.min(bound))
    }
}

/// Runs `name` (one of [`SUITES`]) or every suite for `"all"`.
pub fn run(name: &str, config: &VerifyConfig) -> Result<Vec<Check>> {
    if name == "all" {
        return Ok(SUITES.iter().flat_map(|s| run_suite(s, config)).collect());
    }
    match SUITES.iter().find(|&&s| s == name) {
        Some(s) => Ok(run_suite(s, config)),
        None => Err(Error::Domain(format!(
            "unknown suite {name:?}; expected one of {} or all",
            SUITES.join(", ")
        ))),
    }
}

fn run_suite(name: &'static str, config: &VerifyConfig) -> Vec<Check> {
    let mut suite = Suite {
        name,
        config: *config,
        checks: Vec::new(),
    };
    match name {
        "exact_algebra" => exact_algebra_suite(&mut suite),
        "perm_core" => perm_suite(&mut suite),
        "peak_sets" => peak_sets_suite(&mut suite),
        "complex_poset" => complex_suite(&mut suite),
        "chains_zeta" => chains_suite(&mut suite),
        "hvector" => hvector_suite(&mut suite),
        "hilbert_algebras" => hilbert_suite(&mut suite),
        _ => unreachable!("suite names come from SUITES"),
    }
    suite.checks
}

type Verdict = std::result::Result<String, String>;

struct Suite {
    name: &'static str,
    config: VerifyConfig,
    checks: Vec<Check>,
}

impl Suite {
    fn limit(&self, bound: usize) -> usize {
        self.config.limit(bound)
    }

    /// Runs one property; a panic inside counts as a failure.
    fn check(&mut self, name: impl Into<String>, body: impl FnOnce() -> Verdict) {
        let (outcome, detail) = match catch_unwind(AssertUnwindSafe(body)) {
            Ok(Ok(detail)) => (Outcome::Pass, detail),
            Ok(Err(detail)) => (Outcome::Fail, detail),
            Err(panic) => {
                let msg = panic
                    .downcast_ref::<String>()
                    .cloned()
                    .or_else(|| panic.downcast_ref::<&str>().map(|s| s.to_string()))
                    .unwrap_or_else(|| "panic".into());
                (Outcome::Fail, format!("panicked: {msg}"))
            }
        };
        self.checks.push(Check {
            suite: self.name,
            name: name.into(),
            outcome,
            detail,
        });
    }

    fn document(&mut self, name: impl Into<String>, holds: bool, detail: String) {
        self.checks.push(Check {
            suite: self.name,
            name: name.into(),
            outcome: if holds { Outcome::Pass } else { Outcome::Documented },
            detail,
        });
    }
}

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> std::result::Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn err(e: Error) -> String {
    e.to_string()
}

fn random_poly(rng: &mut StdRng, max_degree: usize) -> ExactPoly {
    let degree = rng.gen_range(0..=max_degree);
    ExactPoly::from_coeffs(
        (0..=degree)
            .map(|_| rat(rng.gen_range(-9..=9), rng.gen_range(1..=9)))
            .collect(),
    )
}

fn exact_algebra_suite(s: &mut Suite) {
    s.check("evaluation is multiplicative (degree <= 30, 100 random pairs)", || {
        let mut rng = StdRng::seed_from_u64(SEED);
        for trial in 0..100 {
            let p = random_poly(&mut rng, 30);
            let q = random_poly(&mut rng, 30);
            let t = rat(rng.gen_range(-7..=7), rng.gen_range(1..=5));
            let pq = &p * &q;
            ensure(pq.eval(&t) == p.eval(&t) * q.eval(&t), || {
                format!("trial {trial}: ({p})({q}) at {t}")
            })?;
        }
        Ok("100 pairs".into())
    });
    s.check("x -> x-1 and x -> x+1 are inverse (100 random polynomials)", || {
        let mut rng = StdRng::seed_from_u64(SEED + 1);
        for _ in 0..100 {
            let p = random_poly(&mut rng, 30);
            ensure(p.shift_inverse().shift() == p && p.shift().shift_inverse() == p, || {
                format!("round trip fails for {p}")
            })?;
        }
        Ok("100 polynomials".into())
    });
    s.check("Catalan series satisfies the convolution, m <= 20", || {
        let c = catalan_series(21);
        let at = |k: usize| c.entry(0, k);
        for m in 0..=20 {
            let conv: BigRational = (0..=m).map(|j| at(j) * at(m - j)).sum();
            ensure(at(m + 1) == conv, || format!("c_{} != convolution", m + 1))?;
            ensure(at(m) == big_rat(catalan(m as u64)), || format!("c_{m} is wrong"))?;
        }
        Ok("m = 0..20".into())
    });
    s.check("(1 - 2y C(y))^2 = 1 - 4y to order 20", || {
        let c = catalan_series(20);
        let root = &BiSeries::one(20) - &c.shift_up(1).scale(&ExactPoly::constant(int(2)));
        let want = BiSeries::from_coeffs(20, [ExactPoly::one(), ExactPoly::constant(int(-4))]);
        ensure(&root * &root == want, || "identity fails".into())?;
        Ok("order 20".into())
    });
}

fn valid_subsets(n: usize) -> impl Iterator<Item = (u64, PeakSet)> {
    (0u64..1 << n).map(move |mask| {
        let set = PeakSet::new(n, (1..=n).filter(|v| mask >> (v - 1) & 1 == 1)).unwrap();
        (mask, set)
    })
}

fn perm_suite(s: &mut Suite) {
    let top = s.limit(8);
    s.check(format!("circular peak classes partition S_n, n <= {top}"), || {
        let mut factorial = BigInt::one();
        for n in 1..=top {
            factorial *= n;
            let total: u64 = cp_histogram(n).map_err(err)?.iter().sum();
            ensure(BigInt::from(total) == factorial, || format!("n = {n}: {total} != {n}!"))?;
        }
        Ok(format!("n = 1..{top}"))
    });
    s.check(format!("peaks sit at interior positions, n <= {top}"), || {
        for n in 1..=top {
            let mut bad = None;
            for_each_permutation(n, |v| {
                for peak in circular_peak_set(v) {
                    let pos = v.iter().position(|&x| x == peak).unwrap() + 1;
                    if pos < 2 || pos > n - 1 {
                        bad.get_or_insert_with(|| format!("{v:?} has a peak at position {pos}"));
                    }
                }
            })
            .map_err(err)?;
            if let Some(b) = bad {
                return Err(b);
            }
        }
        Ok(format!("n = 1..{top}"))
    });
    s.check("no circular peaks when n <= 2", || {
        for n in 1..=2 {
            let mut any = false;
            for_each_permutation(n, |v| any |= !circular_peak_set(v).is_empty()).map_err(err)?;
            ensure(!any, || format!("a permutation of [{n}] has a peak"))?;
        }
        Ok("n = 1, 2".into())
    });
    s.check("CP_5({4,5}) is the twelve listed permutations", || {
        let got: Vec<String> = enumerate_cp_class(5, &[4, 5])
            .map_err(err)?
            .iter()
            .map(ToString::to_string)
            .collect();
        let mut want = EXAMPLE_CLASS.to_vec();
        want.sort_unstable();
        ensure(got == want, || format!("got {got:?}"))?;
        Ok("12 permutations, lexicographic".into())
    });
}

/// The twelve permutations of `[5]` with circular peak set `{4, 5}`.
pub const EXAMPLE_CLASS: [&str; 12] = [
    "14253", "14352", "24153", "34152", "24351", "34251", "15243", "15342", "25143", "35142",
    "25341", "35241",
];

/// Every `{U,D}` word of length `len` that never dips below zero.
fn left_factors(len: usize) -> Vec<DyckPrefix> {
    (0u64..1 << len)
        .filter_map(|bits| {
            let steps = (0..len)
                .map(|b| if bits >> b & 1 == 1 { Step::D } else { Step::U })
                .collect();
            DyckPrefix::new(steps).ok()
        })
        .collect()
}

fn peak_sets_suite(s: &mut Suite) {
    let perm_top = s.limit(8);
    s.check(
        format!("is_valid agrees with nonempty CP_n(S) for every S, n <= {perm_top}"),
        || {
            let mut sets = 0;
            for n in 3..=perm_top {
                let hist = cp_histogram(n).map_err(err)?;
                for (mask, set) in valid_subsets(n) {
                    sets += 1;
                    ensure(set.is_valid() == (hist[mask as usize] > 0), || {
                        format!("n = {n}, S = {set}: is_valid = {}", set.is_valid())
                    })?;
                }
            }
            Ok(format!("{sets} sets, n = 3..{perm_top}"))
        },
    );
    let top = s.limit(14);
    s.check(format!("Dyck encoding round-trips, n <= {top}"), || {
        for n in 3..=top {
            for face in all_faces(n) {
                let w = to_dyck(&face).map_err(err)?;
                ensure(from_dyck(n, &w).map_err(err)? == face, || format!("{face} via {w}"))?;
            }
        }
        Ok(format!("n = 3..{top}"))
    });
    s.check(format!("Dyck encoding is onto left factors of length n-1, n <= {top}"), || {
        for n in 3..=top {
            let images: std::collections::BTreeSet<DyckPrefix> = all_faces(n)
                .iter()
                .map(to_dyck)
                .collect::<Result<_>>()
                .map_err(err)?;
            let targets: std::collections::BTreeSet<DyckPrefix> =
                left_factors(n - 1).into_iter().collect();
            ensure(images == targets, || format!("n = {n}: image differs from left factors"))?;
            ensure(BigInt::from(images.len()) == count_valid(n), || {
                format!("n = {n}: {} faces", images.len())
            })?;
        }
        Ok(format!("n = 3..{top}"))
    });
    s.check(format!("witness has the requested peak set, n <= {top}"), || {
        for n in 3..=top {
            for face in all_faces(n) {
                let w = witness(&face).map_err(err)?;
                ensure(w.circular_peak_set() == face.elements(), || {
                    format!("witness {w} for {face}")
                })?;
            }
        }
        Ok(format!("n = 3..{top}"))
    });
    s.check(format!("count_valid matches a subset scan, n <= {top}"), || {
        for n in 3..=top {
            let scanned = valid_subsets(n).filter(|(_, set)| set.is_valid()).count();
            ensure(BigInt::from(scanned) == count_valid(n), || {
                format!("n = {n}: scan {scanned}, closed form {}", count_valid(n))
            })?;
            ensure(count_valid(n) == binomial(n as i64 - 1, max_peak_count(n) as i64), || {
                format!("n = {n}: count_valid is not C(n-1, d)")
            })?;
        }
        Ok(format!("n = 3..{top}"))
    });
    let ext_top = s.limit(13);
    s.check(format!("adding n+1 to a face, n <= {ext_top}"), || {
        for n in 3..=ext_top {
            let d = max_peak_count(n);
            for face in all_faces(n) {
                let grown = face.with_ambient(n + 1).and_then(|f| f.with(n + 1)).map_err(err)?;
                let expected = face.len() < d || n % 2 == 0;
                ensure(grown.is_valid() == expected, || {
                    format!("n = {n}, S = {face}: validity of S + {{n+1}} is {}", grown.is_valid())
                })?;
            }
        }
        Ok(format!("n = 3..{ext_top}"))
    });
}

fn complex_suite(s: &mut Suite) {
    let top = s.limit(14);
    s.check(format!("faces are closed under taking subsets, n <= {top}"), || {
        for n in 3..=top {
            let complex = PeakComplex::new(n).map_err(err)?;
            for face in complex.faces() {
                for &v in face.elements() {
                    let smaller = face.without(v);
                    ensure(complex.index_of(&smaller).is_some(), || {
                        format!("{face} is a face but {smaller} is not")
                    })?;
                }
            }
        }
        Ok(format!("n = 3..{top}"))
    });
    s.check(format!("vertex set is [3, n], n <= {top}"), || {
        for n in 3..=top {
            for v in 1..=n {
                let single = PeakSet::new(n, [v]).map_err(err)?;
                ensure(single.is_valid() == (v >= 3), || format!("n = {n}: {{{v}}}"))?;
            }
        }
        Ok(format!("n = 3..{top}"))
    });
    s.check(format!("dim P_n = floor((n-1)/2) - 1, n <= {top}"), || {
        for n in 3..=top {
            let d = dimension(n);
            ensure(!faces(n, d).is_empty() && faces(n, d + 1).is_empty(), || {
                format!("n = {n}: top faces not at dimension {d}")
            })?;
        }
        Ok(format!("n = 3..{top}"))
    });
    s.check(format!("face counts match enumeration, n <= {top}"), || {
        for n in 3..=top {
            let complex = PeakComplex::new(n).map_err(err)?;
            ensure(BigInt::from(complex.len()) == count_valid(n), || {
                format!("n = {n}: {} faces scanned", complex.len())
            })?;
            for dim in -1..=dimension(n) + 1 {
                let listed = faces(n, dim).len();
                let scanned = complex.faces().iter().filter(|f| f.dim() == dim).count();
                ensure(listed == scanned && BigInt::from(listed) == face_count(n, dim), || {
                    format!("n = {n}, dim {dim}: listed {listed}, scanned {scanned}")
                })?;
            }
        }
        Ok(format!("n = 3..{top}"))
    });
    s.check(format!("faces of size i+1 match left factors with i+1 D steps, n <= {top}"), || {
        for n in 3..=top {
            let factors = left_factors(n - 1);
            for dim in -1..=dimension(n) {
                let downs = (dim + 1) as usize;
                let count = factors.iter().filter(|w| w.down_count() == downs).count();
                ensure(BigInt::from(count) == face_count(n, dim), || {
                    format!("n = {n}, dim {dim}: {count} left factors")
                })?;
            }
        }
        Ok(format!("n = 3..{top}"))
    });
    s.check("f-vector recurrence matches the closed form, n <= 40", || {
        for n in 3..=40 {
            ensure(face_counts_by_recurrence(n) == face_table(n), || format!("n = {n}"))?;
            ensure(f_polynomial_by_recurrence(n) == f_polynomial(n), || format!("n = {n}"))?;
            ensure(face_table(n).total() == count_valid(n), || format!("n = {n}: sum"))?;
        }
        Ok("n = 3..40".into())
    });
    let mu_top = s.limit(10);
    s.check(format!("Moebius closed form matches the recursion, n <= {mu_top}"), || {
        let mut pairs = 0;
        for n in 3..=mu_top {
            let complex = PeakComplex::new(n).map_err(err)?;
            for (i, low) in complex.faces().iter().enumerate() {
                let mu = complex.moebius_from(i);
                for (j, high) in complex.faces().iter().enumerate() {
                    let Some(value) = mu[j] else { continue };
                    pairs += 1;
                    ensure(moebius(low, high).map_err(err)? == value, || {
                        format!("mu({low}, {high}) = {value}")
                    })?;
                }
            }
        }
        // one pair through the public single-interval oracle as well
        let (low, high) = (PeakSet::empty(7).unwrap(), PeakSet::new(7, [3, 5, 7]).unwrap());
        ensure(moebius_recursive_oracle(&low, &high) == moebius(&low, &high), || {
            "single-interval oracle disagrees".into()
        })?;
        Ok(format!("{pairs} intervals, n = 3..{mu_top}"))
    });
    s.check("reduced Euler characteristic closed form, n <= 40", || {
        for n in 3..=40 {
            let chi = euler_characteristic(n);
            ensure(chi == euler_characteristic_closed_form(n), || format!("n = {n}: {chi}"))?;
            ensure(n % 2 == 0 || chi.is_zero(), || format!("n = {n} is odd but chi = {chi}"))?;
        }
        ensure(euler_characteristic(4) == int(1) && euler_characteristic(6) == int(-2), || {
            "chi(P_4), chi(P_6) are not 1, -2".into()
        })?;
        Ok("n = 3..40".into())
    });
    let prod_top = s.limit(13);
    s.check(format!("P_(n+1) splits as a product with P_n, n <= {prod_top}"), || {
        for n in 3..prod_top {
            ensure(verify_product_structure(n).map_err(err)?, || format!("n = {n}"))?;
        }
        Ok(format!("n = 3..{}", prod_top - 1))
    });
    s.check("corrected P(x, y) generates P_n(x), 3 <= n <= 20", || {
        let report = check_generating_form(Ok(f_generating_series(20)), 20, f_polynomial);
        ensure(report.matches(), || report.detail.clone())?;
        Ok(report.detail)
    });
    let printed = check_generating_form(printed_f_generating_form(20), 20, f_polynomial);
    s.document(
        "printed P(x, y) as a generating function",
        printed.matches(),
        printed.detail,
    );
}

fn chains_suite(s: &mut Suite) {
    let top = s.limit(8);
    s.check(format!("zeta matches multichain counts, n <= {top}, 2 <= i <= 6"), || {
        for n in 3..=top {
            for i in 2..=6 {
                let z = zeta(n, i).map_err(err)?;
                let oracle = multichain_oracle(n, i - 1).map_err(err)?;
                ensure(z == oracle, || format!("n = {n}, i = {i}: {z} vs {oracle}"))?;
            }
        }
        Ok(format!("n = 3..{top}"))
    });
    let chain_top = s.limit(12);
    s.check(format!("chain-count formula matches chain enumeration, n <= {chain_top}, i <= 4"), || {
        for n in 3..=chain_top {
            for i in 1..=4 {
                let formula = chain_count_formula(n, i);
                let oracle = big_rat(chain_oracle(n, i).map_err(err)?);
                ensure(formula == oracle, || format!("n = {n}, i = {i}: {formula} vs {oracle}"))?;
            }
        }
        Ok(format!("n = 3..{chain_top}"))
    });
    s.check("single-face chains number C(n-1, d), n <= 20", || {
        for n in 3..=20 {
            ensure(chain_count_formula(n, 1) == big_rat(count_valid(n)), || format!("n = {n}"))?;
        }
        Ok("n = 3..20".into())
    });
    s.check("zeta recurrence across n, n <= 12, 2 <= i <= 6", || {
        for n in 3..=12 {
            for i in 2..=6i64 {
                let z_next = big_rat(zeta(n + 1, i as usize).map_err(err)?);
                let z = big_rat(zeta(n, i as usize).map_err(err)?);
                let mut correction = BigRational::zero();
                if epsilon(n as u64) == 1 {
                    let power = BigInt::from(i - 1).pow((n as u32 + 1) / 2);
                    correction = big_rat(power * 2 * central_binomial(n as u64 - 1))
                        / int(n as i64 + 1);
                }
                ensure((z_next - int(i) * z + correction).is_zero(), || {
                    format!("n = {n}, i = {i}")
                })?;
            }
        }
        Ok("n = 3..12".into())
    });
    s.check("chain counts rebuild zeta, n <= 10, 2 <= i <= 6", || {
        for n in 3..=10 {
            for i in 2..=6i64 {
                let rebuilt: BigRational = (2..=max_peak_count(n) as i64 + 2)
                    .map(|j| chain_count_formula(n, j as usize - 1) * big_rat(binomial(i - 2, j - 2)))
                    .sum();
                let z = big_rat(zeta(n, i as usize).map_err(err)?);
                ensure(rebuilt == z, || format!("n = {n}, i = {i}: {rebuilt} vs {z}"))?;
            }
        }
        Ok("n = 3..10".into())
    });
    s.check("chain counts rebuild P_n(x), n <= 12", || {
        for n in 3..=12 {
            ensure(f_polynomial_from_chains(n) == f_polynomial(n), || format!("n = {n}"))?;
        }
        Ok("n = 3..12".into())
    });
}

fn hvector_suite(s: &mut Suite) {
    s.check("h closed form = h recurrence = P_n(x-1), n <= 40", || {
        for n in 3..=40 {
            let closed = h_vector(n).map_err(err)?;
            ensure(closed.to_polynomial() == h_polynomial(n), || format!("n = {n}: P_n(x-1)"))?;
            ensure(h_recurrence_table(n) == closed, || format!("n = {n}: h recurrence"))?;
            let by_rec = h_polynomial_by_recurrence(n).map_err(err)?;
            ensure(by_rec == h_polynomial(n), || format!("n = {n}: H_n recurrence"))?;
        }
        Ok("n = 3..40".into())
    });
    let top = s.limit(16);
    s.check(format!("h entries count Dyck left factors, n <= {top}"), || {
        for n in 3..=top {
            for i in 0..=max_peak_count(n) {
                let (closed, oracle) = (h_entry(n, i).map_err(err)?, h_dyck_oracle(n, i).map_err(err)?);
                ensure(closed == oracle, || format!("n = {n}, i = {i}: {closed} vs {oracle}"))?;
            }
        }
        Ok(format!("n = 3..{top}"))
    });
    s.check("H_(n+1) = x H_n for even n <= 20", || {
        for n in (4..=20).step_by(2) {
            ensure(h_polynomial(n + 1) == &ExactPoly::x() * &h_polynomial(n), || format!("n = {n}"))?;
        }
        Ok("n = 4, 6, .., 20".into())
    });
    s.check("corrected H(x, y) generates H_n(x), 3 <= n <= 20", || {
        let report = check_generating_form(Ok(h_generating_series(20)), 20, h_polynomial);
        ensure(report.matches(), || report.detail.clone())?;
        Ok(report.detail)
    });
    let printed = check_generating_form(printed_h_generating_form(20), 20, h_polynomial);
    s.document(
        "printed H(x, y) as a generating function",
        printed.matches(),
        printed.detail,
    );
}

fn hilbert_suite(s: &mut Suite) {
    let top = s.limit(7);
    s.check(format!("dim A^i matches standard monomials, n <= {top}, i <= 5"), || {
        for n in 3..=top {
            for i in 0..=5 {
                let oracle = standard_monomial_oracle(n, Algebra::A, i).map_err(err)?;
                ensure(dim_a(n, i) == oracle, || format!("n = {n}, i = {i}: {oracle}"))?;
            }
        }
        Ok(format!("n = 3..{top}"))
    });
    s.check(format!("dim B^i matches standard monomials, n <= {top}, all i"), || {
        for n in 3..=top {
            for i in 0..=max_peak_count(n) + 2 {
                let oracle = standard_monomial_oracle(n, Algebra::B, i).map_err(err)?;
                ensure(dim_b(n, i) == oracle, || format!("n = {n}, i = {i}: {oracle}"))?;
            }
        }
        Ok(format!("n = 3..{top}"))
    });
    let poly_top = s.limit(12);
    s.check(format!("Hilbert polynomial counts multichains, n <= {poly_top}, i <= 8"), || {
        for n in 3..=poly_top {
            let p = hilbert_polynomial_a(n);
            for i in 0..=8 {
                let oracle = big_rat(multichain_oracle(n, i).map_err(err)?);
                ensure(p.eval_int(i as i64) == oracle, || format!("n = {n}, i = {i}"))?;
            }
        }
        Ok(format!("n = 3..{poly_top}"))
    });
    s.check("Hilb A for n = 3, 4 is 1/(1-x)^2 and (1+x)/(1-x)^2 to order 12", || {
        let inv_sq = ExactPoly::from_integers((1..=13).collect::<Vec<i64>>());
        ensure(hilbert_series_a(3, 12) == inv_sq, || "n = 3".into())?;
        let with_numer = (&ExactPoly::from_integers([1, 1]) * &inv_sq).truncate(12);
        ensure(hilbert_series_a(4, 12) == with_numer, || "n = 4".into())?;
        Ok("order 12".into())
    });
    s.check("numerator over (1-x)^floor((n+1)/2) reproduces Hilb A, n <= 12", || {
        for n in 3..=12 {
            let form = numerator_a(n);
            ensure(form.denominator_exponent == (n + 1) / 2, || format!("n = {n}: exponent"))?;
            ensure(form.numerator.is_integral(), || format!("n = {n}: {}", form.numerator))?;
            ensure(form.expand(12) == hilbert_series_a(n, 12), || format!("n = {n}"))?;
        }
        Ok("n = 3..12, order 12".into())
    });
    let printed_exponent = printed_exponent_report();
    s.document(
        "printed exponent floor(n/2) for the numerator",
        printed_exponent.is_none(),
        printed_exponent.unwrap_or_else(|| "polynomial numerator for n = 3..12".into()),
    );
    s.check("numerator recurrences rebuild the numerators, n <= 12", || {
        for n in 3..=12 {
            let rebuilt = numerator_a_by_recurrence(n).map_err(err)?;
            ensure(rebuilt == numerator_a(n).numerator, || format!("n = {n}: {rebuilt}"))?;
        }
        Ok("n = 3..12".into())
    });
    s.check("even-n derivative recurrence for Hilb A, n <= 10, order 12", || {
        for n in (4..=10).step_by(2) {
            let r = series_recurrence_residual(n, 12);
            ensure(r.is_zero(), || format!("n = {n}: residual {r}"))?;
        }
        Ok("n = 4, 6, 8, 10".into())
    });
    s.check("odd-n derivative recurrence for Hilb A, n <= 9, order 12", || {
        for n in (3..=9).step_by(2) {
            let r = series_recurrence_residual(n, 12);
            ensure(r.is_zero(), || format!("n = {n}: residual {r}"))?;
        }
        Ok("n = 3, 5, 7, 9".into())
    });
    s.check("Hilb B has degree d+1 and x-coefficient C(n-1, d), n <= 12", || {
        for n in 3..=12 {
            let b = hilbert_series_b(n);
            ensure(b.degree() == Some(max_peak_count(n) + 1), || format!("n = {n}: degree"))?;
            ensure(b.coeff(1) == big_rat(count_valid(n)), || format!("n = {n}: x-coefficient"))?;
        }
        Ok("n = 3..12".into())
    });
    s.check(format!("Hilb B matches chain enumeration, n <= {poly_top}"), || {
        for n in 3..=poly_top {
            ensure(hilbert_series_b_oracle(n).map_err(err)? == hilbert_series_b(n), || {
                format!("n = {n}")
            })?;
        }
        Ok(format!("n = 3..{poly_top}"))
    });
    let sample_top = s.limit(6);
    s.check(format!("nonvanishing monomials are (multi)chains, n <= {sample_top}, 1000 samples each"), || {
        let mut rng = StdRng::seed_from_u64(SEED + 2);
        for n in 3..=sample_top {
            let complex = PeakComplex::new(n).map_err(err)?;
            for _ in 0..1000 {
                let size = rng.gen_range(1..=5);
                let indices: Vec<usize> =
                    (0..size).map(|_| rng.gen_range(0..complex.len())).collect();
                for (algebra, strict) in [(Algebra::A, false), (Algebra::B, true)] {
                    ensure(
                        monomial_is_nonvanishing(&complex, algebra, &indices)
                            == forms_chain(&complex, &indices, strict),
                        || format!("n = {n}, algebra {algebra}, indices {indices:?}"),
                    )?;
                }
            }
        }
        Ok(format!("n = 3..{sample_top}"))
    });
}

/// With `(1-x)^{⌊n/2⌋}` instead of `(1-x)^{⌊(n+1)/2⌋}`, the product with
/// `Hilb A` stops being a polynomial for odd `n`; reports the first such `n`.
fn printed_exponent_report() -> Option<String> {
    let one_minus_x = ExactPoly::from_integers([1, -1]);
    let order = 24;
    (3..=12).find_map(|n: usize| {
        let product = (&hilbert_series_a(n, order) * &one_minus_x.pow((n / 2) as u32)).truncate(order);
        let tail_nonzero = (order / 2..=order).any(|k| !product.coeff(k).is_zero());
        tail_nonzero.then(|| {
            format!(
                "n = {n}: Hilb A (1-x)^{} is not a polynomial (coefficients stay nonzero through x^{order}); exponent floor((n+1)/2) = {} works",
                n / 2,
                (n + 1) / 2
            )
        })
    })
}
