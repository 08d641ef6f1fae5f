//! Browser bindings for the demo page in `www/`.
//!
//! Every export takes plain strings or numbers and returns a JSON string, so
//! the page needs no generated TypeScript types. The `*_json` functions hold
//! the logic and are what the native tests call.

use serde_json::json;
use wasm_bindgen::prelude::*;

use circular_peaks::complex::{euler_characteristic, face_table, f_polynomial, PeakComplex};
use circular_peaks::exact_algebra::rational_to_string;
use circular_peaks::hilbert::{graded_dimensions, Algebra};
use circular_peaks::hvector::{h_polynomial, h_vector};
use circular_peaks::peak_sets::{max_peak_count, to_dyck, witness};
use circular_peaks::{PeakSet, Permutation};

/// Largest `n` the page will draw; the Hasse diagram of `P_12` has 462 nodes.
pub const DRAW_CAP: usize = 12;

fn strings<T: ToString>(values: &[T]) -> Vec<String> {
    values.iter().map(ToString::to_string).collect()
}

/// Circular peak and descent sets of a comma-separated permutation.
pub fn permutation_stats_json(perm: &str) -> Result<String, String> {
    let p = Permutation::parse(perm).map_err(|e| e.to_string())?;
    let s = p.statistics();
    Ok(json!({ "perm": p.values(), "cp": s.cp, "cdes": s.cdes }).to_string())
}

/// Whether `set` is a circular peak set for `n`; if so a witness permutation
/// and its Dyck word, otherwise the first violated bound.
pub fn check_set_json(n: usize, set: &str) -> Result<String, String> {
    let s = PeakSet::parse(n, set).map_err(|e| e.to_string())?;
    let value = match s.first_violation() {
        Some((j, element, bound)) => json!({
            "n": n,
            "set": s.elements(),
            "valid": false,
            "violation": { "j": j, "element": element, "bound": bound },
        }),
        None => {
            let w = witness(&s).map_err(|e| e.to_string())?;
            let word = to_dyck(&s).map_err(|e| e.to_string())?;
            json!({
                "n": n,
                "set": s.elements(),
                "valid": true,
                "witness": w.values(),
                "dyck": word.to_string(),
            })
        }
    };
    Ok(value.to_string())
}

/// Faces, Hasse covers, f- and h-vectors, reduced Euler characteristic and
/// the first few graded dimensions of both algebras.
pub fn complex_summary_json(n: usize) -> Result<String, String> {
    if !(3..=DRAW_CAP).contains(&n) {
        return Err(format!("n must lie in [3, {DRAW_CAP}], got {n}"));
    }
    let complex = PeakComplex::new(n).map_err(|e| e.to_string())?;
    let faces: Vec<&[usize]> = complex.faces().iter().map(PeakSet::elements).collect();
    let h = h_vector(n).map_err(|e| e.to_string())?;
    let dims_a = graded_dimensions(n, Algebra::A, 6);
    let dims_b = graded_dimensions(n, Algebra::B, max_peak_count(n) + 1);
    Ok(json!({
        "n": n,
        "faces": faces,
        "covers": complex.covers(),
        "f": strings(&face_table(n).f),
        "f_polynomial": f_polynomial(n).to_string(),
        "h": strings(&h.h),
        "h_polynomial": h_polynomial(n).to_string(),
        "euler": rational_to_string(&euler_characteristic(n)),
        "dims_a": strings(&dims_a.dims),
        "dims_b": strings(&dims_b.dims),
    })
    .to_string())
}

#[wasm_bindgen]
pub fn permutation_stats(perm: &str) -> Result<String, JsValue> {
    permutation_stats_json(perm).map_err(|e| JsValue::from_str(&e))
}

#[wasm_bindgen]
pub fn check_set(n: usize, set: &str) -> Result<String, JsValue> {
    check_set_json(n, set).map_err(|e| JsValue::from_str(&e))
}

#[wasm_bindgen]
pub fn complex_summary(n: usize) -> Result<String, JsValue> {
    complex_summary_json(n).map_err(|e| JsValue::from_str(&e))
}
