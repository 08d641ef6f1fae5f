//! Circular peak sets of permutations and the simplicial complex `P_n` they
//! form: face counts, chains, h-vectors, zeta values and the Hilbert series of
//! the associated Stanley-Reisner and chain algebras, all in exact arithmetic.

pub mod chains;
pub mod complex;
pub mod error;
pub mod exact_algebra;
pub mod hilbert;
pub mod hvector;
pub mod peak_sets;
pub mod perm;
mod serial;
pub mod verify;

pub use error::{Error, Result};
pub use exact_algebra::{BigInt, BigRational};
pub use peak_sets::PeakSet;
pub use perm::Permutation;
