//! Serde helper: big integers are written as decimal strings so no consumer
//! ever sees them rounded through a float.

use num_bigint::BigInt;
use serde::{Serialize, Serializer};

pub fn big_ints<S: Serializer>(values: &[BigInt], s: S) -> Result<S::Ok, S::Error> {
    values
        .iter()
        .map(ToString::to_string)
        .collect::<Vec<_>>()
        .serialize(s)
}
