use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("not a permutation of [{n}]: {reason}")]
    InvalidPermutation { n: usize, reason: String },

    #[error("{what} is limited to n <= {cap}, got n = {n}")]
    ResourceLimit {
        what: &'static str,
        n: usize,
        cap: usize,
    },

    /// The first index `j` (one-based) with `i_j < 2j + 1`.
    #[error("{set} is not a circular peak set for n = {n}: i_{j} = {element} < {bound}")]
    InvalidPeakSet {
        n: usize,
        set: String,
        j: usize,
        element: usize,
        bound: usize,
    },

    #[error("element {element} is outside [1, {n}]")]
    ElementOutOfRange { n: usize, element: usize },

    #[error("format error: {0}")]
    Format(String),

    #[error("domain error: {0}")]
    Domain(String),

    #[error("series division by a series with zero constant term")]
    ZeroConstantTerm,

    #[error("series division is not exact at y^{power}")]
    InexactDivision { power: usize },

    #[error("polynomial division left a nonzero remainder")]
    NonzeroRemainder,
}
