//! The K-theoretic Nekrasov partition function at low gauge size:
//! equivariant weight enumeration, truncated expansion of the Koszul
//! localization class, and invariant extraction by Weyl integration,
//! cross-checked against an independent linear-algebra oracle.

mod brute;
mod series;
mod weights;
mod weyl;

use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum PartitionError {
    #[error("unsupported (N, k) size for weight enumeration")]
    UnsupportedSize,
    #[error("gauge group outside the hand-built Weyl table")]
    UnsupportedGroup,
    #[error("multidegree too large for the brute-force oracle")]
    TooLarge,
}

pub use brute::brute_force_invariant_dim;
pub use series::{TruncatedSeries, ZT};
pub use weights::{
    ambient_character, expand, koszul_character, weights_of_e, weights_of_n, HalfWeight,
    RationalCharacter,
};
pub use weyl::{
    instanton_number, invariant_ambient_part, invariant_part, nekrasov_z, GroupTag, NekrasovTerm,
    WeylData,
};

/// Default doubled truncation order (total q-degree 8).
pub const DEFAULT_ORDER: i64 = 16;
