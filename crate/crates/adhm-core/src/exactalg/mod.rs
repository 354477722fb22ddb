//! Exact scalar and matrix arithmetic over Q and Q(i): the substrate for
//! every other module.  All values are immutable after construction and all
//! operations are pure; nothing here ever rounds.

mod charpoly;
mod matrix;
mod scalar;
mod subspace;

pub use charpoly::{
    char_poly, eigenvalue_multiset, eval_poly, generalized_eigenspace, qi_roots, scalar_key_cmp,
    SpectrumError,
};
pub use matrix::{commutator, Matrix};
pub use scalar::Scalar;
pub use subspace::Subspace;
