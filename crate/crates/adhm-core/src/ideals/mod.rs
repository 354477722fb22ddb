//! Multivariate polynomial arithmetic, Gröbner bases, and the
//! scheme-theoretic tests (dimension, complete intersection,
//! non-reducedness, elimination, invariant images).

mod builders;
mod coeff;
mod groebner;
mod hilbert;
mod poly;
mod sampling;

pub use builders::{build_ideal, build_mu_weighted, BuildError, IdealKind, IdealSpec};
pub use coeff::{Coeff, FieldTag};
pub use groebner::{
    effective_budget, elimination, groebner, is_complete_intersection, krull_dimension,
    nonreduced_ci_test, radical_membership, GroebnerBasis, GroebnerError, DEFAULT_BUDGET,
};
pub use hilbert::{multigraded_hilbert, HilbertError, MultigradedHilbert, VarWeight};
pub use poly::{normal_form, MonomialOrder, Poly, Ring};
pub use sampling::{sample_orbit_image, OrbitSample};
