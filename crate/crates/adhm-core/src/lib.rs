//! Exact-arithmetic workbench for ADHM data of framed symplectic and
//! orthogonal bundles on the projective plane.

pub mod exactalg;
pub mod factorization;
pub mod fixtures;
pub mod forms;
pub mod ideals;
pub mod kp;
pub mod partition;
