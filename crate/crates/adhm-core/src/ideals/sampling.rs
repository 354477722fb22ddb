//! Exact sampling of invariant values along orbits: conjugate a datum by
//! random isometries and basis changes, then evaluate the quotient-map
//! coordinates.

use crate::exactalg::{Matrix, Scalar};
use crate::forms::{random_isometry, random_sl2, ADHMDatum};
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// Values of the invariant coordinates at one sample point:
/// the triple (tr B1^2, sqrt(-1) tr B1 B2, tr B2^2) and the independent
/// entries of i* i (upper triangle of G_W (i* i)).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrbitSample {
    pub triple: [Scalar; 3],
    pub pi_entries: Vec<Scalar>,
}

impl OrbitSample {
    /// Residual of the first-factor quadric f^2 + e g at (e, f, g) = triple.
    pub fn triple_quadric_residual(&self) -> Scalar {
        let [e, f, g] = &self.triple;
        &(f * f) + &(e * g)
    }

    /// Residual of e^2 + f^2 + g^2 on the pi-entries (N = 3 case).
    pub fn pi_quadric_residual(&self) -> Scalar {
        let mut acc = Scalar::zero();
        for x in &self.pi_entries {
            acc += &(x * x);
        }
        acc
    }

    pub fn triple_is_zero(&self) -> bool {
        self.triple.iter().all(Scalar::is_zero)
    }

    pub fn pi_is_zero(&self) -> bool {
        self.pi_entries.iter().all(Scalar::is_zero)
    }
}

pub fn evaluate_invariants(x: &ADHMDatum) -> OrbitSample {
    let b1b1 = (&x.b1 * &x.b1).trace();
    let b1b2 = (&(&x.b1 * &x.b2)).trace() * Scalar::i();
    let b2b2 = (&x.b2 * &x.b2).trace();
    let pi: Matrix = &x.j() * &x.i;
    let y = &x.setting.w.gram * &pi;
    let nw = x.setting.n();
    let mut pi_entries = Vec::new();
    for r in 0..nw {
        let start = if x.setting.w.epsilon == -1 { r } else { r + 1 };
        for c in start..nw {
            pi_entries.push(y[(r, c)].clone());
        }
    }
    OrbitSample { triple: [b1b1, b1b2, b2b2], pi_entries }
}

/// Conjugate `x` by `n_samples` random isometries of V combined with random
/// SL(2) changes of the (B1, B2) plane, and evaluate the invariants at each
/// point; deterministic per seed.
pub fn sample_orbit_image(x: &ADHMDatum, n_samples: usize, seed: u64) -> Vec<OrbitSample> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..n_samples)
        .map(|s| {
            let g = random_isometry(&x.setting.v, seed.wrapping_mul(7919).wrapping_add(s as u64))
                .expect("Cayley transform retries");
            let (a, b, c, d) = random_sl2(&mut rng);
            let moved = x.conjugate(&g, None).sl2_act(a, b, c, d);
            evaluate_invariants(&moved)
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn zero_datum_maps_to_zero() {
        let setting = fixtures::fixture_setting();
        let x = ADHMDatum::new(
            setting,
            Matrix::zeros(4, 4),
            Matrix::zeros(4, 4),
            Matrix::zeros(4, 3),
        )
        .unwrap();
        let s = evaluate_invariants(&x);
        assert!(s.triple_is_zero() && s.pi_is_zero());
    }

    #[test]
    fn type_i_lands_on_first_factor() {
        for s in sample_orbit_image(&fixtures::x_i(), 20, 42) {
            assert!(s.pi_is_zero());
            assert!(s.triple_quadric_residual().is_zero());
            assert!(!s.triple_is_zero());
        }
    }

    #[test]
    fn type_ii_lands_on_second_factor() {
        for s in sample_orbit_image(&fixtures::x_ii(), 20, 43) {
            assert!(s.triple_is_zero());
            assert!(s.pi_quadric_residual().is_zero());
            assert!(!s.pi_is_zero());
        }
    }
}
