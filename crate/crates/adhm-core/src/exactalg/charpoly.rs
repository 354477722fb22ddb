//! Characteristic polynomials, eigenvalue multisets and generalized
//! eigenspaces, all exact over Q(i).
//!
//! Eigenvalues are found by the rational-root theorem over the Gaussian
//! integers Z[i] (a PID, so the theorem applies verbatim): a root p/q of a
//! polynomial with Z[i] coefficients has p dividing the constant term and q
//! dividing the leading one.  Inputs whose spectrum does not split over Q(i)
//! are rejected with `NonSplitSpectrum` — an exact pipeline has no business
//! returning approximate eigenvalues.

use super::matrix::Matrix;
use super::scalar::Scalar;
use super::subspace::Subspace;
use num::{BigInt, BigRational, Integer, One, Zero};
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum SpectrumError {
    #[error("characteristic polynomial does not split over Q(i)")]
    NonSplitSpectrum,
    #[error("constant-term norm too large for exact factorization")]
    FactorizationOverflow,
}

/// Monic characteristic polynomial det(tI - M), returned as coefficients
/// `[c_0, c_1, …, c_{n-1}, 1]` (index = power of t).
///
/// Faddeev–LeVerrier: exact over any field of characteristic 0.
pub fn char_poly(m: &Matrix) -> Vec<Scalar> {
    assert!(m.is_square(), "char_poly needs a square matrix");
    let n = m.rows;
    let mut coeffs = vec![Scalar::zero(); n + 1];
    coeffs[n] = Scalar::one();
    let mut aux = Matrix::identity(n);
    for k in 1..=n {
        aux = m * &aux;
        let c = -(&aux.trace() / &Scalar::from_int(k as i64));
        for d in 0..n {
            aux[(d, d)] = &aux[(d, d)] + &c;
        }
        coeffs[n - k] = c;
    }
    coeffs
}

/// Evaluate a coefficient-list polynomial at `x`.
pub fn eval_poly(coeffs: &[Scalar], x: &Scalar) -> Scalar {
    let mut acc = Scalar::zero();
    for c in coeffs.iter().rev() {
        acc = &(&acc * x) + c;
    }
    acc
}

/// Divide a polynomial by (t - a); the division must be exact (a is a root).
fn deflate(coeffs: &[Scalar], a: &Scalar) -> Vec<Scalar> {
    let n = coeffs.len() - 1;
    let mut out = vec![Scalar::zero(); n];
    let mut carry = Scalar::zero();
    for k in (0..n).rev() {
        carry = &coeffs[k + 1] + &(&carry * a);
        out[k] = carry.clone();
    }
    debug_assert!(eval_poly(coeffs, a).is_zero());
    out
}

/// Kernel of (M - aI)^n, n = dim.
pub fn generalized_eigenspace(m: &Matrix, a: &Scalar) -> Subspace {
    assert!(m.is_square());
    let n = m.rows;
    let mut shifted = m.clone();
    for d in 0..n {
        shifted[(d, d)] = &shifted[(d, d)] - a;
    }
    Subspace::from_spanning(n, &shifted.pow(n).kernel_basis())
}

// ---------- Gaussian-integer divisor enumeration ----------

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
struct GaussInt {
    re: BigInt,
    im: BigInt,
}

impl GaussInt {
    fn norm(&self) -> BigInt {
        &self.re * &self.re + &self.im * &self.im
    }

    fn mul(&self, o: &GaussInt) -> GaussInt {
        GaussInt {
            re: &self.re * &o.re - &self.im * &o.im,
            im: &self.re * &o.im + &self.im * &o.re,
        }
    }

    /// Exact division; None if not divisible in Z[i].
    fn checked_div(&self, d: &GaussInt) -> Option<GaussInt> {
        let n = d.norm();
        if n.is_zero() {
            return None;
        }
        let re_num = &self.re * &d.re + &self.im * &d.im;
        let im_num = &self.im * &d.re - &self.re * &d.im;
        if (&re_num % &n).is_zero() && (&im_num % &n).is_zero() {
            Some(GaussInt { re: re_num / &n, im: im_num / n })
        } else {
            None
        }
    }
}

/// Factor a positive integer by trial division; errors out when the cofactor
/// is too large to certify (bound keeps the search exact, not heuristic).
fn factor_int(mut n: BigInt) -> Result<Vec<(BigInt, u32)>, SpectrumError> {
    let mut out: Vec<(BigInt, u32)> = Vec::new();
    let mut p = BigInt::from(2);
    let bound = BigInt::from(2_000_000u64);
    while &p * &p <= n {
        if (&n % &p).is_zero() {
            let mut e = 0;
            while (&n % &p).is_zero() {
                n /= &p;
                e += 1;
            }
            out.push((p.clone(), e));
        }
        p += 1;
        if p > bound {
            return Err(SpectrumError::FactorizationOverflow);
        }
    }
    if n > BigInt::one() {
        out.push((n, 1));
    }
    Ok(out)
}

/// Gaussian primes above a rational prime p.
fn gaussian_primes_above(p: &BigInt) -> Vec<GaussInt> {
    if *p == BigInt::from(2) {
        return vec![GaussInt { re: BigInt::one(), im: BigInt::one() }];
    }
    if p % BigInt::from(4) == BigInt::from(3) {
        return vec![GaussInt { re: p.clone(), im: BigInt::zero() }];
    }
    // p = 1 mod 4: split, find a^2 + b^2 = p by search (p is modest here).
    let mut a = BigInt::one();
    loop {
        let rest = p - &a * &a;
        if rest < a.clone() * &a {
            unreachable!("every 1-mod-4 prime is a sum of two squares");
        }
        let b = rest.sqrt();
        if &b * &b == rest {
            return vec![
                GaussInt { re: a.clone(), im: b.clone() },
                GaussInt { re: a, im: -b },
            ];
        }
        a += 1;
    }
}

/// All divisors of z in Z[i] up to units, then expanded by the four units.
fn gaussian_divisors(z: &GaussInt) -> Result<Vec<GaussInt>, SpectrumError> {
    assert!(!z.norm().is_zero());
    // Collect the Gaussian prime divisors with exponents by repeated division.
    let mut primes: Vec<(GaussInt, u32)> = Vec::new();
    let mut rest = z.clone();
    for (p, _) in factor_int(z.norm())? {
        for gp in gaussian_primes_above(&p) {
            let mut e = 0;
            while let Some(q) = rest.checked_div(&gp) {
                rest = q;
                e += 1;
            }
            if e > 0 {
                primes.push((gp, e));
            }
        }
    }
    let mut divisors = vec![GaussInt { re: BigInt::one(), im: BigInt::zero() }];
    for (gp, e) in &primes {
        let mut next = Vec::new();
        for d in &divisors {
            let mut acc = d.clone();
            next.push(acc.clone());
            for _ in 0..*e {
                acc = acc.mul(gp);
                next.push(acc.clone());
            }
        }
        divisors = next;
    }
    let unit_i = GaussInt { re: BigInt::zero(), im: BigInt::one() };
    let mut out = Vec::with_capacity(divisors.len() * 4);
    for d in divisors {
        let di = d.mul(&unit_i);
        let dm = GaussInt { re: -d.re.clone(), im: -d.im.clone() };
        let dmi = GaussInt { re: -di.re.clone(), im: -di.im.clone() };
        out.push(d);
        out.push(di);
        out.push(dm);
        out.push(dmi);
    }
    Ok(out)
}

fn rational_to_scalar(p: &GaussInt, q: &GaussInt) -> Scalar {
    let n = q.norm();
    let re_num = &p.re * &q.re + &p.im * &q.im;
    let im_num = &p.im * &q.re - &p.re * &q.im;
    Scalar::new(BigRational::new(re_num, n.clone()), BigRational::new(im_num, n))
}

/// Roots in Q(i) of a polynomial with Scalar coefficients, with multiplicity.
/// Errors with NonSplitSpectrum if the polynomial has an irreducible factor of
/// degree > 1 over Q(i).
pub fn qi_roots(coeffs: &[Scalar]) -> Result<Vec<Scalar>, SpectrumError> {
    let mut poly: Vec<Scalar> = coeffs.to_vec();
    while poly.last().map(Scalar::is_zero) == Some(true) {
        poly.pop();
    }
    assert!(poly.len() > 1, "constant polynomial has no well-defined roots");
    let mut roots = Vec::new();
    // Strip roots at zero.
    while poly[0].is_zero() {
        roots.push(Scalar::zero());
        poly.remove(0);
        if poly.len() == 1 {
            return Ok(roots);
        }
    }
    'outer: while poly.len() > 1 {
        // Clear denominators to get Z[i] coefficients.
        let mut den = BigInt::one();
        for c in &poly {
            den = den.lcm(c.re.denom()).lcm(c.im.denom());
        }
        let ints: Vec<GaussInt> = poly
            .iter()
            .map(|c| GaussInt {
                re: (&c.re * BigRational::from_integer(den.clone())).to_integer(),
                im: (&c.im * BigRational::from_integer(den.clone())).to_integer(),
            })
            .collect();
        let c0 = &ints[0];
        let clead = ints.last().unwrap();
        for p in gaussian_divisors(c0)? {
            for q in gaussian_divisors(clead)? {
                let cand = rational_to_scalar(&p, &q);
                if eval_poly(&poly, &cand).is_zero() {
                    // Extract with full multiplicity before rescanning.
                    while poly.len() > 1 && eval_poly(&poly, &cand).is_zero() {
                        roots.push(cand.clone());
                        poly = deflate(&poly, &cand);
                    }
                    if poly.len() == 1 {
                        return Ok(roots);
                    }
                    if poly[0].is_zero() {
                        // Can happen after deflation only if 0 became a root,
                        // which it cannot; guard anyway.
                        return Err(SpectrumError::NonSplitSpectrum);
                    }
                    continue 'outer;
                }
            }
        }
        return Err(SpectrumError::NonSplitSpectrum);
    }
    Ok(roots)
}

/// The unordered eigenvalue multiset of a square matrix, when the spectrum
/// splits over Q(i); sorted for determinism.
pub fn eigenvalue_multiset(m: &Matrix) -> Result<Vec<Scalar>, SpectrumError> {
    let mut roots = qi_roots(&char_poly(m))?;
    debug_assert_eq!(roots.len(), m.rows);
    roots.sort_by(scalar_key_cmp);
    Ok(roots)
}

/// A deterministic total order on Q(i) used only for canonical sorting.
pub fn scalar_key_cmp(a: &Scalar, b: &Scalar) -> std::cmp::Ordering {
    a.re.cmp(&b.re).then_with(|| a.im.cmp(&b.im))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn identity_char_poly() {
        // t^2 - 2t + 1
        let p = char_poly(&Matrix::identity(2));
        assert_eq!(p, vec![Scalar::from_int(1), Scalar::from_int(-2), Scalar::from_int(1)]);
    }

    #[test]
    fn antisymmetric_efg_char_poly() {
        // entries (e,f,g)=(1,2,3): t^3 + 14 t
        let m = Matrix::from_ints(3, 3, &[0, 1, 2, -1, 0, 3, -2, -3, 0]);
        let p = char_poly(&m);
        assert_eq!(
            p,
            vec![
                Scalar::zero(),
                Scalar::from_int(14),
                Scalar::zero(),
                Scalar::from_int(1)
            ]
        );
    }

    #[test]
    fn diag_roots() {
        let m = Matrix::from_ints(3, 3, &[3, 0, 0, 0, 3, 0, 0, 0, 5]);
        let ev = eigenvalue_multiset(&m).unwrap();
        assert_eq!(ev, vec![Scalar::from_int(3), Scalar::from_int(3), Scalar::from_int(5)]);
    }

    #[test]
    fn gaussian_and_fractional_roots() {
        // (t - i)(t + i)(t - 1/2): no real splitting, fine over Q(i)
        let half = Scalar::from_frac(1, 2);
        let coeffs = vec![
            -half.clone(),                 // -1/2
            Scalar::one(),                 // t
            -half.clone(),                 // -1/2 t^2
            Scalar::one(),                 // t^3
        ];
        // coeffs encode t^3 - 1/2 t^2 + t - 1/2 = (t^2+1)(t - 1/2)
        let mut roots = qi_roots(&coeffs).unwrap();
        roots.sort_by(scalar_key_cmp);
        assert_eq!(roots, vec![-Scalar::i(), Scalar::i(), Scalar::from_frac(1, 2)]);
    }

    #[test]
    fn nonsplit_detected() {
        // t^2 - 2 has no roots in Q(i)
        let coeffs = vec![Scalar::from_int(-2), Scalar::zero(), Scalar::one()];
        assert_eq!(qi_roots(&coeffs), Err(SpectrumError::NonSplitSpectrum));
    }

    #[test]
    fn conjugation_invariance() {
        let m = Matrix::from_ints(2, 2, &[1, 1, 0, 2]);
        let g = Matrix::from_ints(2, 2, &[1, 1, 1, 2]);
        let conj = &(&g * &m) * &g.inverse().unwrap();
        assert_eq!(char_poly(&conj), char_poly(&m));
        assert_eq!(eigenvalue_multiset(&conj).unwrap(), eigenvalue_multiset(&m).unwrap());
    }

    #[test]
    fn generalized_eigenspace_dims() {
        let m = Matrix::from_ints(3, 3, &[1, 1, 0, 0, 1, 0, 0, 0, 2]);
        assert_eq!(generalized_eigenspace(&m, &Scalar::from_int(1)).dim(), 2);
        assert_eq!(generalized_eigenspace(&m, &Scalar::from_int(2)).dim(), 1);
    }
}
