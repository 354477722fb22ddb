//! Bilinear spaces, right adjoints, the t/p decomposition, moment maps,
//! stability and costability, and Lie-algebra stabilizers.

use crate::exactalg::{commutator, Matrix, Scalar, Subspace};
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum FormsError {
    #[error("matrix shape does not match the bilinear spaces")]
    ShapeMismatch,
    #[error("matrix is not in p(V) (self-adjoint part)")]
    NotInP,
    #[error("commutator square is not a scalar endomorphism")]
    NotScalar,
    #[error("could not build an invertible Cayley transform after {0} retries")]
    CayleyRetriesExhausted(usize),
}

/// A finite-dimensional space with a nondegenerate (anti)symmetric form.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BilinearSpace {
    pub dim: usize,
    /// +1 orthogonal, -1 symplectic.
    pub epsilon: i8,
    /// Matrix of the form: (u,v) = u^T gram v.
    pub gram: Matrix,
}

impl BilinearSpace {
    pub fn new(epsilon: i8, gram: Matrix) -> Self {
        assert!(gram.is_square());
        assert!(epsilon == 1 || epsilon == -1);
        let eps = Scalar::from_int(epsilon as i64);
        assert_eq!(gram.transpose(), gram.scale(&eps), "gram^T must equal eps*gram");
        assert!(gram.inverse().is_some(), "gram must be nondegenerate");
        BilinearSpace { dim: gram.rows, epsilon, gram }
    }

    /// Standard symplectic space of even dimension k:
    /// (e1,e2) = (e3,e4) = … = 1 and all other pairings (l <= m) vanish.
    pub fn standard_symplectic(k: usize) -> Self {
        assert!(k % 2 == 0, "symplectic spaces are even-dimensional");
        let mut gram = Matrix::zeros(k, k);
        for b in 0..k / 2 {
            gram[(2 * b, 2 * b + 1)] = Scalar::one();
            gram[(2 * b + 1, 2 * b)] = Scalar::from_int(-1);
        }
        BilinearSpace { dim: k, epsilon: -1, gram }
    }

    /// Standard orthogonal space with an orthonormal basis.
    pub fn standard_orthogonal(n: usize) -> Self {
        BilinearSpace { dim: n, epsilon: 1, gram: Matrix::identity(n) }
    }

    pub fn pairing(&self, u: &[Scalar], v: &[Scalar]) -> Scalar {
        let gv = self.gram.mul_vec(v);
        let mut acc = Scalar::zero();
        for (a, b) in u.iter().zip(&gv) {
            acc += &(a * b);
        }
        acc
    }
}

/// Right adjoint f* = G_src^{-1} f^T G_dst of f: src -> dst, characterized by
/// (v, f* w)_src = (f v, w)_dst.
pub fn right_adjoint(
    f: &Matrix,
    src: &BilinearSpace,
    dst: &BilinearSpace,
) -> Result<Matrix, FormsError> {
    if f.rows != dst.dim || f.cols != src.dim {
        return Err(FormsError::ShapeMismatch);
    }
    let gsrc_inv = src.gram.inverse().expect("gram is invertible");
    Ok(&(&gsrc_inv * &f.transpose()) * &dst.gram)
}

/// Adjoint of an endomorphism of V.
pub fn star(x: &Matrix, v: &BilinearSpace) -> Matrix {
    right_adjoint(x, v, v).expect("square endomorphism")
}

/// The t/p decomposition of gl(V): t = anti-self-adjoint (Lie algebra of the
/// isometry group), p = self-adjoint.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LieSplit {
    pub t_part: Matrix,
    pub p_part: Matrix,
}

pub fn tp_split(x: &Matrix, v: &BilinearSpace) -> LieSplit {
    let xs = star(x, v);
    let half = Scalar::from_frac(1, 2);
    LieSplit {
        t_part: (&(x - &xs)).scale(&half),
        p_part: (&(x + &xs)).scale(&half),
    }
}

pub fn in_p(x: &Matrix, v: &BilinearSpace) -> bool {
    star(x, v) == *x
}

pub fn in_t(x: &Matrix, v: &BilinearSpace) -> bool {
    star(x, v) == -x
}

/// A basis of t(V) or p(V), found by exact linear algebra on the adjoint
/// constraint.  Deterministic: depends only on the gram matrix.
pub fn lie_basis(v: &BilinearSpace, part_p: bool) -> Vec<Matrix> {
    let k = v.dim;
    // Constraint rows: entries of X -+ X* = 0 as linear forms in the k^2
    // unknown entries of X.
    let sign = if part_p { Scalar::from_int(-1) } else { Scalar::one() };
    let gi = v.gram.inverse().unwrap();
    let mut rows = Vec::with_capacity(k * k);
    for r in 0..k {
        for c in 0..k {
            // (X + sign * X*)[r][c]; X*[r][c] = sum_{a,b} gi[r][a] X[b][a] g[b][c]
            let mut coeffs = vec![Scalar::zero(); k * k];
            coeffs[r * k + c] = Scalar::one();
            for a in 0..k {
                for b in 0..k {
                    let w = &(&gi[(r, a)] * &v.gram[(b, c)]) * &sign;
                    coeffs[b * k + a] = &coeffs[b * k + a] + &w;
                }
            }
            rows.push(coeffs);
        }
    }
    let m = Matrix::from_fn(k * k, k * k, |r, c| rows[r][c].clone());
    m.kernel_basis()
        .into_iter()
        .map(|flat| Matrix::from_fn(k, k, |r, c| flat[r * k + c].clone()))
        .collect()
}

/// Trace-free part of a lie_basis(p) — the paper's p'.
pub fn lie_basis_traceless_p(v: &BilinearSpace) -> Vec<Matrix> {
    let basis = lie_basis(v, true);
    let k = v.dim;
    // Solve for combinations with zero trace.
    let traces: Vec<Scalar> = basis.iter().map(|m| m.trace()).collect();
    let row = Matrix::from_fn(1, basis.len(), |_, c| traces[c].clone());
    row.kernel_basis()
        .into_iter()
        .map(|comb| {
            let mut acc = Matrix::zeros(k, k);
            for (c, b) in comb.iter().zip(&basis) {
                if !c.is_zero() {
                    acc = &acc + &b.scale(c);
                }
            }
            acc
        })
        .collect()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Flavor {
    /// V orthogonal, W symplectic (gauge group Sp(N/2)).
    SpData,
    /// V symplectic, W orthogonal (gauge group SO(N)).
    SOData,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FramedSetting {
    pub v: BilinearSpace,
    pub w: BilinearSpace,
    pub flavor: Flavor,
}

impl FramedSetting {
    /// SOData: V = standard symplectic C^k, W = standard orthogonal C^N.
    pub fn so_data(n: usize, k: usize) -> Self {
        FramedSetting {
            v: BilinearSpace::standard_symplectic(k),
            w: BilinearSpace::standard_orthogonal(n),
            flavor: Flavor::SOData,
        }
    }

    /// SpData: V = standard orthogonal C^k, W = standard symplectic C^N.
    pub fn sp_data(n: usize, k: usize) -> Self {
        FramedSetting {
            v: BilinearSpace::standard_orthogonal(k),
            w: BilinearSpace::standard_symplectic(n),
            flavor: Flavor::SpData,
        }
    }

    pub fn k(&self) -> usize {
        self.v.dim
    }

    pub fn n(&self) -> usize {
        self.w.dim
    }
}

/// An ADHM datum x = (B1, B2, i, j) with B1, B2 in p(V) and j = i*.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ADHMDatum {
    pub setting: FramedSetting,
    pub b1: Matrix,
    pub b2: Matrix,
    pub i: Matrix,
}

impl ADHMDatum {
    pub fn new(setting: FramedSetting, b1: Matrix, b2: Matrix, i: Matrix) -> Result<Self, FormsError> {
        let (k, n) = (setting.k(), setting.n());
        if b1.rows != k || b1.cols != k || b2.rows != k || b2.cols != k || i.rows != k || i.cols != n
        {
            return Err(FormsError::ShapeMismatch);
        }
        if !in_p(&b1, &setting.v) || !in_p(&b2, &setting.v) {
            return Err(FormsError::NotInP);
        }
        Ok(ADHMDatum { setting, b1, b2, i })
    }

    /// j = i*: the right adjoint of i: W -> V.
    pub fn j(&self) -> Matrix {
        right_adjoint(&self.i, &self.setting.w, &self.setting.v).expect("shapes checked")
    }

    /// Conjugate by an isometry g of V (and optionally one of W).
    pub fn conjugate(&self, g: &Matrix, h: Option<&Matrix>) -> ADHMDatum {
        let gi = g.inverse().expect("isometries are invertible");
        let i = match h {
            Some(h) => &(g * &self.i) * &h.inverse().expect("isometry"),
            None => g * &self.i,
        };
        ADHMDatum {
            setting: self.setting.clone(),
            b1: &(g * &self.b1) * &gi,
            b2: &(g * &self.b2) * &gi,
            i,
        }
    }

    /// The SL(2) change of coordinates (B1,B2) -> (aB1+bB2, cB1+dB2);
    /// preserves the moment-map fibre when ad - bc = 1.
    pub fn sl2_act(&self, a: i64, b: i64, c: i64, d: i64) -> ADHMDatum {
        assert_eq!(a * d - b * c, 1, "SL(2) requires determinant 1");
        let (sa, sb, sc, sd) = (
            Scalar::from_int(a),
            Scalar::from_int(b),
            Scalar::from_int(c),
            Scalar::from_int(d),
        );
        ADHMDatum {
            setting: self.setting.clone(),
            b1: &self.b1.scale(&sa) + &self.b2.scale(&sb),
            b2: &self.b1.scale(&sc) + &self.b2.scale(&sd),
            i: self.i.clone(),
        }
    }
}

/// mu(x) = [B1,B2] + i j, always in t(V).
pub fn moment_map(x: &ADHMDatum) -> Matrix {
    &commutator(&x.b1, &x.b2) + &(&x.i * &x.j())
}

/// m(B1,B2) = [B1,B2]; checks the p(V) precondition.
pub fn commutator_map(b1: &Matrix, b2: &Matrix, v: &BilinearSpace) -> Result<Matrix, FormsError> {
    if !in_p(b1, v) || !in_p(b2, v) {
        return Err(FormsError::NotInP);
    }
    Ok(commutator(b1, b2))
}

/// rho(i) = i i* in t(V).
pub fn rho(i: &Matrix, setting: &FramedSetting) -> Matrix {
    let j = right_adjoint(i, &setting.w, &setting.v).expect("shape");
    i * &j
}

/// pi(i) = i* i in t(W).
pub fn pi(i: &Matrix, setting: &FramedSetting) -> Matrix {
    let j = right_adjoint(i, &setting.w, &setting.v).expect("shape");
    &j * i
}

/// Stable: the smallest (B1,B2)-invariant subspace containing Im(i) is V.
pub fn is_stable(x: &ADHMDatum) -> bool {
    let k = x.setting.k();
    let cols: Vec<Vec<Scalar>> = (0..x.setting.n()).map(|c| x.i.column(c)).collect();
    let mut s = Subspace::from_spanning(k, &cols);
    loop {
        let grown = s.sum(&s.image(&x.b1)).sum(&s.image(&x.b2));
        if grown.dim() == s.dim() {
            return s.dim() == k;
        }
        s = grown;
    }
}

/// Costable: the largest (B1,B2)-invariant subspace inside Ker(j) is 0.
pub fn is_costable(x: &ADHMDatum) -> bool {
    let k = x.setting.k();
    let j = x.j();
    let mut t = Subspace::from_spanning(k, &j.kernel_basis());
    loop {
        let shrunk = t.intersect(&t.preimage(&x.b1)).intersect(&t.preimage(&x.b2));
        if shrunk.dim() == t.dim() {
            return t.dim() == 0;
        }
        t = shrunk;
    }
}

/// Basis of the Lie-algebra stabilizer
/// {xi in t(V) : [xi,B1] = [xi,B2] = 0, xi i = 0}.
pub fn stabilizer_lie(x: &ADHMDatum) -> Vec<Matrix> {
    let v = &x.setting.v;
    let k = v.dim;
    let n = x.setting.n();
    let gi = v.gram.inverse().unwrap();
    let mut rows: Vec<Vec<Scalar>> = Vec::new();
    // xi in t(V): (xi + xi*) entries vanish.
    for r in 0..k {
        for c in 0..k {
            let mut coeffs = vec![Scalar::zero(); k * k];
            coeffs[r * k + c] = Scalar::one();
            for a in 0..k {
                for b in 0..k {
                    let w = &gi[(r, a)] * &v.gram[(b, c)];
                    coeffs[b * k + a] = &coeffs[b * k + a] + &w;
                }
            }
            rows.push(coeffs);
        }
    }
    // [xi, B] = 0: entry (r,c) is sum_a xi[r][a] B[a][c] - B[r][a] xi[a][c].
    for bmat in [&x.b1, &x.b2] {
        for r in 0..k {
            for c in 0..k {
                let mut coeffs = vec![Scalar::zero(); k * k];
                for a in 0..k {
                    coeffs[r * k + a] = &coeffs[r * k + a] + &bmat[(a, c)];
                    coeffs[a * k + c] = &coeffs[a * k + c] - &bmat[(r, a)];
                }
                rows.push(coeffs);
            }
        }
    }
    // xi i = 0: entry (r,c) is sum_a xi[r][a] i[a][c].
    for r in 0..k {
        for c in 0..n {
            let mut coeffs = vec![Scalar::zero(); k * k];
            for a in 0..k {
                coeffs[r * k + a] = x.i[(a, c)].clone();
            }
            rows.push(coeffs);
        }
    }
    let m = Matrix::from_fn(rows.len(), k * k, |r, c| rows[r][c].clone());
    m.kernel_basis()
        .into_iter()
        .map(|flat| Matrix::from_fn(k, k, |r, c| flat[r * k + c].clone()))
        .collect()
}

/// Matrix of the wedge-bracket map F: wedge^2 p' -> t for a basis of p',
/// columns indexed by basis pairs (a<b), rows by flattened matrix entries.
pub fn wedge_bracket_iso(basis_p: &[Matrix]) -> Matrix {
    let k = basis_p[0].rows;
    let mut cols = Vec::new();
    for a in 0..basis_p.len() {
        for b in a + 1..basis_p.len() {
            let m = commutator(&basis_p[a], &basis_p[b]);
            cols.push(m.entries.clone());
        }
    }
    Matrix::from_columns(k * k, &cols)
}

/// Random isometry of V by Cayley transform g = (I+A)(I-A)^{-1} with A a
/// random element of t(V) with small integer coordinates; g* g = I exactly.
pub fn random_isometry(v: &BilinearSpace, seed: u64) -> Result<Matrix, FormsError> {
    let basis = lie_basis(v, false);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    const RETRIES: usize = 32;
    for _ in 0..RETRIES {
        let mut a = Matrix::zeros(v.dim, v.dim);
        for b in &basis {
            let c = Scalar::from_int(rng.gen_range(-3..=3));
            if !c.is_zero() {
                a = &a + &b.scale(&c);
            }
        }
        let id = Matrix::identity(v.dim);
        if let Some(inv) = (&id - &a).inverse() {
            let g = &(&id + &a) * &inv;
            debug_assert_eq!(&(&star(&g, v) * &g), &id);
            return Ok(g);
        }
    }
    Err(FormsError::CayleyRetriesExhausted(RETRIES))
}

/// For trace-free B1, B2 in p' of the symplectic C^4: [B1,B2]^2 must be a
/// scalar endomorphism; returns the scalar.
pub fn scalar_commutator_check(
    b1: &Matrix,
    b2: &Matrix,
    v: &BilinearSpace,
) -> Result<Scalar, FormsError> {
    if !in_p(b1, v) || !in_p(b2, v) || !b1.trace().is_zero() || !b2.trace().is_zero() {
        return Err(FormsError::NotInP);
    }
    let sq = commutator(b1, b2).pow(2);
    let c = sq[(0, 0)].clone();
    let expected = Matrix::identity(v.dim).scale(&c);
    if sq == expected {
        Ok(c)
    } else {
        Err(FormsError::NotScalar)
    }
}

/// Random element of p(V) (or trace-free p'(V)) with small integer
/// coordinates in the canonical basis; used by property tests and sampling.
pub fn random_p_element(v: &BilinearSpace, traceless: bool, rng: &mut ChaCha8Rng) -> Matrix {
    let basis = if traceless { lie_basis_traceless_p(v) } else { lie_basis(v, true) };
    let mut a = Matrix::zeros(v.dim, v.dim);
    for b in &basis {
        let c = Scalar::from_int(rng.gen_range(-3..=3));
        if !c.is_zero() {
            a = &a + &b.scale(&c);
        }
    }
    a
}

/// Random SL(2,Z) element as a product of elementary shears; exact det 1.
pub fn random_sl2(rng: &mut ChaCha8Rng) -> (i64, i64, i64, i64) {
    let (mut a, mut b, mut c, mut d) = (1i64, 0, 0, 1);
    for _ in 0..4 {
        let m: i64 = rng.gen_range(-2..=2);
        if rng.gen_bool(0.5) {
            // right-multiply by [[1, m], [0, 1]]
            b += a * m;
            d += c * m;
        } else {
            // right-multiply by [[1, 0], [m, 1]]
            a += b * m;
            c += d * m;
        }
    }
    debug_assert_eq!(a * d - b * c, 1);
    (a, b, c, d)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::{eigenvalue_multiset, Scalar};

    #[test]
    fn adjoint_characterization_on_random_vectors() {
        let v = BilinearSpace::standard_symplectic(4);
        let w = BilinearSpace::standard_orthogonal(3);
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..20 {
            let f = Matrix::from_fn(4, 3, |_, _| Scalar::gauss(rng.gen_range(-3..=3), rng.gen_range(-3..=3)));
            let fs = right_adjoint(&f, &w, &v).unwrap();
            let uu: Vec<Scalar> = (0..3).map(|_| Scalar::from_int(rng.gen_range(-3..=3))).collect();
            let vv: Vec<Scalar> = (0..4).map(|_| Scalar::from_int(rng.gen_range(-3..=3))).collect();
            // (u, f* v)_W = (f u, v)_V
            assert_eq!(w.pairing(&uu, &fs.mul_vec(&vv)), v.pairing(&f.mul_vec(&uu), &vv));
        }
    }

    #[test]
    fn double_adjoint_sign() {
        // ** = -Id between spaces of opposite epsilon, +Id for equal epsilon.
        let v = BilinearSpace::standard_symplectic(2);
        let w = BilinearSpace::standard_orthogonal(3);
        let o2 = BilinearSpace::standard_orthogonal(2);
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for _ in 0..10 {
            let f = Matrix::from_fn(2, 3, |_, _| Scalar::gauss(rng.gen_range(-3..=3), rng.gen_range(-3..=3)));
            let fss = right_adjoint(&right_adjoint(&f, &w, &v).unwrap(), &v, &w).unwrap();
            assert_eq!(fss, -&f);
            let g = Matrix::from_fn(2, 3, |_, _| Scalar::gauss(rng.gen_range(-3..=3), rng.gen_range(-3..=3)));
            let gss = right_adjoint(&right_adjoint(&g, &w, &o2).unwrap(), &o2, &w).unwrap();
            assert_eq!(gss, g);
        }
    }

    #[test]
    fn tp_dimensions_symplectic_4() {
        let v = BilinearSpace::standard_symplectic(4);
        assert_eq!(lie_basis(&v, false).len(), 10); // dim t = sp(4)
        assert_eq!(lie_basis(&v, true).len(), 6); // dim p
        assert_eq!(lie_basis_traceless_p(&v).len(), 5); // dim p'
    }

    #[test]
    fn bracket_closure_relations() {
        // [t,t] in t, [t,p] in p, [p,p] in t on full bases.
        let v = BilinearSpace::standard_symplectic(4);
        let tb = lie_basis(&v, false);
        let pb = lie_basis(&v, true);
        for a in &tb {
            for b in &tb {
                assert!(in_t(&commutator(a, b), &v));
            }
            for b in &pb {
                assert!(in_p(&commutator(a, b), &v));
            }
        }
        for a in &pb {
            for b in &pb {
                assert!(in_t(&commutator(a, b), &v));
            }
        }
    }

    #[test]
    fn composition_adjoint_identity() {
        // (f g)* = g* f* on random composable pairs.
        let u = BilinearSpace::standard_orthogonal(2);
        let v = BilinearSpace::standard_symplectic(4);
        let w = BilinearSpace::standard_orthogonal(3);
        let mut rng = ChaCha8Rng::seed_from_u64(13);
        for _ in 0..10 {
            let f = Matrix::from_fn(3, 4, |_, _| Scalar::gauss(rng.gen_range(-2..=2), rng.gen_range(-2..=2)));
            let g = Matrix::from_fn(4, 2, |_, _| Scalar::gauss(rng.gen_range(-2..=2), rng.gen_range(-2..=2)));
            let lhs = right_adjoint(&(&f * &g), &u, &w).unwrap();
            let rhs = &right_adjoint(&g, &u, &v).unwrap() * &right_adjoint(&f, &v, &w).unwrap();
            assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn moment_map_lands_in_t() {
        let setting = FramedSetting::so_data(3, 4);
        let mut rng = ChaCha8Rng::seed_from_u64(17);
        for _ in 0..10 {
            let b1 = random_p_element(&setting.v, false, &mut rng);
            let b2 = random_p_element(&setting.v, false, &mut rng);
            let i = Matrix::from_fn(4, 3, |_, _| Scalar::gauss(rng.gen_range(-2..=2), rng.gen_range(-2..=2)));
            let x = ADHMDatum::new(setting.clone(), b1, b2, i).unwrap();
            let mu = moment_map(&x);
            assert!(tp_split(&mu, &setting.v).p_part.is_zero());
        }
    }

    #[test]
    fn random_isometry_is_exact() {
        for (eps, v) in [
            (-1, BilinearSpace::standard_symplectic(4)),
            (1, BilinearSpace::standard_orthogonal(3)),
        ] {
            let _ = eps;
            for seed in 0..5 {
                let g = random_isometry(&v, seed).unwrap();
                assert_eq!(&star(&g, &v) * &g, Matrix::identity(v.dim));
                // conjugation preserves eigenvalue multisets
                let mut rng = ChaCha8Rng::seed_from_u64(seed + 100);
                let b = random_p_element(&v, false, &mut rng);
                let conj = &(&g * &b) * &g.inverse().unwrap();
                assert_eq!(
                    eigenvalue_multiset(&conj).ok(),
                    eigenvalue_multiset(&b).ok()
                );
            }
        }
    }

    #[test]
    fn stability_equivalent_to_costability_on_n() {
        // With j = i*, stability and costability are equivalent; checked on
        // random data at (N, k) = (3, 4).
        let setting = crate::fixtures::fixture_setting();
        let mut rng = ChaCha8Rng::seed_from_u64(99);
        for _ in 0..100 {
            let b1 = random_p_element(&setting.v, false, &mut rng);
            let b2 = random_p_element(&setting.v, false, &mut rng);
            let i = Matrix::from_fn(4, 3, |_, _| {
                Scalar::gauss(rng.gen_range(-1..=1), rng.gen_range(-1..=1))
            });
            let x = ADHMDatum::new(setting.clone(), b1, b2, i).unwrap();
            assert_eq!(is_stable(&x), is_costable(&x));
        }
    }

    #[test]
    fn stability_trivial_cases() {
        let setting = FramedSetting::so_data(3, 4);
        let zero = ADHMDatum::new(
            setting.clone(),
            Matrix::zeros(4, 4),
            Matrix::zeros(4, 4),
            Matrix::zeros(4, 3),
        )
        .unwrap();
        assert!(!is_stable(&zero));
        assert!(!is_costable(&zero));
    }

    #[test]
    fn stabilizer_of_zero_is_full_sp() {
        let setting = FramedSetting::so_data(3, 4);
        let zero = ADHMDatum::new(
            setting,
            Matrix::zeros(4, 4),
            Matrix::zeros(4, 4),
            Matrix::zeros(4, 3),
        )
        .unwrap();
        assert_eq!(stabilizer_lie(&zero).len(), 10);
    }
}
