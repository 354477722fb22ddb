//! Independent linear-algebra oracle for invariant dimensions: builds the
//! monomial basis of C[N] in a given q-multidegree and computes the
//! G'_k-invariant subspace exactly.
//!
//! A monomial is torus-invariant iff its z-weight vanishes; within the
//! weight-zero span, invariance under the identity component is the kernel
//! of the raising operators (a weight-zero vector killed by the positive
//! root operators spans a trivial subrepresentation). The finite component
//! generators act by signed monomial maps and are handled by trace
//! averaging.

use super::PartitionError;
use crate::exactalg::{Matrix, Scalar};
use crate::forms::Flavor;
use num::{BigInt, BigRational, Zero};
use std::collections::HashMap;

/// Gauge sizes supported by the hand-built group table.
fn group_data(flavor: Flavor, k: usize) -> Result<(Vec<Vec<i32>>, Vec<Matrix>, Vec<Matrix>), PartitionError> {
    // returns (z-weights per V basis line, raising operators, finite
    // component generators); bases are chosen weight-adapted for the grams
    // antidiag(1..1) (orthogonal) and standard symplectic.
    let e = |entries: &[(usize, usize, i64)], k: usize| {
        let mut m = Matrix::zeros(k, k);
        for &(r, c, v) in entries {
            m[(r, c)] = Scalar::from_int(v);
        }
        m
    };
    match (flavor, k) {
        (Flavor::SpData, 1) => Ok((vec![vec![]], vec![], vec![e(&[(0, 0, -1)], 1)])),
        (Flavor::SpData, 2) => Ok((
            vec![vec![1], vec![-1]],
            vec![],
            vec![e(&[(0, 1, 1), (1, 0, 1)], 2)],
        )),
        (Flavor::SpData, 3) => Ok((
            vec![vec![1], vec![0], vec![-1]],
            vec![e(&[(0, 1, 1), (1, 2, -1)], 3)],
            vec![e(&[(0, 0, -1), (1, 1, -1), (2, 2, -1)], 3)],
        )),
        (Flavor::SOData, 2) => Ok((vec![vec![1], vec![-1]], vec![e(&[(0, 1, 1)], 2)], vec![])),
        (Flavor::SOData, 4) => Ok((
            vec![vec![1, 0], vec![-1, 0], vec![0, 1], vec![0, -1]],
            vec![e(&[(0, 2, 1), (3, 1, -1)], 4), e(&[(2, 3, 1)], 4)],
            vec![],
        )),
        _ => Err(PartitionError::UnsupportedGroup),
    }
}

#[cfg(test)]
fn gram(flavor: Flavor, k: usize) -> Matrix {
    match flavor {
        // orthogonal V, antidiagonal ones
        Flavor::SpData => Matrix::from_fn(k, k, |r, c| {
            if r + c == k - 1 { Scalar::one() } else { Scalar::zero() }
        }),
        // symplectic V, standard pairs
        Flavor::SOData => Matrix::from_fn(k, k, |r, c| {
            if r % 2 == 0 && c == r + 1 {
                Scalar::one()
            } else if r % 2 == 1 && c == r - 1 {
                -Scalar::one()
            } else {
                Scalar::zero()
            }
        }),
    }
}

/// Index pairs of the independent entries of S = G_V B: (a, b) with a <= b
/// for symmetric S (orthogonal V), a < b for antisymmetric S (symplectic V).
fn b_pairs(flavor: Flavor, k: usize) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    for a in 0..k {
        let start = if flavor == Flavor::SpData { a } else { a + 1 };
        for b in start..k {
            out.push((a, b));
        }
    }
    out
}

#[derive(Clone)]
struct VarTable {
    /// Per variable: doubled (q1, q2) degree and z-weight.
    dq: Vec<(i64, i64)>,
    zw: Vec<Vec<i32>>,
    /// B-sector pair indices and the index layout offsets.
    pairs: Vec<(usize, usize)>,
    k: usize,
    n: usize,
    flavor: Flavor,
}

impl VarTable {
    fn new(flavor: Flavor, n: usize, k: usize, lines: &[Vec<i32>]) -> VarTable {
        let pairs = b_pairs(flavor, k);
        let mut dq = Vec::new();
        let mut zw = Vec::new();
        for sector in [(2i64, 0i64), (0, 2)] {
            for &(a, b) in &pairs {
                dq.push(sector);
                zw.push(lines[a].iter().zip(&lines[b]).map(|(x, y)| x + y).collect());
            }
        }
        for r in 0..k {
            for _c in 0..n {
                dq.push((1, 1));
                zw.push(lines[r].clone());
            }
        }
        VarTable { dq, zw, pairs, k, n, flavor }
    }

    fn nvars(&self) -> usize {
        self.dq.len()
    }

    /// Variable index of the S-entry (x, y) in B-sector `s` (0 or 1), with
    /// the symmetry sign.
    fn s_entry(&self, s: usize, x: usize, y: usize) -> Option<(usize, BigRational)> {
        let (a, b, sign) = if x <= y { (x, y, 1) } else { (y, x, if self.flavor == Flavor::SpData { 1 } else { -1 }) };
        let idx = self.pairs.iter().position(|&p| p == (a, b))?;
        Some((s * self.pairs.len() + idx, BigRational::from_integer(BigInt::from(sign))))
    }

    fn i_entry(&self, r: usize, c: usize) -> usize {
        2 * self.pairs.len() + r * self.n + c
    }

    /// Linear action of a Lie algebra element xi on the coordinates:
    /// s_{ab} -> entry (a,b) of (-xi^T S - S xi), i_{rc} -> (xi I)_{rc}.
    fn lie_images(&self, xi: &Matrix) -> Vec<Vec<(usize, BigRational)>> {
        let mut out = vec![Vec::new(); self.nvars()];
        for s in 0..2 {
            for &(a, b) in &self.pairs {
                let (vi, _) = self.s_entry(s, a, b).unwrap();
                let mut acc: HashMap<usize, BigRational> = HashMap::new();
                for m in 0..self.k {
                    for (coef, x, y) in [(-&xi[(m, a)].re, m, b), (-&xi[(m, b)].re, a, m)] {
                        if coef.is_zero() {
                            continue;
                        }
                        if let Some((u, sign)) = self.s_entry(s, x, y) {
                            *acc.entry(u).or_insert_with(BigRational::zero) += coef * sign;
                        }
                    }
                }
                out[vi] = acc.into_iter().filter(|(_, c)| !c.is_zero()).collect();
            }
        }
        for r in 0..self.k {
            for c in 0..self.n {
                let vi = self.i_entry(r, c);
                let mut img = Vec::new();
                for m in 0..self.k {
                    if !xi[(r, m)].is_zero() {
                        img.push((self.i_entry(m, c), xi[(r, m)].re.clone()));
                    }
                }
                out[vi] = img;
            }
        }
        out
    }

    /// Signed monomial action of an isometry gamma on the coordinates:
    /// S -> gamma^{-T} S gamma^{-1}, i -> gamma i; each coordinate must map
    /// to a single signed coordinate.
    fn isometry_var_map(&self, gamma: &Matrix) -> Vec<(usize, BigRational)> {
        let ginv = gamma.inverse().expect("component representative is invertible");
        let ginvt = ginv.transpose();
        let mut out = Vec::with_capacity(self.nvars());
        for s in 0..2 {
            for &(a, b) in &self.pairs {
                // entry (a,b) of gamma^{-T} S gamma^{-1} as a combo of S-vars
                let mut acc: HashMap<usize, BigRational> = HashMap::new();
                for x in 0..self.k {
                    for y in 0..self.k {
                        let c = (&ginvt[(a, x)] * &ginv[(y, b)]).re.clone();
                        if c.is_zero() {
                            continue;
                        }
                        if let Some((u, sign)) = self.s_entry(s, x, y) {
                            *acc.entry(u).or_insert_with(BigRational::zero) += c * sign;
                        }
                    }
                }
                let terms: Vec<_> = acc.into_iter().filter(|(_, c)| !c.is_zero()).collect();
                assert_eq!(terms.len(), 1, "non-monomial component action");
                out.push(terms.into_iter().next().unwrap());
            }
        }
        for r in 0..self.k {
            for c in 0..self.n {
                let mut terms = Vec::new();
                for m in 0..self.k {
                    if !gamma[(r, m)].is_zero() {
                        terms.push((self.i_entry(m, c), gamma[(r, m)].re.clone()));
                    }
                }
                assert_eq!(terms.len(), 1, "non-monomial component action");
                out.push(terms.into_iter().next().unwrap());
            }
        }
        out
    }
}

/// All exponent vectors at the given doubled multidegree.
fn monomials_at(vt: &VarTable, dq: (i64, i64)) -> Vec<Vec<u16>> {
    let mut out = Vec::new();
    let mut exps = vec![0u16; vt.nvars()];
    fn rec(vt: &VarTable, var: usize, rem: (i64, i64), exps: &mut Vec<u16>, out: &mut Vec<Vec<u16>>) {
        if var == vt.nvars() {
            if rem == (0, 0) {
                out.push(exps.clone());
            }
            return;
        }
        let (d1, d2) = vt.dq[var];
        let mut e = 0u16;
        loop {
            let used = (d1 * e as i64, d2 * e as i64);
            if used.0 > rem.0 || used.1 > rem.1 {
                break;
            }
            exps[var] = e;
            rec(vt, var + 1, (rem.0 - used.0, rem.1 - used.1), exps, out);
            e += 1;
        }
        exps[var] = 0;
    }
    rec(vt, 0, dq, &mut exps, &mut out);
    out
}

fn z_weight(vt: &VarTable, exps: &[u16]) -> Vec<i32> {
    let rank = vt.zw.first().map(|z| z.len()).unwrap_or(0);
    let mut w = vec![0i32; rank];
    for (v, &e) in exps.iter().enumerate() {
        if e > 0 {
            for (acc, z) in w.iter_mut().zip(&vt.zw[v]) {
                *acc += z * e as i32;
            }
        }
    }
    w
}

/// Dimension of the G'_k-invariant subspace of C[N] in the given doubled
/// multidegree; with `det_twist`, of the det-twisted invariants (the finite
/// generators act with an extra factor det(gamma|V)).
pub fn brute_force_invariant_dim(
    flavor: Flavor,
    n: usize,
    k: usize,
    dq: (i64, i64),
    det_twist: bool,
) -> Result<usize, PartitionError> {
    if dq.0 < 0 || dq.1 < 0 {
        return Ok(0);
    }
    let (lines, raising, finite) = group_data(flavor, k)?;
    let vt = VarTable::new(flavor, n, k, &lines);
    let all = monomials_at(&vt, dq);
    if all.len() > 20_000 {
        return Err(PartitionError::TooLarge);
    }
    let index: HashMap<Vec<u16>, usize> = all.iter().cloned().zip(0..).collect();
    let w0: Vec<usize> = (0..all.len())
        .filter(|&m| z_weight(&vt, &all[m]).iter().all(|&x| x == 0))
        .collect();
    if w0.is_empty() {
        return Ok(0);
    }

    // connected part: kernel of the stacked raising operators on the
    // weight-zero span
    let images: Vec<Vec<Vec<(usize, BigRational)>>> =
        raising.iter().map(|xi| vt.lie_images(xi)).collect();
    let basis: Vec<Vec<Scalar>> = if images.is_empty() {
        (0..w0.len())
            .map(|j| {
                let mut v = vec![Scalar::zero(); w0.len()];
                v[j] = Scalar::one();
                v
            })
            .collect()
    } else {
        let rows = images.len() * all.len();
        let mut mat = Matrix::zeros(rows, w0.len());
        for (col, &mi) in w0.iter().enumerate() {
            let exps = &all[mi];
            for (oi, img) in images.iter().enumerate() {
                for (v, &e) in exps.iter().enumerate() {
                    if e == 0 {
                        continue;
                    }
                    for (u, c) in &img[v] {
                        let mut target = exps.clone();
                        target[v] -= 1;
                        target[*u] += 1;
                        let row = oi * all.len() + index[&target];
                        let add =
                            Scalar::new(c * BigRational::from_integer(BigInt::from(e)), BigRational::zero());
                        let cur = mat[(row, col)].clone();
                        mat[(row, col)] = &cur + &add;
                    }
                }
            }
        }
        mat.kernel_basis()
    };
    if finite.is_empty() || basis.is_empty() {
        return Ok(basis.len());
    }

    // finite averaging: dim of the (possibly det-twisted) fixed space of
    // the order-2 generator on the connected-invariant subspace
    assert_eq!(finite.len(), 1);
    let gamma = &finite[0];
    let var_map = vt.isometry_var_map(gamma);
    // the finite generators in the table all have det(gamma|V) = -1
    let chi = if det_twist { -1i64 } else { 1 };
    // gamma on a weight-zero monomial: map each variable, multiply signs
    let w0_index: HashMap<usize, usize> = w0.iter().cloned().zip(0..).collect();
    let mut gcols: Vec<Vec<Scalar>> = Vec::new();
    for &mi in &w0 {
        let exps = &all[mi];
        let mut target = vec![0u16; vt.nvars()];
        let mut coef = BigRational::from_integer(BigInt::from(1));
        for (v, &e) in exps.iter().enumerate() {
            if e == 0 {
                continue;
            }
            let (u, c) = &var_map[v];
            target[*u] += e;
            for _ in 0..e {
                coef *= c;
            }
        }
        let ti = w0_index[&index[&target]];
        let mut col = vec![Scalar::zero(); w0.len()];
        col[ti] = Scalar::new(coef, BigRational::zero());
        gcols.push(col);
    }
    let bmat = Matrix::from_columns(w0.len(), &basis);
    // trace of gamma restricted to the kernel subspace
    let mut trace = BigRational::zero();
    for (j, b) in basis.iter().enumerate() {
        // image of basis vector j under gamma
        let mut img = vec![Scalar::zero(); w0.len()];
        for (pos, coef) in b.iter().enumerate() {
            if coef.is_zero() {
                continue;
            }
            for (r, g) in gcols[pos].iter().enumerate() {
                if !g.is_zero() {
                    let add = coef * g;
                    let cur = img[r].clone();
                    img[r] = &cur + &add;
                }
            }
        }
        let x = bmat.solve(&img).expect("component generator preserves the invariant space");
        trace += &x[j].re;
    }
    let dim = BigRational::from_integer(BigInt::from(basis.len() as i64));
    let avg = (dim + BigRational::from_integer(BigInt::from(chi)) * trace)
        / BigRational::from_integer(BigInt::from(2));
    assert!(avg.is_integer(), "non-integral averaged dimension");
    use num::ToPrimitive;
    Ok(avg.to_integer().to_usize().expect("negative invariant dimension"))
}
