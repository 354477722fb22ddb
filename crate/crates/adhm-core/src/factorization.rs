//! Factorization of ADHM data along the spectrum of B1: splitting into
//! per-eigenvalue blocks, the Sylvester solver that reconstructs the
//! off-diagonal part of B2, and reassembly.

use crate::exactalg::{
    commutator, eigenvalue_multiset, generalized_eigenspace, scalar_key_cmp, Matrix, Scalar,
    SpectrumError,
};
use crate::forms::{
    right_adjoint, stabilizer_lie, ADHMDatum, BilinearSpace, Flavor, FramedSetting,
};
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum FactorError {
    #[error("spectrum of B1 does not split over Q(i): {0}")]
    NonSplitSpectrum(SpectrumError),
    #[error("restricted form on a spectral block is degenerate")]
    DegenerateRestriction,
    #[error("Sylvester operator is singular (overlapping spectra)")]
    SpectraOverlap,
    #[error("block {0} does not satisfy its moment equation")]
    BlockMomentNonzero(usize),
    #[error("factorization is implemented for symplectic V only")]
    UnsupportedFlavor,
}

/// Disjoint spectral supports; support n is the eigenvalue multiset of the
/// n-th block of B1.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EigenvaluePartition {
    pub supports: Vec<Vec<Scalar>>,
}

impl EigenvaluePartition {
    /// All supports merged, in the canonical eigenvalue order.
    pub fn merged(&self) -> Vec<Scalar> {
        let mut all: Vec<Scalar> = self.supports.iter().flatten().cloned().collect();
        all.sort_by(scalar_key_cmp);
        all
    }
}

/// One spectral block: a framed datum on the restricted symplectic space.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Block {
    pub setting: FramedSetting,
    pub b1: Matrix,
    pub b2: Matrix,
    pub i: Matrix,
}

impl Block {
    pub fn j(&self) -> Matrix {
        right_adjoint(&self.i, &self.setting.w, &self.setting.v).expect("block shapes")
    }

    pub fn moment(&self) -> Matrix {
        &commutator(&self.b1, &self.b2) + &(&self.i * &self.j())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BlockData {
    pub blocks: Vec<Block>,
}

/// Split x along the distinct eigenvalues of B1.  Returns the supports, the
/// per-eigenvalue blocks in standard coordinates, and the isometry g of V
/// with g x = block-diagonal form (so conjugating the result of `assemble`
/// by g^{-1} recovers x).
pub fn split_by_spectrum(
    x: &ADHMDatum,
) -> Result<(EigenvaluePartition, BlockData, Matrix), FactorError> {
    if x.setting.flavor != Flavor::SOData {
        return Err(FactorError::UnsupportedFlavor);
    }
    let v = &x.setting.v;
    let eigs = eigenvalue_multiset(&x.b1).map_err(FactorError::NonSplitSpectrum)?;
    // group the sorted multiset by distinct value
    let mut supports: Vec<Vec<Scalar>> = Vec::new();
    for e in eigs {
        match supports.last_mut() {
            Some(s) if s[0] == e => s.push(e),
            _ => supports.push(vec![e]),
        }
    }
    // symplectic basis of each generalized eigenspace
    let mut columns: Vec<Vec<Scalar>> = Vec::new();
    for s in &supports {
        let space = generalized_eigenspace(&x.b1, &s[0]);
        if space.dim() != s.len() {
            return Err(FactorError::DegenerateRestriction);
        }
        let basis: Vec<Vec<Scalar>> = (0..space.dim()).map(|c| space.basis.column(c)).collect();
        let sympl = symplectic_basis(v, basis)?;
        columns.extend(sympl);
    }
    let c = Matrix::from_columns(v.dim, &columns);
    // c maps standard block coordinates isometrically onto V
    if &(&c.transpose() * &v.gram) * &c != v.gram {
        return Err(FactorError::DegenerateRestriction);
    }
    let g = c.inverse().ok_or(FactorError::DegenerateRestriction)?;
    let moved = x.conjugate(&g, None);
    // carve out the diagonal blocks
    let mut blocks = Vec::new();
    let mut offset = 0usize;
    for s in &supports {
        let d = s.len();
        let setting = FramedSetting {
            v: BilinearSpace::standard_symplectic(d),
            w: x.setting.w.clone(),
            flavor: Flavor::SOData,
        };
        blocks.push(Block {
            setting,
            b1: moved.b1.submatrix(offset, offset, d, d),
            b2: moved.b2.submatrix(offset, offset, d, d),
            i: moved.i.submatrix(offset, 0, d, x.setting.n()),
        });
        offset += d;
    }
    Ok((EigenvaluePartition { supports }, BlockData { blocks }, g))
}

/// An exact symplectic (hyperbolic) basis of the span of `vectors` inside V,
/// ordered pairwise so the restricted gram becomes the standard one.
fn symplectic_basis(
    v: &BilinearSpace,
    mut vectors: Vec<Vec<Scalar>>,
) -> Result<Vec<Vec<Scalar>>, FactorError> {
    let mut out = Vec::new();
    while !vectors.is_empty() {
        let a = vectors.remove(0);
        let pos = vectors
            .iter()
            .position(|b| !v.pairing(&a, b).is_zero())
            .ok_or(FactorError::DegenerateRestriction)?;
        let mut b = vectors.remove(pos);
        let scale = v.pairing(&a, &b).inv();
        b = b.iter().map(|x| x * &scale).collect();
        // project the rest onto the symplectic complement of span(a, b)
        for u in vectors.iter_mut() {
            let ca = v.pairing(u, &b); // coefficient of a
            let cb = v.pairing(&a, u); // coefficient of b
            for idx in 0..u.len() {
                u[idx] = &u[idx] - &(&ca * &a[idx]) - &(&cb * &b[idx]);
            }
        }
        out.push(a);
        out.push(b);
    }
    Ok(out)
}

/// Unique X with Bm1 X - X Bn1 = -rhs, for disjoint spectra.
pub fn solve_sylvester_block(
    bm1: &Matrix,
    bn1: &Matrix,
    rhs: &Matrix,
) -> Result<Matrix, FactorError> {
    let (m, n) = (bm1.rows, bn1.rows);
    assert_eq!(rhs.rows, m);
    assert_eq!(rhs.cols, n);
    // operator on row-major flattened X
    let op = Matrix::from_fn(m * n, m * n, |row, col| {
        let (r, c) = (row / n, row % n);
        let (a, b) = (col / n, col % n);
        let mut e = Scalar::zero();
        if b == c {
            e = &e + &bm1[(r, a)];
        }
        if a == r {
            e = &e - &bn1[(c, b)];
        }
        e
    });
    let neg: Vec<Scalar> = rhs.entries.iter().map(|e| -e).collect();
    match op.solve(&neg) {
        Some(flat) if op.rank() == m * n => {
            Ok(Matrix::from_fn(m, n, |r, c| flat[r * n + c].clone()))
        }
        _ => Err(FactorError::SpectraOverlap),
    }
}

/// Reassemble a full datum: B1 and i are block-diagonal/stacked, B2 gets its
/// off-diagonal blocks from the Sylvester equations and adjoint symmetry.
pub fn assemble(blocks: &BlockData, ep: &EigenvaluePartition) -> Result<ADHMDatum, FactorError> {
    assert_eq!(blocks.blocks.len(), ep.supports.len());
    let e = blocks.blocks.len();
    for (n, blk) in blocks.blocks.iter().enumerate() {
        if !blk.moment().is_zero() {
            return Err(FactorError::BlockMomentNonzero(n));
        }
        let eig = eigenvalue_multiset(&blk.b1).map_err(FactorError::NonSplitSpectrum)?;
        let mut want = ep.supports[n].clone();
        want.sort_by(scalar_key_cmp);
        if eig != want {
            return Err(FactorError::SpectraOverlap);
        }
    }
    for a in 0..e {
        for b in a + 1..e {
            if ep.supports[a].iter().any(|x| ep.supports[b].contains(x)) {
                return Err(FactorError::SpectraOverlap);
            }
        }
    }
    let nw = blocks.blocks[0].setting.n();
    let k: usize = blocks.blocks.iter().map(|b| b.setting.k()).sum();
    let mut b1 = Matrix::zeros(k, k);
    let mut b2 = Matrix::zeros(k, k);
    let mut i = Matrix::zeros(k, nw);
    let offsets: Vec<usize> = blocks
        .blocks
        .iter()
        .scan(0usize, |acc, b| {
            let o = *acc;
            *acc += b.setting.k();
            Some(o)
        })
        .collect();
    for (n, blk) in blocks.blocks.iter().enumerate() {
        let o = offsets[n];
        let d = blk.setting.k();
        for r in 0..d {
            for c in 0..d {
                b1[(o + r, o + c)] = blk.b1[(r, c)].clone();
                b2[(o + r, o + c)] = blk.b2[(r, c)].clone();
            }
            for c in 0..nw {
                i[(o + r, c)] = blk.i[(r, c)].clone();
            }
        }
    }
    for m in 0..e {
        for n in m + 1..e {
            let bm = &blocks.blocks[m];
            let bn = &blocks.blocks[n];
            let rhs = &bm.i * &bn.j();
            let upper = solve_sylvester_block(&bm.b1, &bn.b1, &rhs)?;
            // lower block is forced by B2 being self-adjoint
            let lower = right_adjoint(&upper, &bn.setting.v, &bm.setting.v)
                .expect("block shapes");
            for r in 0..bm.setting.k() {
                for c in 0..bn.setting.k() {
                    b2[(offsets[m] + r, offsets[n] + c)] = upper[(r, c)].clone();
                }
            }
            for r in 0..bn.setting.k() {
                for c in 0..bm.setting.k() {
                    b2[(offsets[n] + r, offsets[m] + c)] = lower[(r, c)].clone();
                }
            }
        }
    }
    let setting = FramedSetting::so_data(nw, k);
    ADHMDatum::new(setting, b1, b2, i).map_err(|_| FactorError::DegenerateRestriction)
}

/// assemble(h . blocks) must equal (direct sum of h_n) . assemble(blocks).
pub fn equivariance_check(
    blocks: &BlockData,
    ep: &EigenvaluePartition,
    h: &[Matrix],
) -> Result<bool, FactorError> {
    assert_eq!(h.len(), blocks.blocks.len());
    let moved = BlockData {
        blocks: blocks
            .blocks
            .iter()
            .zip(h)
            .map(|(blk, hn)| {
                let hi = hn.inverse().expect("isometries are invertible");
                Block {
                    setting: blk.setting.clone(),
                    b1: &(hn * &blk.b1) * &hi,
                    b2: &(hn * &blk.b2) * &hi,
                    i: hn * &blk.i,
                }
            })
            .collect(),
    };
    let lhs = assemble(&moved, ep)?;
    let base = assemble(blocks, ep)?;
    let big_h = Matrix::direct_sum(h);
    let rhs = base.conjugate(&big_h, None);
    Ok(lhs.b1 == rhs.b1 && lhs.b2 == rhs.b2 && lhs.i == rhs.i)
}

/// For data assembled from blocks whose framings have rank one, the
/// Lie-algebra stabilizer dimension (expected 2: one additive parameter per
/// block).
pub fn stabilizer_product_check(x: &ADHMDatum) -> usize {
    stabilizer_lie(x).len()
}

/// Two random k' = 2 blocks with scalar B's, distinct supports, and rank-one
/// isotropic framings into W of dimension `n` (n >= 2): such blocks are
/// always in the zero moment fibre, so `assemble` yields a point of
/// mu^{-1}(0) at gauge size 4.
pub fn random_rank_one_blocks(
    rng: &mut impl rand::Rng,
    n: usize,
) -> (EigenvaluePartition, BlockData) {
    assert!(n >= 2, "isotropic framings need dim W >= 2");
    let w = BilinearSpace::standard_orthogonal(n);
    let a: i64 = rng.gen_range(1..=5);
    let mut blocks = Vec::new();
    let mut supports = Vec::new();
    for sign in [1i64, -1] {
        let lam = Scalar::from_int(sign * a);
        let setting = FramedSetting {
            v: BilinearSpace::standard_symplectic(2),
            w: w.clone(),
            flavor: Flavor::SOData,
        };
        // i = v u^T with u isotropic in W
        let v_col = vec![
            Scalar::from_int(rng.gen_range(-2..=2)),
            Scalar::from_int(rng.gen_range(-2..=2)),
        ];
        let iu = if sign > 0 { Scalar::i() } else { -Scalar::i() };
        let mut u = vec![Scalar::zero(); n];
        u[0] = Scalar::one();
        u[1] = iu;
        let i = Matrix::from_fn(2, n, |r, c| &v_col[r] * &u[c]);
        let b1 = Matrix::identity(2).scale(&lam);
        let b2 = Matrix::identity(2).scale(&Scalar::from_int(rng.gen_range(-3..=3)));
        blocks.push(Block { setting, b1, b2, i });
        supports.push(vec![lam.clone(), lam]);
    }
    (EigenvaluePartition { supports }, BlockData { blocks })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::Subspace;
    use crate::fixtures;
    use crate::forms::{in_p, moment_map, random_isometry, tp_split};

    #[test]
    fn sylvester_scalar_blocks() {
        let a = Matrix::identity(2).scale(&Scalar::from_int(1));
        let b = Matrix::identity(2).scale(&Scalar::from_int(-1));
        let rhs = Matrix::from_ints(2, 2, &[2, 4, 6, 8]);
        let x = solve_sylvester_block(&a, &b, &rhs).unwrap();
        // X = -rhs / 2a with a = 1
        assert_eq!(x, rhs.scale(&Scalar::from_frac(-1, 2)));
        assert!(solve_sylvester_block(&a, &a, &rhs).is_err());
        assert!(solve_sylvester_block(&a, &b, &Matrix::zeros(2, 2)).unwrap().is_zero());
    }

    #[test]
    fn split_type_i_supports_and_spaces() {
        let x = fixtures::x_i();
        let (ep, blocks, g) = split_by_spectrum(&x).unwrap();
        let half = Scalar::from_frac(1, 2);
        assert_eq!(ep.supports, vec![vec![-&half, -&half], vec![half.clone(), half.clone()]]);
        assert_eq!(blocks.blocks.len(), 2);
        // g is an isometry of V
        let v = &x.setting.v;
        assert_eq!(&(&crate::forms::star(&g, v) * &g), &Matrix::identity(4));
        for (n, blk) in blocks.blocks.iter().enumerate() {
            assert!(blk.moment().is_zero(), "block {n} moment");
            assert_eq!(blk.i.rank(), 1, "block {n} framing rank");
            // i_n lies in the zero fibre of rho on the block
            let r = &blk.i * &blk.j();
            assert!(r.is_zero() || r.pow(2).is_zero());
        }
        // eigenspace spans: e1 +- e3, e2 +- e4 per sign
        let plus = Subspace::from_spanning(
            4,
            &[
                vec![Scalar::one(), Scalar::zero(), Scalar::one(), Scalar::zero()],
                vec![Scalar::zero(), Scalar::one(), Scalar::zero(), Scalar::one()],
            ],
        );
        assert!(plus.equals(&generalized_eigenspace(&x.b1, &half)));
    }

    #[test]
    fn round_trip_type_i() {
        let x = fixtures::x_i();
        let (ep, blocks, g) = split_by_spectrum(&x).unwrap();
        let back = assemble(&blocks, &ep).unwrap();
        let restored = back.conjugate(&g.inverse().unwrap(), None);
        assert_eq!(restored.b1, x.b1);
        assert_eq!(restored.b2, x.b2);
        assert_eq!(restored.i, x.i);
    }

    #[test]
    fn stabilizer_product_of_type_i() {
        let x = fixtures::x_i();
        let (ep, blocks, _) = split_by_spectrum(&x).unwrap();
        let assembled = assemble(&blocks, &ep).unwrap();
        assert_eq!(stabilizer_product_check(&assembled), 2);
    }

    #[test]
    fn assembled_moment_vanishes_and_b2_in_p() {
        
        use rand_chacha::rand_core::SeedableRng;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(23);
        for _ in 0..10 {
            let (ep, blocks) = random_rank_one_blocks(&mut rng, 3);
            let x = assemble(&blocks, &ep).unwrap();
            assert!(moment_map(&x).is_zero());
            assert!(in_p(&x.b2, &x.setting.v));
            assert!(tp_split(&moment_map(&x), &x.setting.v).p_part.is_zero());
            let merged = ep.merged();
            assert_eq!(eigenvalue_multiset(&x.b1).unwrap(), merged);
        }
    }

    #[test]
    fn equivariance_property() {
        use rand_chacha::rand_core::SeedableRng;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(31);
        for seed in 0..5u64 {
            let (ep, blocks) = random_rank_one_blocks(&mut rng, 3);
            let h: Vec<Matrix> = blocks
                .blocks
                .iter()
                .enumerate()
                .map(|(n, b)| random_isometry(&b.setting.v, seed * 10 + n as u64).unwrap())
                .collect();
            assert!(equivariance_check(&blocks, &ep, &h).unwrap());
        }
    }

}

