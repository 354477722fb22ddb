//! Equivariant weight enumeration for the ADHM data space N and the
//! moment-map bundle E, and the Koszul localization class built from them.

use super::series::{TruncatedSeries, ZT};
use super::PartitionError;
use crate::forms::Flavor;
use num::{BigInt, BigRational, One};
use std::collections::BTreeMap;

/// A character of the big torus (C*)^2 x T'_k x T_G with possibly
/// half-integral q-exponents, stored doubled.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HalfWeight {
    pub dq1: i64,
    pub dq2: i64,
    pub z_exps: Vec<i32>,
    pub t_exps: Vec<i32>,
}

/// Koszul localization class: product over numerator weights of (1 - w^{-1})
/// divided by the same product over denominator weights.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RationalCharacter {
    pub numerator_weights: Vec<HalfWeight>,
    pub denominator_weights: Vec<HalfWeight>,
    pub zrank: usize,
    pub trank: usize,
}

/// Torus weight lines of the standard k-dimensional space: z_a^{+1},
/// z_a^{-1} pairwise, plus a zero line when the dimension is odd.
pub(crate) fn torus_lines(dim: usize) -> Vec<Vec<i32>> {
    let rank = dim / 2;
    let mut out = Vec::new();
    for a in 0..rank {
        for s in [1i32, -1] {
            let mut z = vec![0; rank];
            z[a] = s;
            out.push(z);
        }
    }
    if dim % 2 == 1 {
        out.push(vec![0; rank]);
    }
    out
}

fn add_exps(a: &[i32], b: &[i32]) -> Vec<i32> {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

/// Sums of pairs of line weights: symmetric square (i <= j) or exterior
/// square (i < j).
pub(crate) fn pair_sums(lines: &[Vec<i32>], symmetric: bool) -> Vec<Vec<i32>> {
    let mut out = Vec::new();
    for i in 0..lines.len() {
        let start = if symmetric { i } else { i + 1 };
        for j in start..lines.len() {
            out.push(add_exps(&lines[i], &lines[j]));
        }
    }
    out
}

fn check_sizes(flavor: Flavor, n: usize, k: usize) -> Result<(), PartitionError> {
    if k > 4 || n > 6 {
        return Err(PartitionError::UnsupportedSize);
    }
    match flavor {
        Flavor::SpData if n % 2 != 0 => Err(PartitionError::UnsupportedSize),
        Flavor::SOData if k % 2 != 0 => Err(PartitionError::UnsupportedSize),
        _ => Ok(()),
    }
}

/// V is orthogonal for SpData and symplectic for SOData; p(V) is the
/// symmetric square in the orthogonal case, the exterior square otherwise.
pub(crate) fn p_is_symmetric(flavor: Flavor) -> bool {
    flavor == Flavor::SpData
}

/// Weights of N = p(V) (x) q1 + p(V) (x) q2 + Hom(W, V) (x) (q1 q2)^{1/2}.
pub fn weights_of_n(flavor: Flavor, n: usize, k: usize) -> Result<Vec<HalfWeight>, PartitionError> {
    check_sizes(flavor, n, k)?;
    let vl = torus_lines(k);
    let wl = torus_lines(n);
    let trank = n / 2;
    let tz = vec![0; trank];
    let mut out = Vec::new();
    for dq in [(2, 0), (0, 2)] {
        for z in pair_sums(&vl, p_is_symmetric(flavor)) {
            out.push(HalfWeight { dq1: dq.0, dq2: dq.1, z_exps: z, t_exps: tz.clone() });
        }
    }
    for v in &vl {
        for w in &wl {
            out.push(HalfWeight { dq1: 1, dq2: 1, z_exps: v.clone(), t_exps: w.clone() });
        }
    }
    Ok(out)
}

/// Weights of E = Lie G'_k (x) q1 q2: the exterior square of V in the
/// orthogonal case, the symmetric square in the symplectic case.
pub fn weights_of_e(flavor: Flavor, n: usize, k: usize) -> Result<Vec<HalfWeight>, PartitionError> {
    check_sizes(flavor, n, k)?;
    let vl = torus_lines(k);
    let tz = vec![0; n / 2];
    Ok(pair_sums(&vl, !p_is_symmetric(flavor))
        .into_iter()
        .map(|z| HalfWeight { dq1: 2, dq2: 2, z_exps: z, t_exps: tz.clone() })
        .collect())
}

/// The Koszul class for C[mu^{-1}(0)] at gauge size k.
pub fn koszul_character(
    flavor: Flavor,
    n: usize,
    k: usize,
) -> Result<RationalCharacter, PartitionError> {
    Ok(RationalCharacter {
        numerator_weights: weights_of_e(flavor, n, k)?,
        denominator_weights: weights_of_n(flavor, n, k)?,
        zrank: k / 2,
        trank: n / 2,
    })
}

fn inv_zt(w: &HalfWeight) -> ZT {
    (
        w.z_exps.iter().map(|x| -x).collect(),
        w.t_exps.iter().map(|x| -x).collect(),
    )
}

/// Expand the rational character as a truncated series in q1^{-1}, q2^{-1}:
/// product over numerator weights of (1 - w^{-1}) times product over
/// denominator weights of sum_{n >= 0} w^{-n}.
pub fn expand(rc: &RationalCharacter, order: i64) -> TruncatedSeries {
    let mut s = TruncatedSeries::one(order, rc.zrank, rc.trank);
    for w in &rc.denominator_weights {
        assert!(w.dq1 + w.dq2 > 0, "denominator weight with non-positive q-degree");
        s = s.mul_geometric(1, (w.dq1, w.dq2), &inv_zt(w));
    }
    for w in &rc.numerator_weights {
        s = s.mul_one_minus(1, (w.dq1, w.dq2), &inv_zt(w));
    }
    s
}

fn binom(top: i64, bottom: i64) -> BigInt {
    if bottom < 0 || top < bottom {
        return BigInt::from(0);
    }
    let mut acc = BigInt::one();
    for j in 0..bottom {
        acc = acc * BigInt::from(top - j) / BigInt::from(j + 1);
    }
    acc
}

/// Closed-form ambient character of C[N] with z, t specialized to 1:
/// (sum q1^{-n})^A (sum q2^{-n})^A (sum (q1 q2)^{-n/2})^{kN} with
/// A = k(k + eps)/2, as doubled-degree coefficients.
pub fn ambient_character(
    k: usize,
    n: usize,
    eps_v: i64,
    order: i64,
) -> BTreeMap<(i64, i64), BigRational> {
    let a = (k as i64) * (k as i64 + eps_v) / 2;
    let kn = (k * n) as i64;
    let mut out = BTreeMap::new();
    for dq1 in 0..=order {
        for dq2 in 0..=(order - dq1) {
            let mut acc = BigInt::from(0);
            let mut c = 0i64;
            while c <= dq1.min(dq2) {
                if (dq1 - c) % 2 == 0 && (dq2 - c) % 2 == 0 {
                    let (x, y) = ((dq1 - c) / 2, (dq2 - c) / 2);
                    acc += binom(c + kn - 1, kn - 1)
                        * binom(x + a - 1, a - 1)
                        * binom(y + a - 1, a - 1);
                }
                c += 1;
            }
            if acc != BigInt::from(0) {
                out.insert((dq1, dq2), BigRational::from_integer(acc));
            }
        }
    }
    out
}
