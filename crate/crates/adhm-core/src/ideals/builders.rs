//! Construction of the defining ideals: moment map, commutator map, rho,
//! and the tagged pi-image, in fixed rational coordinates.

use super::coeff::{Coeff, FieldTag};
use super::poly::{MonomialOrder, Poly, Ring};
use crate::exactalg::{Matrix, Scalar};
use crate::forms::{lie_basis, lie_basis_traceless_p, BilinearSpace, Flavor, FramedSetting};
use num::BigRational;
use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum BuildError {
    #[error("unsupported size for this ideal kind")]
    UnsupportedSize,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum IdealKind {
    /// [B1,B2] + i i* = 0 on p(V)^2 x Hom(W,V).
    Mu,
    /// Same with trace-free B's (the ambient of the paper's X-tilde).
    MuTraceless,
    /// i i* = 0 on Hom(W,V).
    Rho,
    /// rho-ideal plus tag variables equated to the entries of i* i.
    PiImageTags,
    /// [B1,B2] = 0 on p(V)^2.
    Commutator,
    /// Commutator ideal and rho ideal on disjoint variable blocks.
    Product,
}

/// An ideal with its ambient ring and provenance label.
#[derive(Clone, Debug)]
pub struct IdealSpec {
    pub ring: Ring,
    pub gens: Vec<Poly>,
    pub label: String,
    /// Indices of the tag variables, when present.
    pub tag_vars: Vec<usize>,
}

fn rational_of(s: &Scalar) -> BigRational {
    assert!(s.is_real(), "ideal coordinates must be rational");
    s.re.clone()
}

/// A symbolic matrix with polynomial entries.
pub type PolyMatrix = Vec<Vec<Poly>>;

pub fn pm_mul(ring: &Ring, a: &PolyMatrix, b: &PolyMatrix) -> PolyMatrix {
    let (ra, ca) = (a.len(), a[0].len());
    let cb = b[0].len();
    assert_eq!(ca, b.len());
    (0..ra)
        .map(|r| {
            (0..cb)
                .map(|c| {
                    let mut acc = ring.zero();
                    for k in 0..ca {
                        if !a[r][k].is_zero() && !b[k][c].is_zero() {
                            acc = acc.add(ring, &a[r][k].mul(ring, &b[k][c]));
                        }
                    }
                    acc
                })
                .collect()
        })
        .collect()
}

pub fn pm_sub(ring: &Ring, a: &PolyMatrix, b: &PolyMatrix) -> PolyMatrix {
    a.iter()
        .zip(b)
        .map(|(ra, rb)| ra.iter().zip(rb).map(|(x, y)| x.sub(ring, y)).collect())
        .collect()
}

pub fn pm_add(ring: &Ring, a: &PolyMatrix, b: &PolyMatrix) -> PolyMatrix {
    a.iter()
        .zip(b)
        .map(|(ra, rb)| ra.iter().zip(rb).map(|(x, y)| x.add(ring, y)).collect())
        .collect()
}

/// Constant rational matrix as a polynomial matrix.
fn pm_const(ring: &Ring, m: &Matrix) -> PolyMatrix {
    (0..m.rows)
        .map(|r| {
            (0..m.cols)
                .map(|c| ring.constant(Coeff::from_rational(ring.field, &rational_of(&m[(r, c)]))))
                .collect()
        })
        .collect()
}

/// Linear combination of basis matrices with variable coefficients.
fn pm_span(ring: &Ring, basis: &[Matrix], var_offset: usize) -> PolyMatrix {
    let (rows, cols) = (basis[0].rows, basis[0].cols);
    (0..rows)
        .map(|r| {
            (0..cols)
                .map(|c| {
                    let mut acc = ring.zero();
                    for (a, e) in basis.iter().enumerate() {
                        let q = rational_of(&e[(r, c)]);
                        if !num::Zero::is_zero(&q) {
                            acc = acc.add(
                                ring,
                                &ring.var(var_offset + a)
                                    .scale(&Coeff::from_rational(ring.field, &q)),
                            );
                        }
                    }
                    acc
                })
                .collect()
        })
        .collect()
}

/// Matrix of variables.
fn pm_vars(ring: &Ring, rows: usize, cols: usize, var_offset: usize) -> PolyMatrix {
    (0..rows)
        .map(|r| (0..cols).map(|c| ring.var(var_offset + r * cols + c)).collect())
        .collect()
}

/// j = i* = G_W^{-1} i^T G_V symbolically.
fn pm_adjoint(ring: &Ring, i: &PolyMatrix, w: &BilinearSpace, v: &BilinearSpace) -> PolyMatrix {
    let gwi = pm_const(ring, &w.gram.inverse().unwrap());
    let gv = pm_const(ring, &v.gram);
    let it: PolyMatrix = (0..i[0].len())
        .map(|r| (0..i.len()).map(|c| i[c][r].clone()).collect())
        .collect();
    pm_mul(ring, &gwi, &pm_mul(ring, &it, &gv))
}

/// Independent entries of a t(V)-valued matrix M: the entries of G_V M,
/// which is symmetric when V is symplectic (upper triangle incl. diagonal)
/// and antisymmetric when V is orthogonal (strict upper triangle).
fn t_valued_entries(ring: &Ring, m: &PolyMatrix, v: &BilinearSpace) -> Vec<Poly> {
    let y = pm_mul(ring, &pm_const(ring, &v.gram), m);
    let k = v.dim;
    let mut out = Vec::new();
    for r in 0..k {
        let start = if v.epsilon == -1 { r } else { r + 1 };
        for c in start..k {
            out.push(y[r][c].clone());
        }
    }
    out
}

/// Positions (r, c) matching `t_valued_entries`, for naming tag variables.
fn t_valued_positions(v: &BilinearSpace) -> Vec<(usize, usize)> {
    let k = v.dim;
    let mut out = Vec::new();
    for r in 0..k {
        let start = if v.epsilon == -1 { r } else { r + 1 };
        for c in start..k {
            out.push((r, c));
        }
    }
    out
}

fn setting_of(n: usize, k: usize, flavor: Flavor) -> Result<FramedSetting, BuildError> {
    match flavor {
        Flavor::SOData => {
            if k % 2 != 0 {
                return Err(BuildError::UnsupportedSize);
            }
            Ok(FramedSetting::so_data(n, k))
        }
        Flavor::SpData => {
            if n % 2 != 0 {
                return Err(BuildError::UnsupportedSize);
            }
            Ok(FramedSetting::sp_data(n, k))
        }
    }
}

/// Build the requested ideal at size (N, k) over the given field.
pub fn build_ideal(
    kind: IdealKind,
    n: usize,
    k: usize,
    flavor: Flavor,
    field: FieldTag,
) -> Result<IdealSpec, BuildError> {
    if k == 0 {
        return Ok(IdealSpec {
            ring: Ring::new(Vec::new(), MonomialOrder::DegRevLex, field),
            gens: Vec::new(),
            label: format!("{kind:?}(N={n},k=0,{flavor:?})").to_lowercase(),
            tag_vars: Vec::new(),
        });
    }
    let setting = setting_of(n, k, flavor)?;
    let v = &setting.v;
    let w = &setting.w;
    let p_basis = match kind {
        IdealKind::MuTraceless => lie_basis_traceless_p(v),
        _ => lie_basis(v, true),
    };
    let dp = p_basis.len();
    let label = format!("{kind:?}(N={n},k={k},{flavor:?})").to_lowercase();

    let mut vars: Vec<String> = Vec::new();
    let uses_b = matches!(
        kind,
        IdealKind::Mu | IdealKind::MuTraceless | IdealKind::Commutator | IdealKind::Product
    );
    let uses_i = matches!(
        kind,
        IdealKind::Mu | IdealKind::MuTraceless | IdealKind::Rho | IdealKind::PiImageTags
            | IdealKind::Product
    );
    if uses_b {
        for tag in ["b1", "b2"] {
            for a in 0..dp {
                vars.push(format!("{tag}_{a}"));
            }
        }
    }
    if uses_i {
        for r in 0..k {
            for c in 0..n {
                vars.push(format!("i_{r}_{c}"));
            }
        }
    }
    let mut tag_vars = Vec::new();
    if kind == IdealKind::PiImageTags {
        for (r, c) in t_valued_positions(w) {
            tag_vars.push(vars.len());
            vars.push(format!("p_{r}_{c}"));
        }
    }
    let ring = Ring::new(vars, MonomialOrder::DegRevLex, field);

    let mut gens: Vec<Poly> = Vec::new();
    let b_offset = 0usize;
    let i_offset = if uses_b { 2 * dp } else { 0 };
    if uses_b {
        let b1 = pm_span(&ring, &p_basis, b_offset);
        let b2 = pm_span(&ring, &p_basis, b_offset + dp);
        let comm = pm_sub(&ring, &pm_mul(&ring, &b1, &b2), &pm_mul(&ring, &b2, &b1));
        if matches!(kind, IdealKind::Commutator | IdealKind::Product) {
            gens.extend(t_valued_entries(&ring, &comm, v));
        } else {
            // moment map: commutator + i j
            let i = pm_vars(&ring, k, n, i_offset);
            let j = pm_adjoint(&ring, &i, w, v);
            let mu = pm_add(&ring, &comm, &pm_mul(&ring, &i, &j));
            gens.extend(t_valued_entries(&ring, &mu, v));
        }
    }
    if matches!(kind, IdealKind::Rho | IdealKind::PiImageTags | IdealKind::Product) {
        let i = pm_vars(&ring, k, n, i_offset);
        let j = pm_adjoint(&ring, &i, w, v);
        let rho = pm_mul(&ring, &i, &j);
        gens.extend(t_valued_entries(&ring, &rho, v));
        if kind == IdealKind::PiImageTags {
            let pi = pm_mul(&ring, &j, &i);
            let y = pm_mul(&ring, &pm_const(&ring, &w.gram), &pi);
            for (tv, (r, c)) in tag_vars.iter().zip(t_valued_positions(w)) {
                gens.push(ring.var(*tv).sub(&ring, &y[r][c]));
            }
        }
    }
    Ok(IdealSpec { ring, gens, label, tag_vars })
}

/// Moment-map ideal in torus-weight-adapted coordinates: the B-sectors are
/// parametrized by the independent entries of S = G_V B (symmetric for
/// orthogonal V, antisymmetric for symplectic V), so that every variable is
/// homogeneous for diagonal torus actions on V and W. `v_lines` and
/// `w_lines` give the z- and t-weights of the chosen bases; the returned
/// `VarWeight`s carry the inverse weights used by the series expansion.
pub fn build_mu_weighted(
    v: &BilinearSpace,
    w: &BilinearSpace,
    v_lines: &[Vec<i32>],
    w_lines: &[Vec<i32>],
    field: FieldTag,
) -> (IdealSpec, Vec<super::hilbert::VarWeight>) {
    use super::hilbert::VarWeight;
    let k = v.dim;
    let n = w.dim;
    assert_eq!(v_lines.len(), k);
    assert_eq!(w_lines.len(), n);
    let trank = w_lines.first().map(|l| l.len()).unwrap_or(0);
    // independent entries of S = G_V B for B in p(V): symmetric (diagonal
    // included) for orthogonal V, antisymmetric for symplectic V
    let mut pairs = Vec::new();
    for a in 0..k {
        let start = if v.epsilon == 1 { a } else { a + 1 };
        for b in start..k {
            pairs.push((a, b));
        }
    }
    let mut vars = Vec::new();
    let mut weights = Vec::new();
    for (tag, dq) in [("b1", (2i64, 0i64)), ("b2", (0, 2))] {
        for &(a, b) in &pairs {
            vars.push(format!("{tag}_{a}_{b}"));
            let mut zt: Vec<i32> =
                v_lines[a].iter().zip(&v_lines[b]).map(|(x, y)| -(x + y)).collect();
            zt.extend(std::iter::repeat(0).take(trank));
            weights.push(VarWeight { dq1: dq.0, dq2: dq.1, zt });
        }
    }
    for r in 0..k {
        for c in 0..n {
            vars.push(format!("i_{r}_{c}"));
            let mut zt: Vec<i32> = v_lines[r].iter().map(|x| -x).collect();
            zt.extend(w_lines[c].iter().map(|x| -x));
            weights.push(VarWeight { dq1: 1, dq2: 1, zt });
        }
    }
    let ring = Ring::new(vars, MonomialOrder::DegRevLex, field);
    // S-matrices with the symmetry of G_V B, then B = G_V^{-1} S
    let dp = pairs.len();
    let s_matrix = |offset: usize| -> PolyMatrix {
        (0..k)
            .map(|r| {
                (0..k)
                    .map(|c| {
                        if let Some(idx) = pairs.iter().position(|&p| p == (r, c)) {
                            ring.var(offset + idx)
                        } else if let Some(idx) = pairs.iter().position(|&p| p == (c, r)) {
                            if v.epsilon == 1 {
                                ring.var(offset + idx)
                            } else {
                                ring.var(offset + idx).neg()
                            }
                        } else {
                            ring.zero()
                        }
                    })
                    .collect()
            })
            .collect()
    };
    let ginv = pm_const(&ring, &v.gram.inverse().unwrap());
    let b1 = pm_mul(&ring, &ginv, &s_matrix(0));
    let b2 = pm_mul(&ring, &ginv, &s_matrix(dp));
    let i = pm_vars(&ring, k, n, 2 * dp);
    let j = pm_adjoint(&ring, &i, w, v);
    let comm = pm_sub(&ring, &pm_mul(&ring, &b1, &b2), &pm_mul(&ring, &b2, &b1));
    let mu = pm_add(&ring, &comm, &pm_mul(&ring, &i, &j));
    let gens = t_valued_entries(&ring, &mu, v);
    (
        IdealSpec {
            ring,
            gens,
            label: format!("mu_weighted(k={k},N={n})"),
            tag_vars: Vec::new(),
        },
        weights,
    )
}

#[cfg(test)]
mod tests {
    use super::super::groebner::{
        groebner, is_complete_intersection, krull_dimension, nonreduced_ci_test,
    };
    use super::*;

    #[test]
    fn generator_and_variable_counts() {
        // rho(N=3, k=2): 3 quadrics in 6 vars
        let i = build_ideal(IdealKind::Rho, 3, 2, Flavor::SOData, FieldTag::Q).unwrap();
        assert_eq!(i.ring.nvars(), 6);
        assert_eq!(i.gens.len(), 3);
        // mu_traceless(N=3, k=4): 10 generators in 22 vars
        let i = build_ideal(IdealKind::MuTraceless, 3, 4, Flavor::SOData, FieldTag::Q).unwrap();
        assert_eq!(i.ring.nvars(), 22);
        assert_eq!(i.gens.len(), 10);
        // commutator, symplectic k=4: 10 generators in 12 vars
        let i = build_ideal(IdealKind::Commutator, 2, 4, Flavor::SOData, FieldTag::Q).unwrap();
        assert_eq!(i.ring.nvars(), 12);
        assert_eq!(i.gens.len(), 10);
        // mu(N, k=0): zero ideal in 0 vars
        let i = build_ideal(IdealKind::Mu, 3, 0, Flavor::SOData, FieldTag::Q).unwrap();
        assert_eq!(i.ring.nvars(), 0);
        assert!(i.gens.iter().all(Poly::is_zero));
    }

    #[test]
    fn rho_n3_k2_dimension_ci_nonreduced() {
        let spec = build_ideal(IdealKind::Rho, 3, 2, Flavor::SOData, FieldTag::Q).unwrap();
        let g = groebner(&spec.ring, &spec.gens, 100_000).unwrap();
        assert_eq!(krull_dimension(&g), 3);
        assert!(is_complete_intersection(&g, spec.gens.len()));
        assert!(nonreduced_ci_test(&spec.ring, &spec.gens, &g, 100_000).unwrap());
    }

    #[test]
    fn rho_n4_k2_reduced() {
        let spec = build_ideal(IdealKind::Rho, 4, 2, Flavor::SOData, FieldTag::Q).unwrap();
        let g = groebner(&spec.ring, &spec.gens, 100_000).unwrap();
        assert_eq!(krull_dimension(&g), 5);
        assert!(is_complete_intersection(&g, spec.gens.len()));
        assert!(!nonreduced_ci_test(&spec.ring, &spec.gens, &g, 200_000).unwrap());
    }

    #[test]
    fn commutator_traceless_k4_dimension() {
        // trace-free commutator ideal in sp(4)-setting: 10 quadrics in 10
        // vars, dimension 6
        let setting = FramedSetting::so_data(2, 4);
        let basis = lie_basis_traceless_p(&setting.v);
        assert_eq!(basis.len(), 5);
        let ring = Ring::new(
            (0..10).map(|a| format!("c_{a}")).collect(),
            MonomialOrder::DegRevLex,
            FieldTag::Q,
        );
        let b1 = pm_span(&ring, &basis, 0);
        let b2 = pm_span(&ring, &basis, 5);
        let comm = pm_sub(&ring, &pm_mul(&ring, &b1, &b2), &pm_mul(&ring, &b2, &b1));
        let gens = t_valued_entries(&ring, &comm, &setting.v);
        assert_eq!(gens.len(), 10);
        let g = groebner(&ring, &gens, 500_000).unwrap();
        assert_eq!(krull_dimension(&g), 6);
    }
}
