//! Multigraded Hilbert counting: dimensions of the weight spaces of a
//! quotient ring, per torus multidegree, up to a truncation order.

use super::groebner::GroebnerBasis;
use super::poly::exps_divides;
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum HilbertError {
    #[error("generator {0} is not homogeneous for the given weights")]
    InhomogeneousGenerators(usize),
    #[error("variable {0} has non-positive q-degree; the count would be infinite")]
    NonPositiveWeight(usize),
}

/// Weight of one variable: (q1, q2)-degree as doubled integers (so that
/// half-integer powers stay integral) plus a Laurent exponent vector for the
/// remaining torus variables.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VarWeight {
    pub dq1: i64,
    pub dq2: i64,
    pub zt: Vec<i32>,
}

/// coeffs[(dq1, dq2)][zt] = dimension of that weight space.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MultigradedHilbert {
    /// Cutoff on dq1 + dq2 (doubled total q-degree), inclusive.
    pub order: i64,
    pub coeffs: BTreeMap<(i64, i64), BTreeMap<Vec<i32>, i64>>,
}

fn weight_of(exps: &[u16], weights: &[VarWeight]) -> (i64, i64, Vec<i32>) {
    let zt_len = weights.first().map(|w| w.zt.len()).unwrap_or(0);
    let mut w = (0i64, 0i64, vec![0i32; zt_len]);
    for (i, &e) in exps.iter().enumerate() {
        if e == 0 {
            continue;
        }
        w.0 += weights[i].dq1 * e as i64;
        w.1 += weights[i].dq2 * e as i64;
        for (acc, z) in w.2.iter_mut().zip(&weights[i].zt) {
            *acc += z * e as i32;
        }
    }
    w
}

/// Count the standard monomials (those outside the lead-term ideal of `g`)
/// by multidegree, up to doubled total q-degree `order`.
pub fn multigraded_hilbert(
    g: &GroebnerBasis,
    weights: &[VarWeight],
    order: i64,
) -> Result<MultigradedHilbert, HilbertError> {
    let n = g.ring.nvars();
    assert_eq!(weights.len(), n);
    for (i, w) in weights.iter().enumerate() {
        if w.dq1 + w.dq2 <= 0 {
            return Err(HilbertError::NonPositiveWeight(i));
        }
    }
    for (gi, p) in g.polys.iter().enumerate() {
        let mut it = p.terms.iter().map(|(e, _)| weight_of(e, weights));
        if let Some(first) = it.next() {
            if it.any(|w| w != first) {
                return Err(HilbertError::InhomogeneousGenerators(gi));
            }
        }
    }
    let leads = g.lead_exps();
    let mut coeffs: BTreeMap<(i64, i64), BTreeMap<Vec<i32>, i64>> = BTreeMap::new();
    let mut exps = vec![0u16; n];
    // DFS: assign exponents variable by variable within the degree budget
    fn rec(
        var: usize,
        qdeg: i64,
        order: i64,
        exps: &mut Vec<u16>,
        weights: &[VarWeight],
        leads: &[Vec<u16>],
        coeffs: &mut BTreeMap<(i64, i64), BTreeMap<Vec<i32>, i64>>,
    ) {
        if leads.iter().any(|l| exps_divides(l, exps)) {
            return; // in the lead-term ideal; all extensions are too
        }
        if var == exps.len() {
            let (a, b, zt) = weight_of(exps, weights);
            *coeffs.entry((a, b)).or_default().entry(zt).or_insert(0) += 1;
            return;
        }
        let step = weights[var].dq1 + weights[var].dq2;
        let mut e = 0u16;
        loop {
            let extra = step * e as i64;
            if qdeg + extra > order {
                break;
            }
            exps[var] = e;
            rec(var + 1, qdeg + extra, order, exps, weights, leads, coeffs);
            e += 1;
        }
        exps[var] = 0;
    }
    rec(0, 0, order, &mut exps, weights, &leads, &mut coeffs);
    Ok(MultigradedHilbert { order, coeffs })
}

impl MultigradedHilbert {
    /// Total dimension at a given (dq1, dq2).
    pub fn total_at(&self, dq1: i64, dq2: i64) -> i64 {
        self.coeffs.get(&(dq1, dq2)).map(|m| m.values().sum()).unwrap_or(0)
    }
}

#[cfg(test)]
mod tests {
    use super::super::coeff::FieldTag;
    use super::super::groebner::groebner;
    use super::super::poly::{MonomialOrder, Ring};
    use super::*;

    #[test]
    fn geometric_series_of_one_variable() {
        let r = Ring::new(vec!["x".into()], MonomialOrder::DegRevLex, FieldTag::Q);
        let g = groebner(&r, &[], 10).unwrap();
        let w = vec![VarWeight { dq1: 2, dq2: 0, zt: vec![] }];
        let h = multigraded_hilbert(&g, &w, 8).unwrap();
        for n in 0..=4i64 {
            assert_eq!(h.total_at(2 * n, 0), 1);
        }
        assert_eq!(h.total_at(1, 0), 0);
    }

    #[test]
    fn quotient_by_square() {
        let r = Ring::new(vec!["x".into()], MonomialOrder::DegRevLex, FieldTag::Q);
        let x2 = r.var(0).mul(&r, &r.var(0));
        let g = groebner(&r, &[x2], 10).unwrap();
        let w = vec![VarWeight { dq1: 2, dq2: 0, zt: vec![] }];
        let h = multigraded_hilbert(&g, &w, 10).unwrap();
        assert_eq!(h.total_at(0, 0), 1);
        assert_eq!(h.total_at(2, 0), 1);
        assert_eq!(h.total_at(4, 0), 0);
    }

    #[test]
    fn two_variable_product_character() {
        // C[x, y] with weights q1, q2: coefficient 1 at each lattice point.
        let r = Ring::new(
            vec!["x".into(), "y".into()],
            MonomialOrder::DegRevLex,
            FieldTag::Q,
        );
        let g = groebner(&r, &[], 10).unwrap();
        let w = vec![
            VarWeight { dq1: 2, dq2: 0, zt: vec![1] },
            VarWeight { dq1: 0, dq2: 2, zt: vec![-1] },
        ];
        let h = multigraded_hilbert(&g, &w, 6).unwrap();
        assert_eq!(h.total_at(2, 2), 1);
        assert_eq!(h.coeffs[&(2, 2)][&vec![0]], 1);
        assert_eq!(h.total_at(4, 0), 1);
    }

    #[test]
    fn homogeneity_guard() {
        let r = Ring::new(
            vec!["x".into(), "y".into()],
            MonomialOrder::DegRevLex,
            FieldTag::Q,
        );
        let f = r.var(0).sub(&r, &r.var(1).mul(&r, &r.var(1)));
        let g = groebner(&r, &[f], 10).unwrap();
        let w = vec![
            VarWeight { dq1: 2, dq2: 0, zt: vec![] },
            VarWeight { dq1: 2, dq2: 0, zt: vec![] },
        ];
        assert!(matches!(
            multigraded_hilbert(&g, &w, 6),
            Err(HilbertError::InhomogeneousGenerators(_))
        ));
    }
}
