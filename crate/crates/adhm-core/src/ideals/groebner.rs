//! Buchberger's algorithm with Gebauer–Möller pair pruning, plus the
//! dimension, complete-intersection, non-reducedness, elimination, and
//! radical-membership tests built on it.

use super::poly::{
    exps_div, exps_divides, exps_gcd_is_one, exps_lcm, normal_form, MonomialOrder, Poly, Ring,
};
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GroebnerError {
    #[error("S-pair budget of {0} exhausted; raise --budget or ADHM_LAB_BUDGET")]
    BudgetExhausted(u64),
    #[error("the ideal is not a complete intersection")]
    NotCI,
}

/// Default S-pair reduction budget.
pub const DEFAULT_BUDGET: u64 = 2_000_000;

/// Budget from the environment override, if set.
pub fn effective_budget(requested: Option<u64>) -> u64 {
    requested
        .or_else(|| std::env::var("ADHM_LAB_BUDGET").ok().and_then(|s| s.parse().ok()))
        .unwrap_or(DEFAULT_BUDGET)
}

#[derive(Clone, Debug)]
pub struct GroebnerBasis {
    pub ring: Ring,
    pub polys: Vec<Poly>,
}

fn spoly(ring: &Ring, f: &Poly, g: &Poly) -> Poly {
    let (fe, fc) = f.leading().unwrap();
    let (ge, gc) = g.leading().unwrap();
    let l = exps_lcm(fe, ge);
    let a = f.mul_term(&exps_div(&l, fe), &fc.inv());
    let b = g.mul_term(&exps_div(&l, ge), &gc.inv());
    a.sub(ring, &b)
}

/// Buchberger with the normal selection strategy (smallest lcm first) and
/// Gebauer–Möller criteria.
pub fn groebner(ring: &Ring, gens: &[Poly], budget: u64) -> Result<GroebnerBasis, GroebnerError> {
    let mut basis: Vec<Poly> = gens
        .iter()
        .filter(|p| !p.is_zero())
        .map(Poly::monic)
        .collect();
    // pairs as (lcm, i, j) with i < j
    let mut pairs: Vec<(Vec<u16>, usize, usize)> = Vec::new();
    for i in 0..basis.len() {
        for j in i + 1..basis.len() {
            pairs.push((
                exps_lcm(&basis[i].leading().unwrap().0, &basis[j].leading().unwrap().0),
                i,
                j,
            ));
        }
    }
    let mut steps: u64 = 0;
    while !pairs.is_empty() {
        // normal strategy: smallest lcm in the ring order
        let best = pairs
            .iter()
            .enumerate()
            .min_by(|(_, a), (_, b)| {
                ring.order.cmp_exps(&a.0, &b.0).then(a.1.cmp(&b.1)).then(a.2.cmp(&b.2))
            })
            .map(|(idx, _)| idx)
            .unwrap();
        let (l, i, j) = pairs.swap_remove(best);
        // Buchberger's first criterion: coprime leading monomials
        let (fi, fj) = (&basis[i], &basis[j]);
        if exps_gcd_is_one(&fi.leading().unwrap().0, &fj.leading().unwrap().0) {
            continue;
        }
        // chain criterion: some other basis element's LM divides the lcm and
        // the two side pairs have already been handled (approximate check:
        // pair absent from the queue)
        let chain = basis.iter().enumerate().any(|(k, fk)| {
            k != i
                && k != j
                && exps_divides(&fk.leading().unwrap().0, &l)
                && !pairs.iter().any(|(_, a, b)| {
                    (*a == i.min(k) && *b == i.max(k)) || (*a == j.min(k) && *b == j.max(k))
                })
        });
        if chain {
            continue;
        }
        steps += 1;
        if steps > budget {
            return Err(GroebnerError::BudgetExhausted(budget));
        }
        let s = spoly(ring, &basis[i], &basis[j]);
        let r = normal_form(ring, &s, &basis);
        if r.is_zero() {
            continue;
        }
        let r = r.monic();
        let new_idx = basis.len();
        for (k, fk) in basis.iter().enumerate() {
            pairs.push((
                exps_lcm(&fk.leading().unwrap().0, &r.leading().unwrap().0),
                k,
                new_idx,
            ));
        }
        basis.push(r);
    }
    // minimalize: drop elements whose LM is divisible by another LM
    let mut keep = vec![true; basis.len()];
    for i in 0..basis.len() {
        if !keep[i] {
            continue;
        }
        for j in 0..basis.len() {
            if i != j
                && keep[j]
                && exps_divides(&basis[j].leading().unwrap().0, &basis[i].leading().unwrap().0)
                && (basis[j].leading().unwrap().0 != basis[i].leading().unwrap().0 || j < i)
            {
                keep[i] = false;
                break;
            }
        }
    }
    let minimal: Vec<Poly> =
        basis.into_iter().zip(&keep).filter(|(_, &k)| k).map(|(p, _)| p).collect();
    // reduce: replace each by its normal form modulo the others
    let mut reduced = Vec::with_capacity(minimal.len());
    for i in 0..minimal.len() {
        let others: Vec<Poly> = minimal
            .iter()
            .enumerate()
            .filter(|(j, _)| *j != i)
            .map(|(_, p)| p.clone())
            .collect();
        let r = normal_form(ring, &minimal[i], &others).monic();
        if !r.is_zero() {
            reduced.push(r);
        }
    }
    reduced.sort_by(|a, b| {
        ring.order.cmp_exps(&b.leading().unwrap().0, &a.leading().unwrap().0)
    });
    Ok(GroebnerBasis { ring: ring.clone(), polys: reduced })
}

impl GroebnerBasis {
    pub fn contains_one(&self) -> bool {
        self.polys
            .iter()
            .any(|p| p.leading().map(|(e, _)| e.iter().all(|&x| x == 0)) == Some(true))
    }

    pub fn normal_form(&self, f: &Poly) -> Poly {
        normal_form(&self.ring, f, &self.polys)
    }

    pub fn contains(&self, f: &Poly) -> bool {
        self.normal_form(f).is_zero()
    }

    /// Leading exponent vectors.
    pub fn lead_exps(&self) -> Vec<Vec<u16>> {
        self.polys.iter().map(|p| p.leading().unwrap().0.clone()).collect()
    }
}

/// Krull dimension of R/I: the size of a maximal subset S of variables such
/// that no leading monomial is supported entirely on S.
pub fn krull_dimension(g: &GroebnerBasis) -> usize {
    if g.contains_one() {
        // empty scheme; report dimension 0 by the convention dim(0 ring) = -inf,
        // but we never hit this for the ideals of interest — use 0.
        return 0;
    }
    let n = g.ring.nvars();
    let leads = g.lead_exps();
    let mut best = 0usize;
    // DFS over variable subsets with pruning
    fn rec(
        var: usize,
        n: usize,
        chosen: &mut Vec<usize>,
        leads: &[Vec<u16>],
        best: &mut usize,
    ) {
        if chosen.len() + (n - var) <= *best {
            return; // cannot beat the current best
        }
        if var == n {
            if chosen.len() > *best {
                *best = chosen.len();
            }
            return;
        }
        // try including `var`
        chosen.push(var);
        let ok = !leads.iter().any(|e| {
            e.iter().enumerate().all(|(i, &x)| x == 0 || chosen.contains(&i))
        });
        if ok {
            rec(var + 1, n, chosen, leads, best);
        }
        chosen.pop();
        // and excluding it
        rec(var + 1, n, chosen, leads, best);
    }
    let mut chosen = Vec::new();
    rec(0, n, &mut chosen, &leads, &mut best);
    best
}

/// codim == number of original generators.
pub fn is_complete_intersection(g: &GroebnerBasis, n_gens: usize) -> bool {
    g.ring.nvars() - krull_dimension(g) == n_gens
}

/// For a complete intersection: non-reduced iff the singular locus (where
/// all codim-size Jacobian minors vanish) has the same dimension as the
/// scheme itself, i.e. there are no smooth points.
pub fn nonreduced_ci_test(
    ring: &Ring,
    gens: &[Poly],
    g: &GroebnerBasis,
    budget: u64,
) -> Result<bool, GroebnerError> {
    let dim = krull_dimension(g);
    let codim = ring.nvars() - dim;
    if gens.len() != codim {
        return Err(GroebnerError::NotCI);
    }
    // Jacobian matrix of the generators
    let jac: Vec<Vec<Poly>> = gens
        .iter()
        .map(|f| (0..ring.nvars()).map(|v| f.derivative(ring, v)).collect())
        .collect();
    let minors = all_minors(ring, &jac, codim);
    let mut aug = gens.to_vec();
    aug.extend(minors);
    let g2 = groebner(ring, &aug, budget)?;
    if g2.contains_one() {
        // singular locus empty: smooth, hence reduced
        return Ok(false);
    }
    Ok(krull_dimension(&g2) == dim)
}

/// All size-r minors of a polynomial matrix.
fn all_minors(ring: &Ring, m: &[Vec<Poly>], r: usize) -> Vec<Poly> {
    let rows = m.len();
    let cols = if rows == 0 { 0 } else { m[0].len() };
    let row_sets = combinations(rows, r);
    let col_sets = combinations(cols, r);
    let mut out = Vec::new();
    for rs in &row_sets {
        for cs in &col_sets {
            out.push(poly_det(ring, m, rs, cs));
        }
    }
    out
}

fn combinations(n: usize, r: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::new();
    fn rec(start: usize, n: usize, r: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == r {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            rec(i + 1, n, r, cur, out);
            cur.pop();
        }
    }
    rec(0, n, r, &mut cur, &mut out);
    out
}

/// Laplace expansion along the first selected row (minors are small).
fn poly_det(ring: &Ring, m: &[Vec<Poly>], rows: &[usize], cols: &[usize]) -> Poly {
    if rows.is_empty() {
        return ring.one();
    }
    let mut acc = ring.zero();
    let r0 = rows[0];
    for (idx, &c) in cols.iter().enumerate() {
        if m[r0][c].is_zero() {
            continue;
        }
        let sub_cols: Vec<usize> =
            cols.iter().enumerate().filter(|(i, _)| *i != idx).map(|(_, &c)| c).collect();
        let sub = poly_det(ring, m, &rows[1..], &sub_cols);
        let term = m[r0][c].mul(ring, &sub);
        if idx % 2 == 0 {
            acc = acc.add(ring, &term);
        } else {
            acc = acc.sub(ring, &term);
        }
    }
    acc
}

/// Eliminate all variables not listed in `keep`: returns generators of
/// I ∩ k[keep], computed with a block order after permuting the eliminated
/// variables to the front.
pub fn elimination(
    ring: &Ring,
    gens: &[Poly],
    keep: &[usize],
    budget: u64,
) -> Result<(Ring, Vec<Poly>), GroebnerError> {
    let n = ring.nvars();
    let keep_mask: Vec<bool> = (0..n).map(|i| keep.contains(&i)).collect();
    let eliminated: Vec<usize> = (0..n).filter(|i| !keep_mask[*i]).collect();
    let perm: Vec<usize> = eliminated.iter().chain(keep.iter()).copied().collect();
    let cut = eliminated.len();
    let perm_ring = Ring::new(
        perm.iter().map(|&i| ring.vars[i].clone()).collect(),
        MonomialOrder::Block { cut },
        ring.field,
    );
    let permute = |p: &Poly| -> Poly {
        Poly::from_terms(
            &perm_ring,
            p.terms
                .iter()
                .map(|(e, c)| (perm.iter().map(|&i| e[i]).collect(), c.clone()))
                .collect(),
        )
    };
    let pg: Vec<Poly> = gens.iter().map(permute).collect();
    let g = groebner(&perm_ring, &pg, budget)?;
    // keep the polynomials free of the eliminated block
    let first_block_free = |p: &Poly| p.terms.iter().all(|(e, _)| e[..cut].iter().all(|&x| x == 0));
    let keep_ring = Ring::new(
        keep.iter().map(|&i| ring.vars[i].clone()).collect(),
        MonomialOrder::DegRevLex,
        ring.field,
    );
    let out: Vec<Poly> = g
        .polys
        .iter()
        .filter(|p| first_block_free(p))
        .map(|p| {
            Poly::from_terms(
                &keep_ring,
                p.terms
                    .iter()
                    .map(|(e, c)| (e[cut..].to_vec(), c.clone()))
                    .collect(),
            )
        })
        .collect();
    Ok((keep_ring, out))
}

/// Rabinowitsch: f is in the radical of I iff 1 in I + (1 - t f).
pub fn radical_membership(
    ring: &Ring,
    gens: &[Poly],
    f: &Poly,
    budget: u64,
) -> Result<bool, GroebnerError> {
    let mut vars = ring.vars.clone();
    vars.push("_t".into());
    let big = Ring::new(vars, MonomialOrder::DegRevLex, ring.field);
    let lift = |p: &Poly| -> Poly {
        Poly::from_terms(
            &big,
            p.terms
                .iter()
                .map(|(e, c)| {
                    let mut e2 = e.clone();
                    e2.push(0);
                    (e2, c.clone())
                })
                .collect(),
        )
    };
    let t = big.var(big.nvars() - 1);
    let mut g: Vec<Poly> = gens.iter().map(lift).collect();
    g.push(big.one().sub(&big, &t.mul(&big, &lift(f))));
    Ok(groebner(&big, &g, budget)?.contains_one())
}

#[cfg(test)]
mod tests {
    use super::super::coeff::{Coeff, FieldTag};
    use super::*;

    fn ring(names: &[&str]) -> Ring {
        Ring::new(
            names.iter().map(|s| s.to_string()).collect(),
            MonomialOrder::DegRevLex,
            FieldTag::Q,
        )
    }

    #[test]
    fn principal_and_monomial_ideals() {
        let r = ring(&["x", "y"]);
        let x = r.var(0);
        let y = r.var(1);
        let g = groebner(&r, &[x.clone()], 1000).unwrap();
        assert_eq!(g.polys, vec![x.clone()]);
        let x2 = x.mul(&r, &x);
        let xy = x.mul(&r, &y);
        let g = groebner(&r, &[x2.clone(), xy.clone()], 1000).unwrap();
        assert_eq!(g.polys.len(), 2);
        assert!(g.contains(&x2.mul(&r, &y)));
        assert!(!g.contains(&y));
    }

    #[test]
    fn classic_twisted_example() {
        // I = (x^2 - y, x^3 - z) in Q[x,y,z]; dim = 1 (a curve).
        let r = ring(&["x", "y", "z"]);
        let (x, y, z) = (r.var(0), r.var(1), r.var(2));
        let f1 = x.mul(&r, &x).sub(&r, &y);
        let f2 = x.mul(&r, &x).mul(&r, &x).sub(&r, &z);
        let g = groebner(&r, &[f1.clone(), f2.clone()], 1000).unwrap();
        assert_eq!(krull_dimension(&g), 1);
        assert!(is_complete_intersection(&g, 2));
        // y^3 - z^2 is in the ideal
        let rel = y.mul(&r, &y).mul(&r, &y).sub(&r, &z.mul(&r, &z));
        assert!(g.contains(&rel));
    }

    #[test]
    fn dimension_of_zero_ideal() {
        let r = ring(&["x", "y", "z"]);
        let g = groebner(&r, &[], 10).unwrap();
        assert_eq!(krull_dimension(&g), 3);
    }

    #[test]
    fn generator_order_invariance() {
        let r = ring(&["x", "y", "z"]);
        let (x, y, z) = (r.var(0), r.var(1), r.var(2));
        let f1 = x.mul(&r, &y).sub(&r, &z);
        let f2 = y.mul(&r, &z).sub(&r, &x);
        let f3 = z.mul(&r, &x).sub(&r, &y);
        let a = groebner(&r, &[f1.clone(), f2.clone(), f3.clone()], 10_000).unwrap();
        let b = groebner(&r, &[f3, f1, f2], 10_000).unwrap();
        assert_eq!(a.polys, b.polys);
    }

    #[test]
    fn nonreduced_double_point() {
        let r = ring(&["x"]);
        let x = r.var(0);
        let x2 = x.mul(&r, &x);
        let g = groebner(&r, &[x2.clone()], 100).unwrap();
        assert!(is_complete_intersection(&g, 1));
        assert!(nonreduced_ci_test(&r, &[x2], &g, 100).unwrap());
        // a simple point is reduced
        let g2 = groebner(&r, &[x.clone()], 100).unwrap();
        assert!(!nonreduced_ci_test(&r, &[x], &g2, 100).unwrap());
    }

    #[test]
    fn elimination_examples() {
        let r = ring(&["x", "y"]);
        let (x, y) = (r.var(0), r.var(1));
        let f = x.sub(&r, &y);
        let (_, out) = elimination(&r, &[f], &[1], 100).unwrap();
        assert!(out.is_empty());
        // circle and line: eliminate y from (x^2 + y^2 - 1, y - x)
        let r3 = ring(&["x", "y"]);
        let one = r3.one();
        let c = x.mul(&r3, &x).add(&r3, &y.mul(&r3, &y)).sub(&r3, &one);
        let l = y.sub(&r3, &x);
        let (kr, out) = elimination(&r3, &[c, l], &[0], 1000).unwrap();
        assert_eq!(out.len(), 1);
        // 2x^2 - 1 up to scaling
        let xx = kr.var(0);
        let want = xx
            .mul(&kr, &xx)
            .sub(&kr, &kr.constant(Coeff::from_rational(
                kr.field,
                &num::BigRational::new(1.into(), 2.into()),
            )));
        assert_eq!(out[0], want);
    }

    #[test]
    fn radical_membership_examples() {
        let r = ring(&["x", "y"]);
        let x = r.var(0);
        let x2 = x.mul(&r, &x);
        assert!(radical_membership(&r, &[x2.clone()], &x, 1000).unwrap());
        assert!(!radical_membership(&r, &[x2], &r.one(), 1000).is_err());
        let one_in = radical_membership(&r, &[r.var(1)], &r.one(), 1000).unwrap();
        assert!(!one_in);
    }

    #[test]
    fn budget_is_enforced() {
        let r = ring(&["x", "y", "z"]);
        let (x, y, z) = (r.var(0), r.var(1), r.var(2));
        let f1 = x.mul(&r, &y).sub(&r, &z);
        let f2 = y.mul(&r, &z).sub(&r, &x);
        let f3 = z.mul(&r, &x).sub(&r, &y);
        match groebner(&r, &[f1, f2, f3], 1) {
            Err(GroebnerError::BudgetExhausted(1)) => {}
            other => panic!("expected budget error, got {other:?}"),
        }
    }
}
