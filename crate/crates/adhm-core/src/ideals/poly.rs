//! Sparse multivariate polynomials with runtime monomial orders.

use super::coeff::{Coeff, FieldTag};
use serde::{Deserialize, Serialize};
use std::cmp::Ordering;
use std::fmt;

pub type Exps = Vec<u16>;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum MonomialOrder {
    /// Graded reverse lexicographic.
    DegRevLex,
    /// Elimination order: the first `cut` variables dominate; degrevlex
    /// within each block.
    Block { cut: usize },
}

impl MonomialOrder {
    pub fn cmp_exps(&self, a: &[u16], b: &[u16]) -> Ordering {
        match *self {
            MonomialOrder::DegRevLex => degrevlex(a, b),
            MonomialOrder::Block { cut } => degrevlex(&a[..cut], &b[..cut])
                .then_with(|| degrevlex(&a[cut..], &b[cut..])),
        }
    }
}

fn degrevlex(a: &[u16], b: &[u16]) -> Ordering {
    let da: u64 = a.iter().map(|&e| e as u64).sum();
    let db: u64 = b.iter().map(|&e| e as u64).sum();
    da.cmp(&db).then_with(|| {
        for (x, y) in a.iter().rev().zip(b.iter().rev()) {
            match x.cmp(y) {
                Ordering::Equal => continue,
                // smaller exponent in the last differing variable = larger
                Ordering::Less => return Ordering::Greater,
                Ordering::Greater => return Ordering::Less,
            }
        }
        Ordering::Equal
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Ring {
    pub vars: Vec<String>,
    pub order: MonomialOrder,
    pub field: FieldTag,
}

impl Ring {
    pub fn new(vars: Vec<String>, order: MonomialOrder, field: FieldTag) -> Self {
        Ring { vars, order, field }
    }

    pub fn nvars(&self) -> usize {
        self.vars.len()
    }

    pub fn var(&self, idx: usize) -> Poly {
        let mut e = vec![0u16; self.nvars()];
        e[idx] = 1;
        Poly { terms: vec![(e, Coeff::one(self.field))] }
    }

    pub fn constant(&self, c: Coeff) -> Poly {
        if c.is_zero() {
            Poly { terms: vec![] }
        } else {
            Poly { terms: vec![(vec![0u16; self.nvars()], c)] }
        }
    }

    pub fn one(&self) -> Poly {
        self.constant(Coeff::one(self.field))
    }

    pub fn zero(&self) -> Poly {
        Poly { terms: vec![] }
    }
}

pub fn exps_mul(a: &[u16], b: &[u16]) -> Exps {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

pub fn exps_divides(a: &[u16], b: &[u16]) -> bool {
    a.iter().zip(b).all(|(x, y)| x <= y)
}

pub fn exps_div(a: &[u16], b: &[u16]) -> Exps {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

pub fn exps_lcm(a: &[u16], b: &[u16]) -> Exps {
    a.iter().zip(b).map(|(x, y)| *x.max(y)).collect()
}

pub fn exps_gcd_is_one(a: &[u16], b: &[u16]) -> bool {
    a.iter().zip(b).all(|(x, y)| *x == 0 || *y == 0)
}

pub fn total_degree(a: &[u16]) -> u64 {
    a.iter().map(|&e| e as u64).sum()
}

/// Terms sorted descending in the ring's monomial order; no zero coeffs.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Poly {
    pub terms: Vec<(Exps, Coeff)>,
}

impl Poly {
    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn leading(&self) -> Option<&(Exps, Coeff)> {
        self.terms.first()
    }

    pub fn from_terms(ring: &Ring, terms: Vec<(Exps, Coeff)>) -> Poly {
        let mut map: std::collections::HashMap<Exps, Coeff> = std::collections::HashMap::new();
        for (e, c) in terms {
            assert_eq!(e.len(), ring.nvars());
            let entry = map.entry(e).or_insert_with(|| Coeff::zero(ring.field));
            *entry = entry.add(&c);
        }
        let mut out: Vec<(Exps, Coeff)> =
            map.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        out.sort_by(|(a, _), (b, _)| ring.order.cmp_exps(b, a));
        Poly { terms: out }
    }

    /// Re-sort after a ring/order change.
    pub fn resorted(&self, ring: &Ring) -> Poly {
        Poly::from_terms(ring, self.terms.clone())
    }

    pub fn add(&self, ring: &Ring, o: &Poly) -> Poly {
        // merge two sorted term lists
        let mut out = Vec::with_capacity(self.terms.len() + o.terms.len());
        let (mut i, mut j) = (0, 0);
        while i < self.terms.len() && j < o.terms.len() {
            match ring.order.cmp_exps(&self.terms[i].0, &o.terms[j].0) {
                Ordering::Greater => {
                    out.push(self.terms[i].clone());
                    i += 1;
                }
                Ordering::Less => {
                    out.push(o.terms[j].clone());
                    j += 1;
                }
                Ordering::Equal => {
                    let c = self.terms[i].1.add(&o.terms[j].1);
                    if !c.is_zero() {
                        out.push((self.terms[i].0.clone(), c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&self.terms[i..]);
        out.extend_from_slice(&o.terms[j..]);
        Poly { terms: out }
    }

    pub fn neg(&self) -> Poly {
        Poly { terms: self.terms.iter().map(|(e, c)| (e.clone(), c.neg())).collect() }
    }

    pub fn sub(&self, ring: &Ring, o: &Poly) -> Poly {
        self.add(ring, &o.neg())
    }

    pub fn mul_term(&self, exps: &[u16], c: &Coeff) -> Poly {
        if c.is_zero() {
            return Poly { terms: vec![] };
        }
        Poly {
            terms: self
                .terms
                .iter()
                .map(|(e, k)| (exps_mul(e, exps), k.mul(c)))
                .collect(),
        }
    }

    pub fn scale(&self, c: &Coeff) -> Poly {
        if c.is_zero() {
            return Poly { terms: vec![] };
        }
        Poly { terms: self.terms.iter().map(|(e, k)| (e.clone(), k.mul(c))).collect() }
    }

    pub fn mul(&self, ring: &Ring, o: &Poly) -> Poly {
        let mut acc = ring.zero();
        for (e, c) in &self.terms {
            acc = acc.add(ring, &o.mul_term(e, c));
        }
        acc
    }

    /// Make the leading coefficient 1.
    pub fn monic(&self) -> Poly {
        match self.leading() {
            None => self.clone(),
            Some((_, c)) => self.scale(&c.inv()),
        }
    }

    pub fn total_degree(&self) -> u64 {
        self.terms.iter().map(|(e, _)| total_degree(e)).max().unwrap_or(0)
    }

    /// Partial derivative with respect to variable `idx`.
    pub fn derivative(&self, ring: &Ring, idx: usize) -> Poly {
        let terms = self
            .terms
            .iter()
            .filter(|(e, _)| e[idx] > 0)
            .map(|(e, c)| {
                let mut e2 = e.clone();
                e2[idx] -= 1;
                (e2, c.mul(&Coeff::from_int(ring.field, e[idx] as i64)))
            })
            .collect();
        Poly::from_terms(ring, terms)
    }

    /// Does the polynomial involve only variables with indices in `keep`?
    pub fn supported_on(&self, keep: &[bool]) -> bool {
        self.terms
            .iter()
            .all(|(e, _)| e.iter().enumerate().all(|(i, &x)| x == 0 || keep[i]))
    }

    pub fn display<'a>(&'a self, ring: &'a Ring) -> PolyDisplay<'a> {
        PolyDisplay { poly: self, ring }
    }
}

pub struct PolyDisplay<'a> {
    poly: &'a Poly,
    ring: &'a Ring,
}

impl fmt::Display for PolyDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.poly.is_zero() {
            return write!(f, "0");
        }
        for (n, (e, c)) in self.poly.terms.iter().enumerate() {
            if n > 0 {
                write!(f, " + ")?;
            }
            let is_const = e.iter().all(|&x| x == 0);
            if is_const || !c.is_one() {
                write!(f, "{c}")?;
                if !is_const {
                    write!(f, "*")?;
                }
            }
            let mut first = true;
            for (i, &x) in e.iter().enumerate() {
                if x == 0 {
                    continue;
                }
                if !first {
                    write!(f, "*")?;
                }
                first = false;
                write!(f, "{}", self.ring.vars[i])?;
                if x > 1 {
                    write!(f, "^{x}")?;
                }
            }
        }
        Ok(())
    }
}

/// Normal form of f modulo the (not necessarily Gröbner) basis `g`.
pub fn normal_form(ring: &Ring, f: &Poly, g: &[Poly]) -> Poly {
    let mut rem = ring.zero();
    let mut work = f.clone();
    'outer: while let Some((le, lc)) = work.leading().cloned() {
        for gi in g {
            if let Some((ge, gc)) = gi.leading() {
                if exps_divides(ge, &le) {
                    let q = exps_div(&le, ge);
                    let factor = lc.div(gc);
                    work = work.sub(ring, &gi.mul_term(&q, &factor));
                    continue 'outer;
                }
            }
        }
        // leading term irreducible: move it to the remainder
        rem.terms.push((le, lc));
        work.terms.remove(0);
    }
    rem
}
