//! Truncated formal series in inverse powers of q1, q2 with Laurent
//! polynomial coefficients in the remaining torus variables.

use num::{BigInt, BigRational, One, Signed, Zero};
use std::collections::BTreeMap;

/// Laurent monomial key in the z (gauge-torus) and t (framing-torus)
/// variables.
pub type ZT = (Vec<i32>, Vec<i32>);

/// Keys are doubled q-degrees (of q1^{-1}, q2^{-1}); values map Laurent
/// monomials to exact coefficients.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TruncatedSeries {
    /// Inclusive cutoff on dq1 + dq2.
    pub order: i64,
    pub terms: BTreeMap<(i64, i64), BTreeMap<ZT, BigRational>>,
}

fn zt_mul(a: &ZT, b: &ZT) -> ZT {
    (
        a.0.iter().zip(&b.0).map(|(x, y)| x + y).collect(),
        a.1.iter().zip(&b.1).map(|(x, y)| x + y).collect(),
    )
}

impl TruncatedSeries {
    pub fn one(order: i64, zrank: usize, trank: usize) -> Self {
        let mut terms = BTreeMap::new();
        let mut inner = BTreeMap::new();
        inner.insert((vec![0; zrank], vec![0; trank]), BigRational::one());
        terms.insert((0, 0), inner);
        TruncatedSeries { order, terms }
    }

    pub fn zero(order: i64) -> Self {
        TruncatedSeries { order, terms: BTreeMap::new() }
    }

    pub fn insert(&mut self, key: (i64, i64), zt: ZT, c: BigRational) {
        if c.is_zero() || key.0 + key.1 > self.order {
            return;
        }
        let slot = self.terms.entry(key).or_default().entry(zt).or_insert_with(BigRational::zero);
        *slot += c;
    }

    pub fn cleaned(mut self) -> Self {
        for inner in self.terms.values_mut() {
            inner.retain(|_, c| !c.is_zero());
        }
        self.terms.retain(|_, inner| !inner.is_empty());
        self
    }

    pub fn add(&self, o: &TruncatedSeries) -> TruncatedSeries {
        let mut out = self.clone();
        for (key, inner) in &o.terms {
            for (zt, c) in inner {
                out.insert(*key, zt.clone(), c.clone());
            }
        }
        out.cleaned()
    }

    pub fn scale(&self, c: &BigRational) -> TruncatedSeries {
        let mut out = TruncatedSeries::zero(self.order);
        for (key, inner) in &self.terms {
            for (zt, k) in inner {
                out.insert(*key, zt.clone(), k * c);
            }
        }
        out.cleaned()
    }

    /// Multiply by a single term sign * q1^{-dq1/2} q2^{-dq2/2} * zt.
    pub fn mul_term(&self, sign: i64, dq: (i64, i64), zt: &ZT) -> TruncatedSeries {
        let s = BigRational::from_integer(BigInt::from(sign));
        let mut out = TruncatedSeries::zero(self.order);
        for (key, inner) in &self.terms {
            let nk = (key.0 + dq.0, key.1 + dq.1);
            if nk.0 + nk.1 > self.order {
                continue;
            }
            for (m, c) in inner {
                out.insert(nk, zt_mul(m, zt), c * &s);
            }
        }
        out.cleaned()
    }

    /// Multiply by (1 - sign * w^{-1}) where w^{-1} has the given q-degree
    /// and zt monomial.
    pub fn mul_one_minus(&self, sign: i64, dq: (i64, i64), zt: &ZT) -> TruncatedSeries {
        self.add(&self.mul_term(-sign, dq, zt))
    }

    /// Multiply by the geometric series sum_n (sign * w^{-1})^n.
    pub fn mul_geometric(&self, sign: i64, dq: (i64, i64), zt: &ZT) -> TruncatedSeries {
        assert!(dq.0 + dq.1 > 0, "geometric factor needs positive q-degree");
        let mut acc = self.clone();
        let mut out = self.clone();
        loop {
            acc = acc.mul_term(sign, dq, zt);
            if acc.terms.is_empty() {
                break;
            }
            out = out.add(&acc);
        }
        out.cleaned()
    }

    /// Constant term in z after multiplying by an integer Laurent
    /// polynomial measure (map z-exps -> coefficient) and dividing by
    /// `divisor`; drops the z variables.
    pub fn constant_term_z(
        &self,
        measure: &BTreeMap<Vec<i32>, i64>,
        divisor: i64,
    ) -> TruncatedSeries {
        let div = BigRational::from_integer(BigInt::from(divisor));
        let mut out = TruncatedSeries::zero(self.order);
        for (key, inner) in &self.terms {
            for ((z, t), c) in inner {
                for (mz, mc) in measure {
                    // contributes to the z-constant term iff z + mz = 0
                    if z.iter().zip(mz).all(|(a, b)| a + b == 0) {
                        out.insert(
                            *key,
                            (Vec::new(), t.clone()),
                            c * BigRational::from_integer(BigInt::from(*mc)) / &div,
                        );
                    }
                }
            }
        }
        out.cleaned()
    }

    /// Specialize all z and t variables to 1: per-key total.
    pub fn collapse_zt(&self) -> BTreeMap<(i64, i64), BigRational> {
        let mut out = BTreeMap::new();
        for (key, inner) in &self.terms {
            let total: BigRational = inner.values().sum();
            if !total.is_zero() {
                out.insert(*key, total);
            }
        }
        out
    }

    /// Restrict to a smaller truncation order.
    pub fn truncated(&self, order: i64) -> TruncatedSeries {
        assert!(order <= self.order);
        let mut out = TruncatedSeries::zero(order);
        for (key, inner) in &self.terms {
            if key.0 + key.1 > order {
                continue;
            }
            for (zt, c) in inner {
                out.insert(*key, zt.clone(), c.clone());
            }
        }
        out
    }

    /// All coefficients are integers (dimension counts).
    pub fn assert_integral(&self) {
        for inner in self.terms.values() {
            for c in inner.values() {
                assert!(c.denom().is_one(), "non-integral series coefficient {c}");
            }
        }
    }

    /// All coefficients nonnegative.
    pub fn is_nonnegative(&self) -> bool {
        self.terms.values().all(|inner| inner.values().all(|c| !c.is_negative()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn geometric_times_one_minus_is_one() {
        let one = TruncatedSeries::one(10, 0, 0);
        let zt = (vec![], vec![]);
        let g = one.mul_geometric(1, (2, 0), &zt);
        let back = g.mul_one_minus(1, (2, 0), &zt);
        assert_eq!(back, one);
    }

    #[test]
    fn signed_geometric() {
        let one = TruncatedSeries::one(6, 0, 0);
        let zt = (vec![], vec![]);
        let g = one.mul_geometric(-1, (2, 0), &zt);
        let c = g.collapse_zt();
        assert_eq!(c[&(0, 0)], BigRational::one());
        assert_eq!(c[&(2, 0)], -BigRational::one());
        assert_eq!(c[&(4, 0)], BigRational::one());
    }

    #[test]
    fn constant_term_extraction() {
        // series 1 + q^{-1}(z^2 + z^{-2}); measure (1 - z^2): CT picks
        // 1*1 and -z^2 * z^{-2}.
        let mut s = TruncatedSeries::one(4, 1, 0);
        s.insert((2, 0), (vec![2], vec![]), BigRational::one());
        s.insert((2, 0), (vec![-2], vec![]), BigRational::one());
        let mut measure = BTreeMap::new();
        measure.insert(vec![0], 1i64);
        measure.insert(vec![2], -1i64);
        let ct = s.constant_term_z(&measure, 1);
        let c = ct.collapse_zt();
        assert_eq!(c[&(0, 0)], BigRational::one());
        // at (2,0): +1 (from z^0 part? none) ... contributions: z^2*nothing,
        // z^{-2} * (-z^2) = -1, z^2 * 1? not constant. So total -1 + 1*0:
        assert_eq!(c.get(&(2, 0)), None.or(c.get(&(2, 0))));
        assert_eq!(ct.terms[&(2, 0)][&(vec![], vec![])], -BigRational::one());
    }
}
