//! Weyl integration data for the small classical gauge groups G'_k and
//! invariant extraction of the Koszul expansion.
//!
//! Disconnected O(k) is handled by two-component averaging: the character
//! of the non-identity component is constant on it, so it is evaluated on a
//! basis of eigenlines of one representative (which is not conjugate into
//! the maximal torus); the identity component uses Weyl's integration
//! formula. Because the representative mixes the torus weight lines, the
//! component characters are rebuilt from per-component eigenline data
//! rather than substituted into the already-expanded torus character.

use super::series::TruncatedSeries;
use super::weights::{p_is_symmetric, torus_lines};
use super::PartitionError;
use crate::forms::Flavor;
use num::{BigInt, BigRational};
use std::collections::BTreeMap;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GroupTag {
    O1,
    O2,
    O3,
    Sp1,
    Sp2,
}

/// One eigenline of V for a component representative: a sign and a Laurent
/// monomial in the component's residual torus.
#[derive(Clone, Debug)]
pub(crate) struct EigenLine {
    pub sign: i64,
    pub z: Vec<i32>,
}

/// One connected component of the maximal compact subgroup: residual torus
/// rank, eigenlines of V, and the Weyl measure as an integer Laurent
/// polynomial over a divisor.
#[derive(Clone, Debug)]
pub(crate) struct Component {
    pub zrank: usize,
    pub lines: Vec<EigenLine>,
    pub measure: BTreeMap<Vec<i32>, i64>,
    pub measure_div: i64,
    /// Component weight as a fraction of the whole group.
    pub weight_num: i64,
    pub weight_den: i64,
}

#[derive(Clone, Debug)]
pub struct WeylData {
    pub group: GroupTag,
    pub(crate) components: Vec<Component>,
}

fn full_lines(dim: usize, sign: i64) -> Vec<EigenLine> {
    torus_lines(dim).into_iter().map(|z| EigenLine { sign, z }).collect()
}

/// Product over roots of (1 - z^alpha).
fn root_measure(roots: &[Vec<i32>]) -> BTreeMap<Vec<i32>, i64> {
    let rank = roots[0].len();
    let mut acc: BTreeMap<Vec<i32>, i64> = BTreeMap::new();
    acc.insert(vec![0; rank], 1);
    for alpha in roots {
        let mut next: BTreeMap<Vec<i32>, i64> = BTreeMap::new();
        for (z, c) in &acc {
            *next.entry(z.clone()).or_insert(0) += c;
            let shifted: Vec<i32> = z.iter().zip(alpha).map(|(a, b)| a + b).collect();
            *next.entry(shifted).or_insert(0) -= c;
        }
        next.retain(|_, c| *c != 0);
        acc = next;
    }
    acc
}

fn trivial_measure(rank: usize) -> BTreeMap<Vec<i32>, i64> {
    BTreeMap::from([(vec![0; rank], 1)])
}

impl WeylData {
    /// The gauge group determined by the flavor and gauge dimension k.
    pub fn for_setting(flavor: Flavor, k: usize) -> Result<WeylData, PartitionError> {
        let group = match (flavor, k) {
            (Flavor::SpData, 1) => GroupTag::O1,
            (Flavor::SpData, 2) => GroupTag::O2,
            (Flavor::SpData, 3) => GroupTag::O3,
            (Flavor::SOData, 2) => GroupTag::Sp1,
            (Flavor::SOData, 4) => GroupTag::Sp2,
            _ => return Err(PartitionError::UnsupportedGroup),
        };
        Ok(WeylData::for_group(group))
    }

    pub fn for_group(group: GroupTag) -> WeylData {
        let components = match group {
            GroupTag::O1 => vec![
                Component {
                    zrank: 0,
                    lines: vec![EigenLine { sign: 1, z: vec![] }],
                    measure: trivial_measure(0),
                    measure_div: 1,
                    weight_num: 1,
                    weight_den: 2,
                },
                Component {
                    zrank: 0,
                    lines: vec![EigenLine { sign: -1, z: vec![] }],
                    measure: trivial_measure(0),
                    measure_div: 1,
                    weight_num: 1,
                    weight_den: 2,
                },
            ],
            GroupTag::O2 => vec![
                // SO(2): rank-1 torus, no roots
                Component {
                    zrank: 1,
                    lines: full_lines(2, 1),
                    measure: trivial_measure(1),
                    measure_div: 1,
                    weight_num: 1,
                    weight_den: 2,
                },
                // reflection component: eigenvalues +1, -1 on V
                Component {
                    zrank: 0,
                    lines: vec![
                        EigenLine { sign: 1, z: vec![] },
                        EigenLine { sign: -1, z: vec![] },
                    ],
                    measure: trivial_measure(0),
                    measure_div: 1,
                    weight_num: 1,
                    weight_den: 2,
                },
            ],
            GroupTag::O3 => {
                let m = root_measure(&[vec![1], vec![-1]]);
                vec![
                    Component {
                        zrank: 1,
                        lines: full_lines(3, 1),
                        measure: m.clone(),
                        measure_div: 2,
                        weight_num: 1,
                        weight_den: 2,
                    },
                    // -Id times SO(3)
                    Component {
                        zrank: 1,
                        lines: full_lines(3, -1),
                        measure: m,
                        measure_div: 2,
                        weight_num: 1,
                        weight_den: 2,
                    },
                ]
            }
            GroupTag::Sp1 => vec![Component {
                zrank: 1,
                lines: full_lines(2, 1),
                measure: root_measure(&[vec![2], vec![-2]]),
                measure_div: 2,
                weight_num: 1,
                weight_den: 1,
            }],
            GroupTag::Sp2 => vec![Component {
                zrank: 2,
                lines: full_lines(4, 1),
                measure: root_measure(&[
                    vec![2, 0],
                    vec![-2, 0],
                    vec![0, 2],
                    vec![0, -2],
                    vec![1, 1],
                    vec![-1, -1],
                    vec![1, -1],
                    vec![-1, 1],
                ]),
                measure_div: 8,
                weight_num: 1,
                weight_den: 1,
            }],
        };
        WeylData { group, components }
    }
}

/// Signed weight used inside a single component's expansion.
struct SignedWeight {
    sign: i64,
    dq: (i64, i64),
    z: Vec<i32>,
    t: Vec<i32>,
}

fn pair_weights(lines: &[EigenLine], symmetric: bool, dq: (i64, i64), trank: usize) -> Vec<SignedWeight> {
    let mut out = Vec::new();
    for i in 0..lines.len() {
        let start = if symmetric { i } else { i + 1 };
        for j in start..lines.len() {
            out.push(SignedWeight {
                sign: lines[i].sign * lines[j].sign,
                dq,
                z: lines[i].z.iter().zip(&lines[j].z).map(|(a, b)| a + b).collect(),
                t: vec![0; trank],
            });
        }
    }
    out
}

fn component_series(
    flavor: Flavor,
    n: usize,
    comp: &Component,
    order: i64,
    include_e: bool,
) -> TruncatedSeries {
    let wl = torus_lines(n);
    let trank = n / 2;
    let sym = p_is_symmetric(flavor);
    let mut den: Vec<SignedWeight> = Vec::new();
    for dq in [(2, 0), (0, 2)] {
        den.extend(pair_weights(&comp.lines, sym, dq, trank));
    }
    for line in &comp.lines {
        for w in &wl {
            den.push(SignedWeight {
                sign: line.sign,
                dq: (1, 1),
                z: line.z.clone(),
                t: w.clone(),
            });
        }
    }
    let num = if include_e {
        pair_weights(&comp.lines, !sym, (2, 2), trank)
    } else {
        Vec::new()
    };
    let mut s = TruncatedSeries::one(order, comp.zrank, trank);
    for w in &den {
        s = s.mul_geometric(
            w.sign,
            w.dq,
            &(w.z.iter().map(|x| -x).collect(), w.t.iter().map(|x| -x).collect()),
        );
    }
    for w in &num {
        s = s.mul_one_minus(
            w.sign,
            w.dq,
            &(w.z.iter().map(|x| -x).collect(), w.t.iter().map(|x| -x).collect()),
        );
    }
    let mut ct = s.constant_term_z(&comp.measure, comp.measure_div);
    ct = ct.scale(&BigRational::new(
        BigInt::from(comp.weight_num),
        BigInt::from(comp.weight_den),
    ));
    ct
}

/// G'_k-invariant part of the expansion of the Koszul class at gauge size
/// k: per-component Weyl integration / averaging, summed with component
/// weights. The result has no z variables.
pub fn invariant_part(
    flavor: Flavor,
    n: usize,
    k: usize,
    wd: &WeylData,
    order: i64,
) -> Result<TruncatedSeries, PartitionError> {
    invariant_part_inner(flavor, n, k, wd, order, true)
}

/// Same extraction applied to the ambient character of C[N] alone (no
/// Koszul numerator); used to validate the Weyl table against the
/// brute-force oracle.
pub fn invariant_ambient_part(
    flavor: Flavor,
    n: usize,
    k: usize,
    wd: &WeylData,
    order: i64,
) -> Result<TruncatedSeries, PartitionError> {
    invariant_part_inner(flavor, n, k, wd, order, false)
}

fn invariant_part_inner(
    flavor: Flavor,
    n: usize,
    k: usize,
    wd: &WeylData,
    order: i64,
    include_e: bool,
) -> Result<TruncatedSeries, PartitionError> {
    if WeylData::for_setting(flavor, k)?.group != wd.group {
        return Err(PartitionError::UnsupportedGroup);
    }
    let mut acc = TruncatedSeries::zero(order);
    for comp in &wd.components {
        acc = acc.add(&component_series(flavor, n, comp, order, include_e));
    }
    acc.assert_integral();
    Ok(acc)
}

/// One instanton term of the partition function.
#[derive(Clone, Debug)]
pub struct NekrasovTerm {
    pub k: usize,
    /// Instanton number n as a reduced fraction (numerator, denominator);
    /// None when the dictionary is undefined (N = 4).
    pub instanton: Option<(i64, i64)>,
    pub series: TruncatedSeries,
}

/// Instanton-number dictionary: n = k for Sp(N/2); k = 2n for SO(N), N >= 5;
/// k = 4n for SO(3); undefined for N = 4.
pub fn instanton_number(flavor: Flavor, n: usize, k: usize) -> Option<(i64, i64)> {
    let k = k as i64;
    match flavor {
        Flavor::SpData => Some((k, 1)),
        Flavor::SOData if n >= 5 => Some(if k % 2 == 0 { (k / 2, 1) } else { (k, 2) }),
        Flavor::SOData if n == 3 => Some(if k % 4 == 0 { (k / 4, 1) } else { (k, 4) }),
        _ => None,
    }
}

/// The K-theoretic partition function terms for gauge sizes 0..=k_max:
/// invariant_part(expand(koszul_character(k))) per k, with the instanton
/// number per the dictionary.
pub fn nekrasov_z(
    flavor: Flavor,
    n: usize,
    k_max: usize,
    order: i64,
) -> Result<Vec<NekrasovTerm>, PartitionError> {
    let mut out = Vec::new();
    for k in 0..=k_max {
        if flavor == Flavor::SOData && k % 2 != 0 {
            continue;
        }
        let series = if k == 0 {
            TruncatedSeries::one(order, 0, n / 2)
        } else {
            let wd = WeylData::for_setting(flavor, k)?;
            invariant_part(flavor, n, k, &wd, order)?
        };
        out.push(NekrasovTerm { k, instanton: instanton_number(flavor, n, k), series });
    }
    Ok(out)
}
