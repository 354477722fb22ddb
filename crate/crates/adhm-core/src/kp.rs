//! Kraft–Procesi combinatorics: partitions, ab-diagrams, validity
//! constraints, dominance order, orbit-dimension formulas, and the
//! rank-fingerprint classifier for framing maps.

use crate::exactalg::Matrix;
use crate::forms::{right_adjoint, FramedSetting};
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum KpError {
    #[error("partitions have different sizes")]
    SizeMismatch,
    #[error("partition is not valid for the requested group")]
    InvalidPartition,
    #[error("ab-diagram violates the row-type constraints")]
    InvalidDiagram,
    #[error("i i* is not nilpotent")]
    NotNilpotent,
    #[error("no valid diagram matches the rank fingerprint")]
    NoMatch,
    #[error("cannot parse diagram row {0:?}")]
    ParseRow(String),
}

/// A partition: weakly decreasing positive parts.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Partition(pub Vec<usize>);

impl Partition {
    pub fn new(mut parts: Vec<usize>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition(parts)
    }

    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn transpose(&self) -> Partition {
        let max = self.0.first().copied().unwrap_or(0);
        Partition((1..=max).map(|n| self.0.iter().filter(|&&p| p >= n).count()).collect())
    }

    fn odd_part_count(&self) -> usize {
        self.0.iter().filter(|&&p| p % 2 == 1).count()
    }

    /// Every odd part has even multiplicity.
    pub fn is_valid_symplectic(&self) -> bool {
        self.0
            .iter()
            .filter(|&&p| p % 2 == 1)
            .fold(BTreeMap::new(), |mut m, &p| {
                *m.entry(p).or_insert(0usize) += 1;
                m
            })
            .values()
            .all(|&c| c % 2 == 0)
    }

    /// Every even part has even multiplicity.
    pub fn is_valid_orthogonal(&self) -> bool {
        self.0
            .iter()
            .filter(|&&p| p % 2 == 0)
            .fold(BTreeMap::new(), |mut m, &p| {
                *m.entry(p).or_insert(0usize) += 1;
                m
            })
            .values()
            .all(|&c| c % 2 == 0)
    }
}

/// eta <= sigma in dominance order (partial sums of eta bounded by sigma's).
pub fn dominance_leq(eta: &Partition, sigma: &Partition) -> Result<bool, KpError> {
    if eta.size() != sigma.size() {
        return Err(KpError::SizeMismatch);
    }
    let (mut se, mut ss) = (0usize, 0usize);
    for n in 0..eta.0.len().max(sigma.0.len()) {
        se += eta.0.get(n).copied().unwrap_or(0);
        ss += sigma.0.get(n).copied().unwrap_or(0);
        if se > ss {
            return Ok(false);
        }
    }
    Ok(true)
}

/// dim Sp.X for the nilpotent class with partition eta in sp(|eta|).
pub fn dim_sp_orbit(eta: &Partition) -> Result<usize, KpError> {
    if !eta.is_valid_symplectic() {
        return Err(KpError::InvalidPartition);
    }
    let s = eta.size() as i64;
    let hat_sq: i64 = eta.transpose().0.iter().map(|&h| (h * h) as i64).sum();
    Ok(((s * s + s - hat_sq - eta.odd_part_count() as i64) / 2) as usize)
}

/// dim O.Y for the nilpotent class with partition eta in o(|eta|).
pub fn dim_o_orbit(eta: &Partition) -> Result<usize, KpError> {
    if !eta.is_valid_orthogonal() {
        return Err(KpError::InvalidPartition);
    }
    let s = eta.size() as i64;
    let hat_sq: i64 = eta.transpose().0.iter().map(|&h| (h * h) as i64).sum();
    Ok(((s * s - s - hat_sq + eta.odd_part_count() as i64) / 2) as usize)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Letter {
    A,
    B,
}

impl Letter {
    pub fn other(self) -> Letter {
        match self {
            Letter::A => Letter::B,
            Letter::B => Letter::A,
        }
    }
}

/// A row: alternating letters, described by its start letter and length.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Row {
    pub start: Letter,
    pub len: usize,
}

impl Row {
    /// Letters of one kind in this row.
    pub fn count(&self, letter: Letter) -> usize {
        if self.start == letter {
            self.len.div_ceil(2)
        } else {
            self.len / 2
        }
    }
}

/// An ab-diagram: a multiset of alternating rows.  Convention: `a` letters
/// are basis vectors of W (the orthogonal space in the symplectic-V
/// setting), `b` letters of V.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct AbDiagram {
    /// Canonical order: length descending, a-start before b-start.
    pub rows: Vec<Row>,
}

impl AbDiagram {
    pub fn new(mut rows: Vec<Row>) -> Self {
        rows.sort_by(|r, s| s.len.cmp(&r.len).then(r.start.cmp(&s.start)));
        AbDiagram { rows }
    }

    pub fn count(&self, letter: Letter) -> usize {
        self.rows.iter().map(|r| r.count(letter)).sum()
    }

    fn rows_of(&self, start: Letter, len: usize) -> usize {
        self.rows.iter().filter(|r| r.start == start && r.len == len).count()
    }

    /// Remove every `letter`; the remaining letters of each row stay
    /// contiguous, so row lengths give a partition.
    pub fn strip(&self, letter: Letter) -> Partition {
        Partition::new(self.rows.iter().map(|r| r.count(letter.other())).collect())
    }

    /// Sum over odd n of (#a-rows of length n) * (#b-rows of length n).
    pub fn delta_ab(&self) -> usize {
        let max = self.rows.iter().map(|r| r.len).max().unwrap_or(0);
        (1..=max)
            .filter(|n| n % 2 == 1)
            .map(|n| self.rows_of(Letter::A, n) * self.rows_of(Letter::B, n))
            .sum()
    }

    /// Row-type constraints for Sp(V) x O(W) orbits with V symplectic:
    /// - odd a-start rows may be single only when len = 1 mod 4, otherwise
    ///   they occur with even multiplicity;
    /// - odd b-start rows may be single only when len = 3 mod 4, otherwise
    ///   even multiplicity;
    /// - even-length rows pair up: equally many a-start and b-start rows of
    ///   each even length.
    pub fn is_valid_spo(&self) -> bool {
        let max = self.rows.iter().map(|r| r.len).max().unwrap_or(0);
        for n in 1..=max {
            let na = self.rows_of(Letter::A, n);
            let nb = self.rows_of(Letter::B, n);
            if n % 2 == 0 {
                if na != nb {
                    return false;
                }
            } else {
                if n % 4 != 1 && na % 2 != 0 {
                    return false;
                }
                if n % 4 != 3 && nb % 2 != 0 {
                    return false;
                }
            }
        }
        true
    }

    /// dim (Sp x O).i = (dim Sp.X + dim O.Y + k N - delta_ab) / 2 where
    /// X = i i* has b-partition strip(a) and Y = i* i has a-partition
    /// strip(b); k = #b, N = #a.
    pub fn dim_spo_orbit(&self) -> Result<usize, KpError> {
        if !self.is_valid_spo() {
            return Err(KpError::InvalidDiagram);
        }
        let sp = dim_sp_orbit(&self.strip(Letter::A)).map_err(|_| KpError::InvalidDiagram)?;
        let o = dim_o_orbit(&self.strip(Letter::B)).map_err(|_| KpError::InvalidDiagram)?;
        let kn = self.count(Letter::A) * self.count(Letter::B);
        Ok((sp + o + kn - self.delta_ab()) / 2)
    }
}

impl fmt::Display for AbDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (idx, r) in self.rows.iter().enumerate() {
            if idx > 0 {
                writeln!(f)?;
            }
            let mut letter = r.start;
            for _ in 0..r.len {
                write!(f, "{}", if letter == Letter::A { 'a' } else { 'b' })?;
                letter = letter.other();
            }
        }
        Ok(())
    }
}

impl FromStr for AbDiagram {
    type Err = KpError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let mut rows = Vec::new();
        for line in s.lines() {
            let line = line.trim();
            if line.is_empty() {
                continue;
            }
            let chars: Vec<char> = line.chars().collect();
            let start = match chars[0] {
                'a' => Letter::A,
                'b' => Letter::B,
                _ => return Err(KpError::ParseRow(line.to_string())),
            };
            let mut expect = start;
            for &c in &chars {
                let got = match c {
                    'a' => Letter::A,
                    'b' => Letter::B,
                    _ => return Err(KpError::ParseRow(line.to_string())),
                };
                if got != expect {
                    return Err(KpError::ParseRow(line.to_string()));
                }
                expect = expect.other();
            }
            rows.push(Row { start, len: chars.len() });
        }
        Ok(AbDiagram::new(rows))
    }
}

/// All valid spo-diagrams with exactly n_a letters `a` and n_b letters `b`.
pub fn enumerate_valid_diagrams(n_a: usize, n_b: usize) -> Vec<AbDiagram> {
    let mut out = Vec::new();
    let mut rows = Vec::new();
    // Depth-first over rows in canonical order (len desc, a before b),
    // bounding each new row by the previous one.
    fn rec(
        rem_a: usize,
        rem_b: usize,
        max_row: Row,
        rows: &mut Vec<Row>,
        out: &mut Vec<AbDiagram>,
    ) {
        if rem_a == 0 && rem_b == 0 {
            let d = AbDiagram { rows: rows.clone() };
            if d.is_valid_spo() {
                out.push(d);
            }
            return;
        }
        for len in (1..=max_row.len).rev() {
            for start in [Letter::A, Letter::B] {
                let r = Row { start, len };
                // respect canonical order: r must not precede max_row
                if r.len == max_row.len && r.start < max_row.start {
                    continue;
                }
                let ca = r.count(Letter::A);
                let cb = r.count(Letter::B);
                if ca <= rem_a && cb <= rem_b {
                    rows.push(r);
                    rec(rem_a - ca, rem_b - cb, r, rows, out);
                    rows.pop();
                }
            }
        }
    }
    let cap = n_a + n_b;
    rec(n_a, n_b, Row { start: Letter::A, len: cap + 1 }, &mut rows, &mut out);
    // The sentinel start=A with len cap+1 never blocks real rows.
    out.sort_by_key(|d| format!("{d}"));
    out.dedup();
    out
}

/// Ranks of all alternating words in (i, j), by (first map is i?, word
/// length), for lengths 1..=bound.
pub type RankFingerprint = BTreeMap<(bool, usize), usize>;

pub fn rank_fingerprint(i: &Matrix, j: &Matrix, bound: usize) -> RankFingerprint {
    let mut out = BTreeMap::new();
    for start_i in [true, false] {
        let mut acc: Option<Matrix> = None;
        let mut use_i = start_i;
        for len in 1..=bound {
            let f = if use_i { i } else { j };
            acc = Some(match acc {
                None => f.clone(),
                Some(m) => f * &m,
            });
            out.insert((start_i, len), acc.as_ref().unwrap().rank());
            use_i = !use_i;
        }
    }
    out
}

/// The canonical framing map of a diagram: a basis vector for each letter;
/// i sends each `a` to the letter immediately to its left (a `b`, or zero at
/// the row start), and j sends each `b` to the `a` to its left likewise.
pub fn canonical_pair(d: &AbDiagram) -> (Matrix, Matrix) {
    let n_a = d.count(Letter::A);
    let n_b = d.count(Letter::B);
    // Assign indices: walk rows left to right.
    let mut i_mat = Matrix::zeros(n_b, n_a);
    let mut j_mat = Matrix::zeros(n_a, n_b);
    let (mut ia, mut ib) = (0usize, 0usize);
    for r in &d.rows {
        let mut letter = r.start;
        let mut left: Option<(Letter, usize)> = None;
        for _ in 0..r.len {
            let idx = if letter == Letter::A { ia } else { ib };
            if let Some((ll, li)) = left {
                match letter {
                    Letter::A => {
                        debug_assert_eq!(ll, Letter::B);
                        i_mat[(li, idx)] = crate::exactalg::Scalar::one();
                    }
                    Letter::B => {
                        debug_assert_eq!(ll, Letter::A);
                        j_mat[(li, idx)] = crate::exactalg::Scalar::one();
                    }
                }
            }
            left = Some((letter, idx));
            if letter == Letter::A {
                ia += 1;
            } else {
                ib += 1;
            }
            letter = letter.other();
        }
    }
    (i_mat, j_mat)
}

/// Classify a framing map i: W -> V by its ab-diagram, matching the rank
/// fingerprint of (i, i*) against the canonical pair of every valid diagram
/// with the right letter counts.
pub fn abdiagram_of(i: &Matrix, setting: &FramedSetting) -> Result<AbDiagram, KpError> {
    let j = right_adjoint(i, &setting.w, &setting.v).expect("shapes match the setting");
    let k = setting.k();
    let n = setting.n();
    let rho = i * &j;
    if !rho.pow(k + 1).is_zero() {
        return Err(KpError::NotNilpotent);
    }
    let bound = k + n;
    let fp = rank_fingerprint(i, &j, bound);
    for d in enumerate_valid_diagrams(n, k) {
        let (ci, cj) = canonical_pair(&d);
        if rank_fingerprint(&ci, &cj, bound) == fp {
            return Ok(d);
        }
    }
    Err(KpError::NoMatch)
}

/// Dimension of the stratum indexed by k' inside the quotient at (N, k), or
/// None when the stratum is empty.
pub fn strata_dimension(
    n: usize,
    k: usize,
    k_prime: usize,
    flavor: crate::forms::Flavor,
) -> Option<usize> {
    if k_prime > k {
        return None;
    }
    match flavor {
        // V symplectic: nonempty iff (N=3 and k' in 4Z) or (N>=4 and k' in
        // 2Z), with an even number of remaining points.
        crate::forms::Flavor::SOData => {
            if (k - k_prime) % 2 != 0 {
                return None;
            }
            let ok = (n == 3 && k_prime % 4 == 0) || (n >= 4 && k_prime % 2 == 0);
            if ok {
                Some(k_prime * (n - 2) + (k - k_prime))
            } else {
                None
            }
        }
        // V orthogonal: always nonempty.
        crate::forms::Flavor::SpData => Some(k_prime * (n + 2) + 2 * (k - k_prime)),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::Scalar;
    use crate::fixtures;
    use crate::forms::{random_isometry, Flavor};

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec())
    }

    #[test]
    fn transpose_examples() {
        assert_eq!(p(&[5, 3, 3, 2, 2]).transpose(), p(&[5, 5, 3, 1, 1]));
        assert_eq!(p(&[1]).transpose(), p(&[1]));
        assert_eq!(p(&[4]).transpose(), p(&[1, 1, 1, 1]));
        for parts in [vec![5, 3, 3, 2, 2], vec![7, 1], vec![2, 2, 2]] {
            let q = Partition::new(parts);
            assert_eq!(q.transpose().transpose(), q);
            assert_eq!(q.transpose().size(), q.size());
        }
    }

    #[test]
    fn dominance_examples() {
        assert!(dominance_leq(&p(&[2, 2]), &p(&[2, 2])).unwrap());
        assert!(dominance_leq(&p(&[2, 2]), &p(&[4])).unwrap());
        assert!(dominance_leq(&p(&[1, 1, 1, 1]), &p(&[2, 2])).unwrap());
        assert!(!dominance_leq(&p(&[4]), &p(&[2, 2])).unwrap());
        assert_eq!(dominance_leq(&p(&[1]), &p(&[2])), Err(KpError::SizeMismatch));
    }

    #[test]
    fn validity_rules() {
        assert!(p(&[2, 2]).is_valid_symplectic());
        assert!(!p(&[1]).is_valid_symplectic());
        assert!(p(&[3]).is_valid_orthogonal());
        assert!(!p(&[2]).is_valid_orthogonal());
    }

    #[test]
    fn orbit_dimension_examples() {
        assert_eq!(dim_sp_orbit(&p(&[1, 1, 1, 1])).unwrap(), 0);
        assert_eq!(dim_sp_orbit(&p(&[2, 2])).unwrap(), 6);
        assert_eq!(dim_o_orbit(&p(&[3])).unwrap(), 2);
        assert_eq!(dim_sp_orbit(&p(&[1])), Err(KpError::InvalidPartition));
    }

    #[test]
    fn dominance_monotone_dimensions() {
        // closure order within sp(6) and o(5)
        let sp: Vec<Partition> =
            [vec![6], vec![4, 2], vec![4, 1, 1], vec![2, 2, 2], vec![3, 3], vec![2, 2, 1, 1], vec![2, 1, 1, 1, 1], vec![1; 6]]
                .into_iter()
                .map(Partition::new)
                .filter(Partition::is_valid_symplectic)
                .collect();
        for x in &sp {
            for y in &sp {
                if dominance_leq(x, y).unwrap() {
                    assert!(dim_sp_orbit(x).unwrap() <= dim_sp_orbit(y).unwrap());
                }
            }
        }
    }

    fn d(text: &str) -> AbDiagram {
        text.parse().unwrap()
    }

    #[test]
    fn diagram_parse_display_roundtrip() {
        let di = d("bab\nbab\na");
        assert_eq!(format!("{di}"), "bab\nbab\na");
        assert_eq!(di.count(Letter::A), 3);
        assert_eq!(di.count(Letter::B), 4);
        assert!("ba b".parse::<AbDiagram>().is_err());
        assert!("aab".parse::<AbDiagram>().is_err());
    }

    #[test]
    fn strip_examples() {
        let di = d("bab\nbab\na");
        assert_eq!(di.strip(Letter::A), p(&[2, 2]));
        assert_eq!(di.strip(Letter::B), p(&[1, 1, 1]));
    }

    #[test]
    fn delta_examples() {
        assert_eq!(d("bab\nb\nb\na\na").delta_ab(), 4);
        assert_eq!(d("bab\nbab\na").delta_ab(), 0);
        assert_eq!(AbDiagram::new(vec![]).delta_ab(), 0);
    }

    #[test]
    fn validity_of_named_diagrams() {
        for text in ["bab\nbab\na", "ababa\nb\nb", "bab\nba\nab", "bab\nb\nb\na\na"] {
            assert!(d(text).is_valid_spo(), "{text}");
        }
        assert!(!d("ab").is_valid_spo());
        assert!(AbDiagram::new(vec![]).is_valid_spo());
    }

    #[test]
    fn orbit_dimensions_of_named_diagrams() {
        assert_eq!(d("bab\nbab\na").dim_spo_orbit().unwrap(), 9);
        assert_eq!(d("ababa\nb\nb").dim_spo_orbit().unwrap(), 9);
        assert_eq!(d("bab\nba\nab").dim_spo_orbit().unwrap(), 8);
        assert_eq!(d("bab\nb\nb\na\na").dim_spo_orbit().unwrap(), 6);
        assert_eq!(d("ab\nba\nb\nb\na").dim_spo_orbit().unwrap(), 5);
        assert_eq!(d("b\nb\nb\nb\na\na\na").dim_spo_orbit().unwrap(), 0);
    }

    #[test]
    fn k2_family_dimensions() {
        for n in [3usize, 4, 5] {
            // top stratum {aba, aba, a^(n-4)} needs n >= 4
            if n >= 4 {
                let top = format!("aba\naba\n{}", "a\n".repeat(n - 4));
                assert_eq!(d(&top).dim_spo_orbit().unwrap(), 2 * n - 3, "top n={n}");
            }
            let mid = format!("ab\nba\n{}", "a\n".repeat(n - 2));
            let bot = format!("b\nb\n{}", "a\n".repeat(n));
            assert_eq!(d(&mid).dim_spo_orbit().unwrap(), n, "mid n={n}");
            assert_eq!(d(&bot).dim_spo_orbit().unwrap(), 0, "bot n={n}");
        }
    }

    #[test]
    fn enumeration_small_counts() {
        // (N,k) = (3,4): the four named diagrams plus degenerate ones all
        // appear; every enumerated diagram is valid and has integer dim.
        let all = enumerate_valid_diagrams(3, 4);
        for named in ["bab\nbab\na", "ababa\nb\nb", "bab\nba\nab", "bab\nb\nb\na\na", "b\nb\nb\nb\na\na\na"] {
            assert!(all.contains(&d(named)), "{named} missing");
        }
        for di in &all {
            assert_eq!(di.count(Letter::A), 3);
            assert_eq!(di.count(Letter::B), 4);
            let _ = di.dim_spo_orbit().unwrap();
        }
    }

    #[test]
    fn canonical_pair_of_single_row() {
        let (i, j) = canonical_pair(&d("bab"));
        // b-diagram of i i* is (2): rank 1 nilpotent on C^2
        let rho = &i * &j;
        assert_eq!(rho.rank(), 1);
        assert!(rho.pow(2).is_zero());
        // a-diagram of i* i is (1): zero on C^1
        assert!((&j * &i).is_zero());
    }

    #[test]
    fn classify_fixture_framings() {
        let setting = fixtures::fixture_setting();
        let zero = Matrix::zeros(4, 3);
        assert_eq!(abdiagram_of(&zero, &setting).unwrap(), d("b\nb\nb\nb\na\na\na"));
        assert_eq!(abdiagram_of(&fixtures::x_i().i, &setting).unwrap(), d("bab\nbab\na"));
        assert_eq!(abdiagram_of(&fixtures::x_ii().i, &setting).unwrap(), d("ababa\nb\nb"));
        assert_eq!(abdiagram_of(&fixtures::x_iii().i, &setting).unwrap(), d("bab\nba\nab"));
        assert_eq!(abdiagram_of(&fixtures::x_iv().i, &setting).unwrap(), d("bab\nb\nb\na\na"));
    }

    #[test]
    fn classification_is_orbit_invariant() {
        let setting = fixtures::fixture_setting();
        let base = fixtures::x_iv().i;
        let want = abdiagram_of(&base, &setting).unwrap();
        for seed in 0..5u64 {
            let g = random_isometry(&setting.v, seed).unwrap();
            let h = random_isometry(&setting.w, seed + 50).unwrap();
            let moved = &(&g * &base) * &h.inverse().unwrap();
            assert_eq!(abdiagram_of(&moved, &setting).unwrap(), want);
        }
    }

    #[test]
    fn nilpotency_guard() {
        let setting = fixtures::fixture_setting();
        // i with i i* invertible-ish: take i = [I3 | extra col 0]^T scaled
        let mut i = Matrix::zeros(4, 3);
        i[(0, 0)] = Scalar::one();
        i[(1, 1)] = Scalar::one();
        i[(2, 2)] = Scalar::one();
        match abdiagram_of(&i, &setting) {
            Err(KpError::NotNilpotent) => {}
            other => {
                // some such i may still be nilpotent; accept a valid diagram
                other.unwrap();
            }
        }
    }

    #[test]
    fn strata_dimension_table() {
        assert_eq!(strata_dimension(3, 4, 2, Flavor::SOData), None);
        assert_eq!(strata_dimension(3, 4, 4, Flavor::SOData), Some(4));
        assert_eq!(strata_dimension(3, 4, 0, Flavor::SOData), Some(4));
        assert_eq!(strata_dimension(5, 6, 2, Flavor::SOData), Some(10));
        for (n, k) in [(2usize, 2usize), (4, 3), (3, 5)] {
            assert_eq!(strata_dimension(n, k, k, Flavor::SpData), Some(k * (n + 2)));
        }
    }
}
