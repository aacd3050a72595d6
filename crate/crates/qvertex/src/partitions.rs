//! Integer partitions, multiplicity encodings and skew-shape statistics.

use std::cmp::Ordering;
use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PartitionError {
    #[error("parts must be weakly decreasing: {0:?}")]
    NotWeaklyDecreasing(Vec<u32>),
    #[error("index bound {bound} is smaller than the largest part {largest}")]
    IndexTooSmall { bound: usize, largest: u32 },
    #[error("{mu} does not interlace {lambda}")]
    NotHorizontalStrip { lambda: Partition, mu: Partition },
    #[error("cannot parse partition {0:?}")]
    Parse(String),
}

/// A weakly decreasing sequence of positive integers.
#[derive(Clone, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(try_from = "Vec<u32>", into = "Vec<u32>")]
pub struct Partition {
    parts: Vec<u32>,
}

impl Partition {
    /// Trailing zeros are dropped, so `(2,0)` and `(2)` are the same partition.
    pub fn new(mut parts: Vec<u32>) -> Result<Partition, PartitionError> {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if parts.windows(2).any(|w| w[0] < w[1]) || parts.contains(&0) {
            return Err(PartitionError::NotWeaklyDecreasing(parts));
        }
        Ok(Partition { parts })
    }

    pub fn empty() -> Partition {
        Partition::default()
    }

    /// Builds the partition with `m_i = mults[i-1]` parts equal to `i`.
    pub fn from_multiplicities(mults: &[u32]) -> Partition {
        let mut parts = Vec::new();
        for (i, &m) in mults.iter().enumerate().rev() {
            parts.extend(std::iter::repeat_n(i as u32 + 1, m as usize));
        }
        Partition { parts }
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// `|λ|`
    pub fn size(&self) -> u32 {
        self.parts.iter().sum()
    }

    /// `ℓ(λ)`
    pub fn length(&self) -> usize {
        self.parts.len()
    }

    /// `λ_i` with 1-based `i`; zero past the end.
    pub fn part(&self, i: usize) -> u32 {
        if i == 0 {
            return 0;
        }
        self.parts.get(i - 1).copied().unwrap_or(0)
    }

    /// `λ_1`, zero for the empty partition.
    pub fn largest(&self) -> u32 {
        self.part(1)
    }

    pub fn conjugate(&self) -> Partition {
        let width = self.largest() as usize;
        let parts = (1..=width as u32)
            .map(|i| self.parts.iter().filter(|&&p| p >= i).count() as u32)
            .collect();
        Partition { parts }
    }

    /// `m_i(λ)`, the number of parts equal to `i`.
    pub fn multiplicity(&self, i: u32) -> u32 {
        self.parts.iter().filter(|&&p| p == i).count() as u32
    }

    /// `(m_1(λ), ..., m_N(λ))` with `N = max_index`.
    pub fn multiplicities(&self, max_index: usize) -> Result<Vec<u32>, PartitionError> {
        if (self.largest() as usize) > max_index {
            return Err(PartitionError::IndexTooSmall { bound: max_index, largest: self.largest() });
        }
        let mut m = vec![0; max_index];
        for &p in &self.parts {
            m[p as usize - 1] += 1;
        }
        Ok(m)
    }

    /// Young-diagram containment `other ⊆ self`.
    pub fn contains(&self, other: &Partition) -> bool {
        other.length() <= self.length() && other.parts.iter().zip(&self.parts).all(|(a, b)| a <= b)
    }

    /// Interlacing `μ ≺ λ`: `λ_i ≥ μ_i ≥ λ_{i+1}` for all `i`.
    pub fn interlaces(&self, mu: &Partition) -> bool {
        let n = self.length().max(mu.length());
        (1..=n).all(|i| self.part(i) >= mu.part(i) && mu.part(i) >= self.part(i + 1))
    }

    /// `λ̃ = (λ_2, λ_3, ...)`.
    pub fn tail(&self) -> Partition {
        Partition { parts: self.parts.iter().skip(1).copied().collect() }
    }

    /// Parts padded with zeros to `n` entries (`None` if the length exceeds `n`).
    pub fn padded(&self, n: usize) -> Option<Vec<u32>> {
        if self.length() > n {
            return None;
        }
        let mut v = self.parts.clone();
        v.resize(n, 0);
        Some(v)
    }

    /// Graded lexicographic comparison: by size, then by parts.
    pub fn graded_cmp(&self, other: &Partition) -> Ordering {
        self.size().cmp(&other.size()).then_with(|| self.parts.cmp(&other.parts))
    }
}

impl Ord for Partition {
    fn cmp(&self, other: &Partition) -> Ordering {
        self.graded_cmp(other)
    }
}

impl PartialOrd for Partition {
    fn partial_cmp(&self, other: &Partition) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl TryFrom<Vec<u32>> for Partition {
    type Error = PartitionError;
    fn try_from(v: Vec<u32>) -> Result<Partition, PartitionError> {
        Partition::new(v)
    }
}

impl From<Partition> for Vec<u32> {
    fn from(p: Partition) -> Vec<u32> {
        p.parts
    }
}

impl FromStr for Partition {
    type Err = PartitionError;

    /// Comma-separated parts, e.g. `"2,1"`; `"0"` or `""` is the empty partition.
    fn from_str(s: &str) -> Result<Partition, PartitionError> {
        let s = s.trim();
        let s = s.strip_prefix('(').and_then(|t| t.strip_suffix(')')).unwrap_or(s);
        if s.is_empty() {
            return Ok(Partition::empty());
        }
        let parts = s
            .split(',')
            .map(|t| t.trim().parse::<u32>())
            .collect::<Result<Vec<u32>, _>>()
            .map_err(|_| PartitionError::Parse(s.to_string()))?;
        Partition::new(parts).map_err(|_| PartitionError::Parse(s.to_string()))
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.parts.is_empty() {
            return write!(f, "0");
        }
        let s: Vec<String> = self.parts.iter().map(|p| p.to_string()).collect();
        write!(f, "{}", s.join(","))
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({self})")
    }
}

/// Number of nonempty rows of `λ/μ`.
pub fn skew_rows(lambda: &Partition, mu: &Partition) -> u32 {
    (1..=lambda.length()).filter(|&i| lambda.part(i) > mu.part(i)).count() as u32
}

/// Number of nonempty columns of `λ/μ`.
pub fn skew_columns(lambda: &Partition, mu: &Partition) -> u32 {
    skew_rows(&lambda.conjugate(), &mu.conjugate())
}

/// Whether column `i` (1-based) of `λ/μ` contains a box.
pub fn skew_column_nonempty(lambda: &Partition, mu: &Partition, i: u32) -> bool {
    (1..=lambda.length()).any(|r| mu.part(r) < i && i <= lambda.part(r))
}

/// Classification of the columns `1..=λ_1` of a horizontal strip by the
/// emptiness of columns `i` and `i+1`.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct SkewColumnStats {
    /// columns `i` and `i+1` both nonempty
    pub c_pp: BTreeSet<u32>,
    /// column `i` nonempty, `i+1` empty
    pub c_pm: BTreeSet<u32>,
    /// column `i` empty, `i+1` nonempty
    pub c_mp: BTreeSet<u32>,
    /// both empty and `m_i(λ) ≠ 0`
    pub c_mm: BTreeSet<u32>,
}

pub fn column_stats(lambda: &Partition, mu: &Partition) -> Result<SkewColumnStats, PartitionError> {
    if !lambda.interlaces(mu) {
        return Err(PartitionError::NotHorizontalStrip { lambda: lambda.clone(), mu: mu.clone() });
    }
    // in a horizontal strip column i holds a box iff some row has μ_r < i ≤ λ_r
    let width = lambda.largest();
    let occupied: Vec<bool> = (1..=width + 1).map(|i| skew_column_nonempty(lambda, mu, i)).collect();
    let mut s = SkewColumnStats::default();
    for i in 1..=width {
        let here = occupied[i as usize - 1];
        let next = occupied[i as usize];
        match (here, next) {
            (true, true) => s.c_pp.insert(i),
            (true, false) => s.c_pm.insert(i),
            (false, true) => s.c_mp.insert(i),
            (false, false) => lambda.multiplicity(i) != 0 && s.c_mm.insert(i),
        };
    }
    Ok(s)
}

/// All `κ ⊆ bound`, in graded lexicographic order.
pub fn sub_partitions(bound: &Partition) -> Vec<Partition> {
    fn rec(bound: &[u32], row: usize, cap: u32, cur: &mut Vec<u32>, out: &mut Vec<Partition>) {
        if row == bound.len() {
            out.push(Partition::new(cur.clone()).expect("decreasing by construction"));
            return;
        }
        for p in 0..=cap.min(bound[row]) {
            cur.push(p);
            rec(bound, row + 1, p, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(bound.parts(), 0, bound.largest(), &mut Vec::new(), &mut out);
    out.sort();
    out.dedup();
    out
}

/// All partitions fitting in a `width × height` box (at most `height` parts, each at most `width`).
pub fn partitions_in_box(width: u32, height: usize) -> Vec<Partition> {
    sub_partitions(&Partition { parts: vec![width; height] }.normalized())
}

/// All partitions of `n`, in lexicographic order.
pub fn partitions_of(n: u32) -> Vec<Partition> {
    partitions_in_box(n, n as usize).into_iter().filter(|p| p.size() == n).collect()
}

/// All `κ ⊇ base` inside the `max_width × max_height` box with
/// `|κ| ≤ |base| + max_extra`.
pub fn super_partitions(base: &Partition, max_extra: u32, max_width: u32, max_height: usize) -> Vec<Partition> {
    let limit = base.size() + max_extra;
    partitions_in_box(max_width, max_height)
        .into_iter()
        .filter(|k| k.contains(base) && k.size() <= limit)
        .collect()
}

impl Partition {
    fn normalized(mut self) -> Partition {
        while self.parts.last() == Some(&0) {
            self.parts.pop();
        }
        self
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    #[test]
    fn conjugates() {
        assert_eq!(p("6,5,3,1,1").conjugate(), p("5,3,3,2,2,1"));
        assert_eq!(p("6,5,3,1,1").conjugate().multiplicities(5).unwrap(), vec![1, 2, 2, 0, 1]);
        assert_eq!(Partition::empty().conjugate(), Partition::empty());
        assert_eq!(p("2,2").conjugate(), p("2,2"));
    }

    #[test]
    fn multiplicity_vectors() {
        assert_eq!(p("4,4,1,1").multiplicities(4).unwrap(), vec![2, 0, 0, 2]);
        assert_eq!(Partition::empty().multiplicities(3).unwrap(), vec![0, 0, 0]);
        assert_eq!(p("3,1").multiplicities(3).unwrap(), vec![1, 0, 1]);
        assert!(matches!(p("3,1").multiplicities(2), Err(PartitionError::IndexTooSmall { .. })));
        assert_eq!(Partition::from_multiplicities(&[2, 0, 0, 2]), p("4,4,1,1"));
    }

    #[test]
    fn parse_and_print() {
        assert_eq!(p("2,0").to_string(), "2");
        assert_eq!(p("0").to_string(), "0");
        assert_eq!(p("(3,1)"), p("3,1"));
        assert!("1,2".parse::<Partition>().is_err());
        assert!("a".parse::<Partition>().is_err());
    }

    #[test]
    fn enumeration() {
        let subs: Vec<String> = sub_partitions(&p("2,2")).iter().map(|k| k.to_string()).collect();
        assert_eq!(subs, ["0", "1", "1,1", "2", "2,1", "2,2"]);
        assert_eq!(sub_partitions(&Partition::empty()), vec![Partition::empty()]);
        assert_eq!(sub_partitions(&p("1")).len(), 2);
        let sup = super_partitions(&Partition::empty(), 1, 2, 2);
        assert_eq!(sup, vec![Partition::empty(), p("1")]);
        let sup = super_partitions(&p("1"), 1, 2, 2);
        assert_eq!(sup, vec![p("1"), p("1,1"), p("2")]);
        assert_eq!(super_partitions(&p("2,2"), 0, 2, 2), vec![p("2,2")]);
        assert_eq!(partitions_of(5).len(), 7);
    }

    #[test]
    fn stats_examples() {
        let s = column_stats(&p("1"), &Partition::empty()).unwrap();
        assert_eq!(s.c_pm, BTreeSet::from([1]));
        assert!(s.c_pp.is_empty() && s.c_mp.is_empty() && s.c_mm.is_empty());
        let s = column_stats(&p("2,1"), &p("2,1")).unwrap();
        assert_eq!(s.c_mm, BTreeSet::from([1, 2]));
        let s = column_stats(&p("2,1"), &p("1")).unwrap();
        // boxes at (1,2) and (2,1): both columns 1 and 2 are occupied
        assert_eq!(s.c_pp, BTreeSet::from([1]));
        assert_eq!(s.c_pm, BTreeSet::from([2]));
        assert!(column_stats(&p("2,2"), &Partition::empty()).is_err());
    }

    fn lattice_paths(bound: &[u32]) -> usize {
        // count decreasing sequences κ_i ≤ bound_i directly
        fn rec(bound: &[u32], cap: u32) -> usize {
            match bound.split_first() {
                None => 1,
                Some((&b, rest)) => (0..=cap.min(b)).map(|k| rec(rest, k)).sum(),
            }
        }
        rec(bound, bound.first().copied().unwrap_or(0))
    }

    fn arb_partition(max_size: u32) -> impl Strategy<Value = Partition> {
        proptest::collection::vec(1u32..=6, 0..6).prop_map(move |mut v| {
            v.sort_unstable_by(|a, b| b.cmp(a));
            let mut total = 0;
            v.retain(|&x| {
                total += x;
                total <= max_size
            });
            Partition::new(v).unwrap()
        })
    }

    proptest! {
        #[test]
        fn conjugation_is_involutive(lam in arb_partition(20)) {
            prop_assert_eq!(lam.conjugate().conjugate(), lam.clone());
            prop_assert_eq!(lam.conjugate().size(), lam.size());
        }

        #[test]
        fn multiplicity_sums(lam in arb_partition(20)) {
            let m = lam.multiplicities(lam.largest().max(1) as usize).unwrap();
            let weighted: u32 = m.iter().enumerate().map(|(i, k)| (i as u32 + 1) * k).sum();
            prop_assert_eq!(weighted, lam.size());
            prop_assert_eq!(m.iter().sum::<u32>() as usize, lam.length());
        }

        #[test]
        fn sub_partition_count(lam in arb_partition(12)) {
            prop_assert_eq!(sub_partitions(&lam).len(), lattice_paths(lam.parts()));
        }

        #[test]
        fn strip_stats_partition_the_columns(lam in arb_partition(14), seed in proptest::collection::vec(0u32..6, 6)) {
            // choose μ_i in [λ_{i+1}, λ_i]
            let parts: Vec<u32> = (1..=lam.length()).map(|i| {
                let lo = lam.part(i + 1);
                let hi = lam.part(i);
                lo + seed[(i - 1) % seed.len()] % (hi - lo + 1)
            }).collect();
            let mu = Partition::new(parts).unwrap();
            prop_assert!(lam.interlaces(&mu));
            let s = column_stats(&lam, &mu).unwrap();
            let sets = [&s.c_pp, &s.c_pm, &s.c_mp, &s.c_mm];
            for (a, x) in sets.iter().enumerate() {
                for y in sets.iter().skip(a + 1) {
                    prop_assert!(x.is_disjoint(y));
                }
            }
            prop_assert_eq!((s.c_pm.len() + s.c_pp.len()) as u32, skew_columns(&lam, &mu));
            prop_assert_eq!(skew_columns(&lam, &mu), lam.size() - mu.size());
            // literal comprehension of the four definitions
            for i in 1..=lam.largest() {
                let a = skew_column_nonempty(&lam, &mu, i);
                let b = skew_column_nonempty(&lam, &mu, i + 1);
                prop_assert_eq!(s.c_pp.contains(&i), a && b);
                prop_assert_eq!(s.c_pm.contains(&i), a && !b);
                prop_assert_eq!(s.c_mp.contains(&i), !a && b);
                prop_assert_eq!(s.c_mm.contains(&i), !a && !b && lam.multiplicity(i) != 0);
            }
        }
    }
}
