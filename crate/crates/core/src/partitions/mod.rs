//! Partitions, strict partitions and compositions, plus the T-extension
//! machinery used to multiply alternants by complete homogeneous
//! polynomials in nested variable sets.

mod extension;

pub use extension::{
    enumerate_extensions, from_paper_order, iota, is_good_extension, verify_hmult_lemma,
    LemmaReport, SignedPair, TExtension,
};

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PartitionError {
    #[error("parts are not weakly decreasing: {0:?}")]
    NotDecreasing(Vec<u32>),
    #[error("parts are not strictly decreasing and positive: {0:?}")]
    NotStrict(Vec<u32>),
    #[error("partition {parts:?} has more than {n} parts")]
    TooManyParts { parts: Vec<u32>, n: usize },
    #[error("cannot parse partition {0:?}")]
    Parse(String),
    #[error("increments and column bounds differ in length ({0} vs {1})")]
    LengthMismatch(usize, usize),
    #[error("column bounds must satisfy n >= c_l >= ... >= c_1, got {0:?} with n = {1}")]
    BadColumns(Vec<usize>, usize),
    #[error("iota is only defined on bad extensions")]
    GoodExtension,
}

/// A weakly decreasing list of positive integers. Trailing zeros are never
/// stored; use [`Partition::padded`] for a fixed-length view.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default, Serialize, Deserialize)]
#[serde(try_from = "Vec<u32>", into = "Vec<u32>")]
pub struct Partition {
    parts: Vec<u32>,
}

impl Partition {
    pub fn new(mut parts: Vec<u32>) -> Result<Self, PartitionError> {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(PartitionError::NotDecreasing(parts));
        }
        Ok(Partition { parts })
    }

    pub fn empty() -> Self {
        Partition::default()
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    /// Number of nonzero parts.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn size(&self) -> u32 {
        self.parts.iter().sum()
    }

    /// Largest part, 0 for the empty partition.
    pub fn largest(&self) -> u32 {
        self.parts.first().copied().unwrap_or(0)
    }

    pub fn part(&self, i: usize) -> u32 {
        self.parts.get(i).copied().unwrap_or(0)
    }

    pub fn is_strict(&self) -> bool {
        self.parts.windows(2).all(|w| w[0] > w[1])
    }

    pub fn conjugate(&self) -> Partition {
        let parts = (1..=self.largest())
            .map(|j| self.parts.iter().filter(|&&p| p >= j).count() as u32)
            .collect();
        Partition { parts }
    }

    /// Column heights indexed by column label: entry `j - 1` is `c_j`, the
    /// height of the column labeled `j`. Labels run `l, ..., 1` from left to
    /// right, so `c_l` is the leftmost (tallest) column.
    pub fn column_heights(&self) -> Vec<usize> {
        let mut c: Vec<usize> = self.conjugate().parts.iter().map(|&p| p as usize).collect();
        c.reverse();
        c
    }

    /// The parts padded with zeros to length `n`.
    pub fn padded(&self, n: usize) -> Result<Vec<u32>, PartitionError> {
        if self.parts.len() > n {
            return Err(PartitionError::TooManyParts {
                parts: self.parts.clone(),
                n,
            });
        }
        let mut v = self.parts.clone();
        v.resize(n, 0);
        Ok(v)
    }

    /// Diagram containment `other ⊆ self`.
    pub fn contains(&self, other: &Partition) -> bool {
        other.len() <= self.len() && other.parts.iter().zip(&self.parts).all(|(a, b)| a <= b)
    }

    /// All partitions of `size` with parts at most `max_part` and at most
    /// `max_len` parts, in reverse lexicographic order.
    pub fn all_of_size(size: u32, max_part: u32, max_len: usize) -> Vec<Partition> {
        fn go(rest: u32, cap: u32, slots: usize, cur: &mut Vec<u32>, out: &mut Vec<Partition>) {
            if rest == 0 {
                out.push(Partition { parts: cur.clone() });
                return;
            }
            if slots == 0 {
                return;
            }
            for p in (1..=cap.min(rest)).rev() {
                cur.push(p);
                go(rest - p, p, slots - 1, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        go(size, max_part, max_len, &mut Vec::new(), &mut out);
        out
    }

    /// All partitions contained in `self`, including the empty one.
    pub fn subpartitions(&self) -> Vec<Partition> {
        fn go(bound: &[u32], i: usize, cap: u32, cur: &mut Vec<u32>, out: &mut Vec<Partition>) {
            if i == bound.len() {
                out.push(Partition::new(cur.clone()).expect("built decreasing"));
                return;
            }
            for p in 0..=bound[i].min(cap) {
                cur.push(p);
                go(bound, i + 1, p, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        go(&self.parts, 0, self.largest(), &mut Vec::new(), &mut out);
        out.sort();
        out.dedup();
        out
    }
}

impl TryFrom<Vec<u32>> for Partition {
    type Error = PartitionError;
    fn try_from(v: Vec<u32>) -> Result<Self, Self::Error> {
        Partition::new(v)
    }
}

impl From<Partition> for Vec<u32> {
    fn from(p: Partition) -> Vec<u32> {
        p.parts
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.parts.iter().map(u32::to_string).collect();
        write!(f, "({})", s.join(","))
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Partition{}", self)
    }
}

/// Parses `2,1`, `(2,1)` or the empty string / `()` / `0` for the empty
/// partition.
impl FromStr for Partition {
    type Err = PartitionError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let inner = s
            .trim()
            .trim_start_matches('(')
            .trim_end_matches(')')
            .trim();
        if inner.is_empty() {
            return Ok(Partition::empty());
        }
        let parts = inner
            .split(',')
            .map(|w| w.trim().parse::<u32>())
            .collect::<Result<Vec<_>, _>>()
            .map_err(|_| PartitionError::Parse(s.to_string()))?;
        Partition::new(parts)
    }
}

/// A partition with strictly decreasing parts.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default, Serialize, Deserialize)]
#[serde(try_from = "Vec<u32>", into = "Vec<u32>")]
pub struct StrictPartition(Partition);

impl StrictPartition {
    pub fn new(parts: Vec<u32>) -> Result<Self, PartitionError> {
        if parts.contains(&0) || parts.windows(2).any(|w| w[0] <= w[1]) {
            return Err(PartitionError::NotStrict(parts));
        }
        Ok(StrictPartition(Partition { parts }))
    }

    pub fn as_partition(&self) -> &Partition {
        &self.0
    }

    pub fn parts(&self) -> &[u32] {
        self.0.parts()
    }

    /// Number of parts, `m`.
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn size(&self) -> u32 {
        self.0.size()
    }

    pub fn largest(&self) -> u32 {
        self.0.largest()
    }

    /// Number of boxes on each diagonal of the shifted diagram, indexed by
    /// diagonal label: entry `j - 1` counts the boxes on diagonal `j`, with
    /// labels `l, ..., 1` from left to right.
    pub fn diagonal_sizes(&self) -> Vec<usize> {
        let l = self.largest() as usize;
        let mut d = vec![0; l];
        for &p in self.parts() {
            // row i (0-based) covers label positions 0..p, counted from the left.
            for pos in 0..p as usize {
                d[l - 1 - pos] += 1;
            }
        }
        d
    }
}

impl TryFrom<Partition> for StrictPartition {
    type Error = PartitionError;
    fn try_from(p: Partition) -> Result<Self, Self::Error> {
        StrictPartition::new(p.parts)
    }
}

impl TryFrom<Vec<u32>> for StrictPartition {
    type Error = PartitionError;
    fn try_from(v: Vec<u32>) -> Result<Self, Self::Error> {
        StrictPartition::new(v)
    }
}

impl From<StrictPartition> for Vec<u32> {
    fn from(p: StrictPartition) -> Vec<u32> {
        p.0.parts
    }
}

impl fmt::Display for StrictPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

impl fmt::Debug for StrictPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "StrictPartition{}", self.0)
    }
}

/// A fixed-length list of nonnegative integers.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Serialize, Deserialize)]
pub struct Composition(pub Vec<u32>);

impl Composition {
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn size(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn is_partition(&self) -> bool {
        self.0.windows(2).all(|w| w[0] >= w[1])
    }

    /// Entrywise `other ⊆ self`.
    pub fn contains(&self, other: &Composition) -> bool {
        self.len() == other.len() && self.0.iter().zip(&other.0).all(|(a, b)| a >= b)
    }

    pub fn add(&self, other: &Composition) -> Composition {
        Composition(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }
}

/// The staircase `(k-1, k-2, ..., 0)` as a length-`k` composition.
pub fn staircase(k: usize) -> Composition {
    Composition((0..k as u32).rev().collect())
}
