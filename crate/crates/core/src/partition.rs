//! Integer partitions, their canonical enumeration order, hook lengths and
//! the partition function p(n).
//!
//! Partitions of `n` are always produced in reverse-lexicographic order of
//! their part sequences: `(n)` first and `(1^n)` last. Position in that order
//! is the partition's *index*, which [`PartitionIndexRange`] uses to shard
//! exhaustive passes across workers.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

/// A weakly decreasing sequence of positive integers.
///
/// The empty sequence is the unique partition of 0.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition {
    parts: Vec<usize>,
    size: usize,
}

impl Partition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.contains(&0) || parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidPartition);
        }
        Ok(Self::from_parts_unchecked(parts))
    }

    /// Builds a partition from parts in any order, dropping zeros.
    pub fn from_unsorted(mut parts: Vec<usize>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Self::from_parts_unchecked(parts)
    }

    pub(crate) fn from_parts_unchecked(parts: Vec<usize>) -> Self {
        debug_assert!(parts.windows(2).all(|w| w[0] >= w[1]));
        debug_assert!(parts.last().is_none_or(|&p| p > 0));
        let size = parts.iter().sum();
        Self { parts, size }
    }

    pub fn empty() -> Self {
        Self::default()
    }

    /// The one-row partition `(n)`, or the empty partition for `n = 0`.
    pub fn row(n: usize) -> Self {
        if n == 0 {
            Self::empty()
        } else {
            Self::from_parts_unchecked(vec![n])
        }
    }

    /// The one-column partition `(1^n)`.
    pub fn column(n: usize) -> Self {
        Self::from_parts_unchecked(vec![1; n])
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn into_parts(self) -> Vec<usize> {
        self.parts
    }

    /// The number being partitioned.
    pub fn size(&self) -> usize {
        self.size
    }

    /// Number of (non-zero) parts.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Part `i` (0-indexed), with zero past the last part.
    pub fn part(&self, i: usize) -> usize {
        self.parts.get(i).copied().unwrap_or(0)
    }

    /// The transpose partition.
    pub fn conjugate(&self) -> Partition {
        let width = self.part(0);
        let mut parts = Vec::with_capacity(width);
        for j in 0..width {
            parts.push(self.parts.iter().take_while(|&&p| p > j).count());
        }
        Self::from_parts_unchecked(parts)
    }

    /// Hook length of every cell: arm + leg + 1.
    pub fn hook_lengths(&self) -> HookMultiset {
        let conj = self.conjugate();
        let mut hooks = Vec::with_capacity(self.size);
        for (i, &row) in self.parts.iter().enumerate() {
            for j in 0..row {
                hooks.push((row - j) + (conj.parts[j] - i) - 1);
            }
        }
        HookMultiset::new(hooks)
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{p}")?;
        }
        f.write_str(")")
    }
}

/// Parses comma-separated decreasing parts, e.g. `3,1`. The empty string is
/// the empty partition.
impl FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() {
            return Ok(Self::empty());
        }
        let parts = s
            .split(',')
            .map(|p| p.trim().parse::<usize>().map_err(|_| Error::InvalidPartition))
            .collect::<Result<Vec<_>>>()?;
        Self::new(parts)
    }
}

/// Hook lengths of a Young diagram, one per cell, kept sorted largest first so
/// that equality is multiset equality.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct HookMultiset(Vec<usize>);

impl HookMultiset {
    fn new(mut hooks: Vec<usize>) -> Self {
        hooks.sort_unstable_by(|a, b| b.cmp(a));
        Self(hooks)
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn largest(&self) -> Option<usize> {
        self.0.first().copied()
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.iter().copied()
    }

    pub fn product(&self) -> BigUint {
        self.0
            .iter()
            .fold(BigUint::one(), |acc, &h| acc * BigUint::from(h))
    }
}

/// Number of partitions of `m` with every part at most `k`, for all
/// `m, k <= n`. Used to unrank positions in the canonical order.
struct BoundedCounts {
    n: usize,
    // counts[m * (n + 1) + k]
    counts: Vec<u64>,
}

impl BoundedCounts {
    fn new(n: usize) -> Result<Self> {
        let w = n + 1;
        let mut counts = vec![0u64; w * w];
        counts[..w].fill(1);
        for m in 1..=n {
            for k in 1..=n {
                let without_k = counts[m * w + k - 1];
                let with_k = if k <= m { counts[(m - k) * w + k] } else { 0 };
                counts[m * w + k] = without_k
                    .checked_add(with_k)
                    .ok_or(Error::IndexOverflow(n))?;
            }
        }
        Ok(Self { n, counts })
    }

    fn get(&self, m: usize, k: usize) -> u64 {
        let k = k.min(m);
        self.counts[m * (self.n + 1) + k]
    }

    fn total(&self) -> u64 {
        self.get(self.n, self.n)
    }

    /// The partition at position `index` in reverse-lexicographic order.
    fn unrank(&self, mut index: u64) -> Vec<usize> {
        let mut parts = Vec::new();
        let mut remaining = self.n;
        let mut bound = self.n;
        while remaining > 0 {
            let mut part = bound.min(remaining);
            loop {
                let below = self.get(remaining - part, part);
                if index < below {
                    break;
                }
                index -= below;
                part -= 1;
            }
            parts.push(part);
            remaining -= part;
            bound = part;
        }
        parts
    }
}

/// A contiguous slice `[start, end)` of the canonical enumeration of the
/// partitions of `n`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct PartitionIndexRange {
    n: usize,
    start: u64,
    end: u64,
}

impl PartitionIndexRange {
    pub fn new(n: usize, start: u64, end: u64) -> Result<Self> {
        let total = partition_count_u64(n)?;
        if start > end || end > total {
            return Err(Error::InvalidRange { start, end, total });
        }
        Ok(Self { n, start, end })
    }

    /// Every partition of `n`.
    pub fn full(n: usize) -> Result<Self> {
        let total = partition_count_u64(n)?;
        Ok(Self { n, start: 0, end: total })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn start(&self) -> u64 {
        self.start
    }

    pub fn end(&self) -> u64 {
        self.end
    }

    pub fn len(&self) -> u64 {
        self.end - self.start
    }

    pub fn is_empty(&self) -> bool {
        self.start == self.end
    }

    /// Splits into at most `parts` contiguous, non-empty ranges of nearly
    /// equal length that cover `self` in order.
    pub fn split(&self, parts: usize) -> Vec<PartitionIndexRange> {
        let parts = (parts.max(1) as u64).min(self.len().max(1));
        let base = self.len() / parts;
        let extra = self.len() % parts;
        let mut out = Vec::with_capacity(parts as usize);
        let mut start = self.start;
        for i in 0..parts {
            let end = start + base + u64::from(i < extra);
            out.push(PartitionIndexRange {
                n: self.n,
                start,
                end,
            });
            start = end;
        }
        out
    }

    pub fn iter(&self) -> Partitions {
        Partitions::range(*self)
    }
}

/// Number of partitions of `n` as a machine integer, or an error when it
/// exceeds `u64`.
pub fn partition_count_u64(n: usize) -> Result<u64> {
    Ok(BoundedCounts::new(n)?.total())
}

/// Iterator over partitions of `n` in reverse-lexicographic order.
#[derive(Clone, Debug)]
pub struct Partitions {
    current: Option<Vec<usize>>,
    remaining: Option<u64>,
}

impl Partitions {
    pub fn new(n: usize) -> Self {
        Self {
            current: Some(if n == 0 { Vec::new() } else { vec![n] }),
            remaining: None,
        }
    }

    /// Starts at `range.start()` without walking the preceding partitions.
    pub fn range(range: PartitionIndexRange) -> Self {
        let current = if range.is_empty() {
            None
        } else {
            // `range` was validated against the same table, so this cannot fail.
            let counts = BoundedCounts::new(range.n).expect("validated range");
            Some(counts.unrank(range.start))
        };
        Self {
            current,
            remaining: Some(range.len()),
        }
    }

    fn advance(parts: &mut Vec<usize>) -> bool {
        let Some(i) = parts.iter().rposition(|&p| p > 1) else {
            return false;
        };
        let mut spill = parts.len() - i;
        let cap = parts[i] - 1;
        parts[i] = cap;
        parts.truncate(i + 1);
        while spill > 0 {
            let p = spill.min(cap);
            parts.push(p);
            spill -= p;
        }
        true
    }
}

impl Iterator for Partitions {
    type Item = Partition;

    fn next(&mut self) -> Option<Partition> {
        if let Some(left) = self.remaining.as_mut() {
            if *left == 0 {
                return None;
            }
            *left -= 1;
        }
        let current = self.current.as_mut()?;
        let out = Partition::from_parts_unchecked(current.clone());
        if !Self::advance(current) {
            self.current = None;
        }
        Some(out)
    }
}

/// Every partition of `n`, `(n)` first and `(1^n)` last.
pub fn enumerate_partitions(n: usize) -> Partitions {
    Partitions::new(n)
}

/// Memoized p(n) table filled by Euler's pentagonal recurrence.
#[derive(Clone, Debug)]
pub struct PartitionCounter {
    table: Vec<BigUint>,
}

impl Default for PartitionCounter {
    fn default() -> Self {
        Self::new()
    }
}

impl PartitionCounter {
    pub fn new() -> Self {
        Self {
            table: vec![BigUint::one()],
        }
    }

    pub fn count(&mut self, n: usize) -> &BigUint {
        while self.table.len() <= n {
            let i = self.table.len();
            // p(i) = sum over k >= 1 of (-1)^(k+1) [p(i - k(3k-1)/2) + p(i - k(3k+1)/2)]
            let mut plus = BigUint::zero();
            let mut minus = BigUint::zero();
            for k in 1.. {
                let g1 = k * (3 * k - 1) / 2;
                if g1 > i {
                    break;
                }
                let acc = if k % 2 == 1 { &mut plus } else { &mut minus };
                *acc += &self.table[i - g1];
                let g2 = k * (3 * k + 1) / 2;
                if g2 <= i {
                    *acc += &self.table[i - g2];
                }
            }
            self.table.push(plus - minus);
        }
        &self.table[n]
    }
}

/// p(n), the number of partitions of `n`.
pub fn partition_count(n: usize) -> BigUint {
    PartitionCounter::new().count(n).clone()
}
