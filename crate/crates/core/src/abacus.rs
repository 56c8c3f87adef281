//! Beta-sets on the q-abacus: q-cores, q-quotients and q-core towers.
//!
//! Quotient convention: the beta-set uses the least multiple of `q` beads
//! that is at least the number of parts, and runner `r` holds the beads at
//! positions congruent to `r` mod `q`. Adding `q` more beads shifts every
//! runner by one bead, so any multiple of `q` gives the same quotient; the
//! core, quotient and tower operations below all rely on this.

use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt::{self, Write};

use crate::error::{Error, Result};
use crate::partition::{enumerate_partitions, Partition};

/// Strictly decreasing bead positions encoding a partition.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BetaSet {
    beads: Vec<usize>,
}

impl BetaSet {
    pub fn new(beads: Vec<usize>) -> Result<Self> {
        if beads.windows(2).any(|w| w[0] <= w[1]) {
            return Err(Error::InvalidBetaSet);
        }
        Ok(Self { beads })
    }

    /// Beta-set of `partition` with `bead_count` beads:
    /// `beads[i] = λ_i + bead_count − i` (1-indexed).
    pub fn of(partition: &Partition, bead_count: usize) -> Result<Self> {
        if bead_count < partition.len() {
            return Err(Error::InsufficientBeads {
                parts: partition.len(),
                beads: bead_count,
            });
        }
        let beads = (0..bead_count)
            .map(|i| partition.part(i) + bead_count - 1 - i)
            .collect();
        Ok(Self { beads })
    }

    pub fn beads(&self) -> &[usize] {
        &self.beads
    }

    pub fn bead_count(&self) -> usize {
        self.beads.len()
    }

    pub fn to_partition(&self) -> Partition {
        let count = self.beads.len();
        let parts = self
            .beads
            .iter()
            .enumerate()
            .map(|(i, &b)| b - (count - 1 - i))
            .take_while(|&p| p > 0)
            .collect();
        Partition::from_parts_unchecked(parts)
    }
}

/// Shorthand for [`BetaSet::of`].
pub fn beta_set(partition: &Partition, bead_count: usize) -> Result<BetaSet> {
    BetaSet::of(partition, bead_count)
}

fn check_modulus(q: usize) -> Result<()> {
    if q < 2 {
        Err(Error::InvalidModulus(q))
    } else {
        Ok(())
    }
}

/// Bead positions on each runner, for the canonical bead count.
fn runners(partition: &Partition, q: usize) -> Vec<Vec<usize>> {
    let bead_count = partition.len().div_ceil(q) * q;
    let mut runners = vec![Vec::new(); q];
    for i in 0..bead_count {
        let b = partition.part(i) + bead_count - 1 - i;
        runners[b % q].push(b / q);
    }
    runners
}

/// Partition encoded by a decreasing list of positions on a single runner.
fn runner_partition(positions: &[usize]) -> Partition {
    let count = positions.len();
    let parts = positions
        .iter()
        .enumerate()
        .map(|(i, &pos)| pos - (count - 1 - i))
        .take_while(|&p| p > 0)
        .collect();
    Partition::from_parts_unchecked(parts)
}

/// Partition from runner bead counts with every bead pushed down.
fn packed_partition(counts: &[usize], q: usize) -> Partition {
    let mut beads: Vec<usize> = counts
        .iter()
        .enumerate()
        .flat_map(|(r, &c)| (0..c).map(move |j| j * q + r))
        .collect();
    beads.sort_unstable_by(|a, b| b.cmp(a));
    BetaSet { beads }.to_partition()
}

/// True iff no hook length is divisible by `q`.
///
/// Checked on the abacus: a partition is a q-core exactly when every
/// runner's beads sit in an unbroken run from position 0.
pub fn is_q_core(partition: &Partition, q: usize) -> bool {
    if q < 2 {
        // every hook is divisible by 1
        return partition.is_empty();
    }
    let bead_count = partition.len();
    let mut seen = vec![0usize; q];
    let mut highest: Vec<Option<usize>> = vec![None; q];
    for i in 0..bead_count {
        let b = partition.part(i) + bead_count - 1 - i;
        let r = b % q;
        seen[r] += 1;
        if highest[r].is_none() {
            highest[r] = Some(b / q);
        }
    }
    (0..q).all(|r| highest[r].is_none_or(|top| top + 1 == seen[r]))
}

/// The q-core: what is left after removing rim q-hooks until none remain.
pub fn q_core(partition: &Partition, q: usize) -> Result<Partition> {
    check_modulus(q)?;
    let counts: Vec<usize> = runners(partition, q).iter().map(Vec::len).collect();
    Ok(packed_partition(&counts, q))
}

/// The q-quotient, one component per abacus runner.
pub fn q_quotient(partition: &Partition, q: usize) -> Result<Vec<Partition>> {
    check_modulus(q)?;
    Ok(runners(partition, q)
        .iter()
        .map(|r| runner_partition(r))
        .collect())
}

/// Core and quotient together, sharing one abacus pass.
pub fn core_and_quotient(partition: &Partition, q: usize) -> Result<(Partition, Vec<Partition>)> {
    check_modulus(q)?;
    let runners = runners(partition, q);
    let counts: Vec<usize> = runners.iter().map(Vec::len).collect();
    let quotient = runners.iter().map(|r| runner_partition(r)).collect();
    Ok((packed_partition(&counts, q), quotient))
}

/// Inverse of `(q_core, q_quotient)`.
pub fn from_core_and_quotient(
    core: &Partition,
    components: &[Partition],
    q: usize,
) -> Result<Partition> {
    check_modulus(q)?;
    if components.len() != q {
        return Err(Error::QuotientArity {
            expected: q,
            found: components.len(),
        });
    }
    if !is_q_core(core, q) {
        return Err(Error::NotACore {
            core: core.clone(),
            q,
        });
    }
    // Every position below `bead_count - core.len()` is filled, so each
    // runner holds at least `rows - core.len() - 1` beads.
    let widest = components.iter().map(Partition::len).max().unwrap_or(0);
    let rows = core.len() + widest + 1;
    let bead_count = rows * q;
    let mut counts = vec![0usize; q];
    for i in 0..bead_count {
        counts[(core.part(i) + bead_count - 1 - i) % q] += 1;
    }
    let mut beads = Vec::with_capacity(bead_count);
    for (r, component) in components.iter().enumerate() {
        let positions = BetaSet::of(component, counts[r])
            .expect("runner holds enough beads for its component");
        beads.extend(positions.beads.iter().map(|&pos| pos * q + r));
    }
    beads.sort_unstable_by(|a, b| b.cmp(a));
    Ok(BetaSet { beads }.to_partition())
}

/// The q-core tower: row `i` holds the q-cores at the `q^i` nodes of depth `i`
/// of the q-ary tree, in lexicographic node order. Rows past the last
/// non-empty one are not stored.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CoreTower {
    q: usize,
    rows: Vec<Vec<Partition>>,
}

impl CoreTower {
    /// Validates row widths and that every node is a q-core.
    pub fn new(q: usize, mut rows: Vec<Vec<Partition>>) -> Result<Self> {
        check_modulus(q)?;
        let mut width = 1usize;
        for row in &rows {
            if row.len() != width || row.iter().any(|p| !is_q_core(p, q)) {
                return Err(Error::InvalidTower);
            }
            width = width.checked_mul(q).ok_or(Error::InvalidTower)?;
        }
        while rows.last().is_some_and(|r| r.iter().all(Partition::is_empty)) {
            rows.pop();
        }
        Ok(Self { q, rows })
    }

    pub fn empty(q: usize) -> Result<Self> {
        Self::new(q, Vec::new())
    }

    pub fn q(&self) -> usize {
        self.q
    }

    pub fn rows(&self) -> &[Vec<Partition>] {
        &self.rows
    }

    /// Number of stored rows.
    pub fn depth(&self) -> usize {
        self.rows.len()
    }

    /// The core at the node addressed by `path` (digits in `[q]`).
    pub fn node(&self, path: &[usize]) -> Option<&Partition> {
        let row = self.rows.get(path.len())?;
        let mut index = 0usize;
        for &digit in path {
            if digit >= self.q {
                return None;
            }
            index = index * self.q + digit;
        }
        row.get(index)
    }

    pub fn weight_vector(&self) -> WeightVector {
        WeightVector {
            q: self.q,
            w: self
                .rows
                .iter()
                .map(|row| row.iter().map(Partition::size).sum())
                .collect(),
        }
    }

    /// One line per row; nodes separated by a space, each as `[a,b,...]`.
    pub fn render(&self) -> String {
        let mut out = String::new();
        for row in &self.rows {
            for (i, p) in row.iter().enumerate() {
                if i > 0 {
                    out.push(' ');
                }
                out.push('[');
                for (j, part) in p.parts().iter().enumerate() {
                    if j > 0 {
                        out.push(',');
                    }
                    let _ = write!(out, "{part}");
                }
                out.push(']');
            }
            out.push('\n');
        }
        out
    }
}

impl fmt::Display for CoreTower {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

/// `w[i]` is the total size of the cores in tower row `i`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct WeightVector {
    pub q: usize,
    pub w: Vec<usize>,
}

impl WeightVector {
    /// `Σ w_i`.
    pub fn total(&self) -> usize {
        self.w.iter().sum()
    }

    /// `Σ w_i q^i`, the size of the encoded partition.
    pub fn weighted_size(&self) -> usize {
        self.w
            .iter()
            .rev()
            .fold(0usize, |acc, &wi| acc * self.q + wi)
    }
}

pub fn core_tower(partition: &Partition, q: usize) -> Result<CoreTower> {
    check_modulus(q)?;
    let mut rows = Vec::new();
    let mut level = vec![partition.clone()];
    while level.iter().any(|p| !p.is_empty()) {
        let mut row = Vec::with_capacity(level.len());
        let mut next = Vec::with_capacity(level.len() * q);
        for node in &level {
            if node.is_empty() {
                row.push(Partition::empty());
                next.extend((0..q).map(|_| Partition::empty()));
            } else {
                let (core, quotient) = core_and_quotient(node, q)?;
                row.push(core);
                next.extend(quotient);
            }
        }
        rows.push(row);
        level = next;
    }
    CoreTower::new(q, rows)
}

pub fn tower_to_partition(tower: &CoreTower) -> Result<Partition> {
    let q = tower.q;
    let mut below: Vec<Partition> = Vec::new();
    for row in tower.rows.iter().rev() {
        let mut level = Vec::with_capacity(row.len());
        for (i, core) in row.iter().enumerate() {
            let partition = if below.is_empty() {
                from_core_and_quotient(core, &vec![Partition::empty(); q], q)
            } else {
                from_core_and_quotient(core, &below[i * q..(i + 1) * q], q)
            };
            level.push(partition.map_err(|_| Error::InvalidTower)?);
        }
        below = level;
    }
    Ok(below.pop().unwrap_or_default())
}

pub fn weight_vector(tower: &CoreTower) -> WeightVector {
    tower.weight_vector()
}

/// `w(λ) = Σ_i w_i(λ)` without materialising the tower.
///
/// Works on raw bead positions. Row weights do not depend on the order of
/// the nodes within a row, so any bead count will do here.
pub fn tower_weight(partition: &Partition, q: usize) -> Result<usize> {
    check_modulus(q)?;
    let count = partition.len();
    let beads: Vec<usize> = (0..count)
        .map(|i| partition.part(i) + count - 1 - i)
        .collect();
    Ok(beads_weight(&beads, q))
}

/// Size of the partition a beta-set encodes.
fn beads_size(beads: &[usize]) -> usize {
    let c = beads.len();
    beads.iter().sum::<usize>() - c * c.saturating_sub(1) / 2
}

fn beads_weight(beads: &[usize], q: usize) -> usize {
    if beads_size(beads) == 0 {
        return 0;
    }
    let mut counts = vec![0usize; q];
    for &b in beads {
        counts[b % q] += 1;
    }
    // the core packs each runner's beads down to positions r, r + q, ...
    let c = beads.len();
    let packed: usize = counts
        .iter()
        .enumerate()
        .map(|(r, &k)| q * k * k.saturating_sub(1) / 2 + r * k)
        .sum();
    let mut total = packed - c * c.saturating_sub(1) / 2;
    let mut runner = Vec::with_capacity(c);
    for (r, &k) in counts.iter().enumerate() {
        if k == 0 {
            continue;
        }
        runner.clear();
        runner.extend(beads.iter().filter(|&&b| b % q == r).map(|&b| b / q));
        total += beads_weight(&runner, q);
    }
    total
}

/// All q-cores of `n`, in the canonical partition order.
pub fn enumerate_q_cores(n: usize, q: usize) -> impl Iterator<Item = Partition> {
    enumerate_partitions(n).filter(move |p| is_q_core(p, q))
}
