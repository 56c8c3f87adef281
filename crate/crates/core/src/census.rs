//! Exhaustive censuses over all partitions of `n`.
//!
//! Every statistic is an exact count of partitions, so a census can be split
//! into [`PartitionIndexRange`] shards whose counts simply add up. Reports
//! keep the numerator and `p(n)` as integers; the decimal ratio is only ever
//! rendered for display.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{Pow, ToPrimitive, Zero};

use crate::abacus::is_q_core;
use crate::character::{CharacterEvaluator, CycleType};
use crate::error::{Error, Result};
use crate::partition::{enumerate_partitions, partition_count, Partition, PartitionIndexRange};
use crate::valuation::{
    degree_valuation_macdonald, digit_sum, factorize, floor_log, require_prime,
    small_valuation_threshold,
};

/// Which statistic a census counts.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum CensusKind {
    /// `d | f_λ`, decided from q-adic valuations of the degree.
    Degrees { d: u64 },
    /// `d | χ^λ_μ`, evaluated exactly. `χ = 0` counts as divisible.
    Characters { mu: Partition, d: u64 },
    /// `v_q(f_λ) ≤ m + (q − 1)·log_q n`.
    TheoremA { q: u64, m: u64 },
    /// λ is a q-core.
    Cores { q: usize },
}

impl CensusKind {
    /// Short name used in the `kind` column of reports.
    pub fn name(&self) -> &'static str {
        match self {
            CensusKind::Degrees { .. } => "degrees",
            CensusKind::Characters { .. } => "chars",
            CensusKind::TheoremA { .. } => "theorem-a",
            CensusKind::Cores { .. } => "cores",
        }
    }

    /// Parameters as `key=value` pairs joined by `;`. Partitions are written
    /// with `.` between parts so the field never contains a comma.
    pub fn params(&self) -> String {
        match self {
            CensusKind::Degrees { d } => format!("d={d}"),
            CensusKind::Characters { mu, d } => {
                let parts: Vec<String> = mu.parts().iter().map(|p| format!("{p}")).collect();
                format!("mu={};d={d}", parts.join("."))
            }
            CensusKind::TheoremA { q, m } => format!("q={q};m={m}"),
            CensusKind::Cores { q } => format!("q={q}"),
        }
    }

    /// Checks the preconditions of this census at size `n`.
    pub fn validate(&self, n: usize) -> Result<()> {
        match self {
            CensusKind::Degrees { d } => check_divisor(*d),
            CensusKind::Characters { mu, d } => {
                check_divisor(*d)?;
                CycleType::new(mu.clone(), n).map(|_| ())
            }
            CensusKind::TheoremA { q, .. } => {
                require_prime(*q)?;
                if n == 0 {
                    return Err(Error::ZeroDegree);
                }
                Ok(())
            }
            CensusKind::Cores { q } => {
                if *q < 2 {
                    return Err(Error::InvalidModulus(*q));
                }
                Ok(())
            }
        }
    }
}

fn check_divisor(d: u64) -> Result<()> {
    if d < 2 {
        Err(Error::InvalidDivisor(d))
    } else {
        Ok(())
    }
}

/// Exact count for one census over all partitions of `n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CensusReport {
    pub n: usize,
    pub kind: CensusKind,
    pub numerator: BigUint,
    /// `p(n)`
    pub denominator: BigUint,
}

impl CensusReport {
    pub fn new(n: usize, kind: CensusKind, numerator: u64) -> Self {
        let denominator = partition_count(n);
        let numerator = BigUint::from(numerator);
        debug_assert!(numerator <= denominator);
        Self {
            n,
            kind,
            numerator,
            denominator,
        }
    }

    /// `numerator / denominator` rounded half-up to six decimals.
    pub fn ratio(&self) -> String {
        render_ratio(&self.numerator, &self.denominator, 6)
    }
}

impl fmt::Display for CensusReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "n={} {} {}: {}/{} ({})",
            self.n,
            self.kind.name(),
            self.kind.params(),
            self.numerator,
            self.denominator,
            self.ratio()
        )
    }
}

/// Decimal rendering of a non-negative fraction, rounded half-up.
pub fn render_ratio(numerator: &BigUint, denominator: &BigUint, digits: u32) -> String {
    assert!(!denominator.is_zero(), "ratio with zero denominator");
    let scale: BigUint = Pow::pow(BigUint::from(10u32), digits);
    let scaled = (numerator * &scale * 2u32 + denominator) / (denominator * 2u32);
    let (whole, frac) = scaled.div_rem(&scale);
    if digits == 0 {
        return format!("{whole}");
    }
    format!("{whole}.{frac:0>width$}", width = digits as usize)
}

/// Counts the partitions in `range` that satisfy `kind`. Shards of the same
/// `n` add up to the full census.
pub fn census_range(kind: &CensusKind, range: PartitionIndexRange) -> Result<u64> {
    let n = range.n();
    kind.validate(n)?;
    let mut count = 0u64;
    match kind {
        CensusKind::Degrees { d } => {
            let factors = factorize(*d);
            for l in range.iter() {
                if degree_divisible(&l, &factors)? {
                    count += 1;
                }
            }
        }
        CensusKind::Characters { mu, d } => {
            let ct = CycleType::new(mu.clone(), n)?;
            let d = num_bigint::BigInt::from(*d);
            let mut evaluator = CharacterEvaluator::new();
            for l in range.iter() {
                let chi = evaluator.character(&l, &ct)?;
                if chi.is_multiple_of(&d) {
                    count += 1;
                }
            }
        }
        CensusKind::TheoremA { q, m } => {
            let limit = small_valuation_threshold(n as u64, *q, *m);
            for l in range.iter() {
                if degree_valuation_macdonald(&l, *q)?.0 <= limit {
                    count += 1;
                }
            }
        }
        CensusKind::Cores { q } => {
            count = range.iter().filter(|l| is_q_core(l, *q)).count() as u64;
        }
    }
    Ok(count)
}

fn degree_divisible(partition: &Partition, factors: &[(u64, u32)]) -> Result<bool> {
    for &(prime, exponent) in factors {
        if degree_valuation_macdonald(partition, prime)?.0 < u64::from(exponent) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Single-threaded census over every partition of `n`.
pub fn census(n: usize, kind: &CensusKind) -> Result<CensusReport> {
    kind.validate(n)?;
    let count = census_range(kind, PartitionIndexRange::full(n)?)?;
    Ok(CensusReport::new(n, kind.clone(), count))
}

/// `#{λ ⊢ n : d | χ^λ_μ}` by exact character evaluation.
pub fn divisibility_census(n: usize, mu: &Partition, d: u64) -> Result<CensusReport> {
    census(
        n,
        &CensusKind::Characters {
            mu: mu.clone(),
            d,
        },
    )
}

/// `#{λ ⊢ n : d | f_λ}` via the prime factorisation of `d` and degree
/// valuations; no big integers involved.
pub fn degree_divisibility_census(n: usize, d: u64) -> Result<CensusReport> {
    census(n, &CensusKind::Degrees { d })
}

/// `#{λ ⊢ n : v_q(f_λ) ≤ m + (q − 1)·log_q n}`.
pub fn theorem_a_census(n: usize, q: u64, m: u64) -> Result<CensusReport> {
    census(n, &CensusKind::TheoremA { q, m })
}

/// `#{λ ⊢ n : λ is a q-core}` over `p(n)`.
pub fn core_census(n: usize, q: usize) -> Result<CensusReport> {
    census(n, &CensusKind::Cores { q })
}

/// How many λ ⊢ n have each value of `v_q(f_λ)`.
pub fn valuation_histogram(n: usize, q: u64) -> Result<BTreeMap<u64, u64>> {
    require_prime(q)?;
    let mut histogram = BTreeMap::new();
    for l in enumerate_partitions(n) {
        *histogram
            .entry(degree_valuation_macdonald(&l, q)?.0)
            .or_insert(0) += 1;
    }
    Ok(histogram)
}

/// `c_q(n)`, the number of q-cores of `n`.
pub fn core_count(n: usize, q: usize) -> Result<u64> {
    if q < 2 {
        return Err(Error::InvalidModulus(q));
    }
    Ok(enumerate_partitions(n).filter(|l| is_q_core(l, q)).count() as u64)
}

/// `c̃_q(n) = max{c_q(i) : 1 ≤ i ≤ n}`, zero for `n = 0`.
pub fn max_core_count(n: usize, q: usize) -> Result<u64> {
    let mut best = 0;
    for i in 1..=n {
        best = best.max(core_count(i, q)?);
    }
    Ok(best)
}

/// Outcome of checking the tower-counting upper bound on `p_b(n)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BoundReport {
    pub n: usize,
    pub q: u64,
    pub b: u64,
    /// `N_b = (q − 1)(⌊log_q n⌋ + b + 1)`
    pub n_b: u64,
    /// `#{λ ⊢ n : v_q(f_λ) ≤ b}`
    pub p_b: u64,
    /// `c̃_q(N_b)`
    pub max_cores: u64,
    /// `c̃_q(N_b)^{N_b} · C(qn + N_b, N_b)`
    pub binomial_bound: BigUint,
    /// `c̃_q(N_b)^{N_b} · (qn + N_b)^{N_b}`
    pub bound: BigUint,
    /// `p_b ≤ bound`
    pub holds: bool,
    /// `p_b ≤ binomial_bound ≤ bound`
    pub chain_holds: bool,
}

impl BoundReport {
    /// Number of decimal digits of `bound`.
    pub fn bound_digits(&self) -> usize {
        self.bound.to_str_radix(10).len()
    }
}

impl fmt::Display for BoundReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "n={} q={} b={}: N_b={} p_b={} c~={} bound has {} digits, holds={}",
            self.n,
            self.q,
            self.b,
            self.n_b,
            self.p_b,
            self.max_cores,
            self.bound_digits(),
            self.holds
        )
    }
}

/// Counts `p_b(n)` exhaustively and compares it with the bound obtained by
/// counting q-core towers with at most `N_b` cells.
pub fn counting_bound(n: usize, q: u64, b: u64) -> Result<BoundReport> {
    require_prime(q)?;
    if n == 0 {
        return Err(Error::ZeroDegree);
    }
    let n_b = (q - 1) * (u64::from(floor_log(n as u64, q)) + b + 1);
    let mut p_b = 0u64;
    for l in enumerate_partitions(n) {
        if degree_valuation_macdonald(&l, q)?.0 <= b {
            p_b += 1;
        }
    }
    let max_cores = max_core_count(n_b as usize, q as usize)?;
    let exponent = n_b.to_u32().expect("N_b fits in u32");
    let cells = BigUint::from(q * n as u64 + n_b);
    let core_choices: BigUint = Pow::pow(BigUint::from(max_cores), exponent);
    let binomial = num_integer::binomial(cells.clone(), BigUint::from(n_b));
    let power: BigUint = Pow::pow(cells, exponent);
    let binomial_bound = &core_choices * &binomial;
    let bound = &core_choices * &power;
    let p_b_big = BigUint::from(p_b);
    Ok(BoundReport {
        n,
        q,
        b,
        n_b,
        p_b,
        max_cores,
        holds: p_b_big <= bound,
        chain_holds: p_b_big <= binomial_bound && binomial <= power,
        binomial_bound,
        bound,
    })
}

/// One report per `n`, computed sequentially.
pub fn trend_report(ns: &[usize], kind: &CensusKind) -> Result<Vec<CensusReport>> {
    check_series(ns)?;
    ns.iter().map(|&n| census(n, kind)).collect()
}

/// `ns` must be non-empty and strictly ascending.
pub fn check_series(ns: &[usize]) -> Result<()> {
    if ns.is_empty() || ns.windows(2).any(|w| w[0] >= w[1]) {
        return Err(Error::InvalidSeries);
    }
    Ok(())
}

/// `a(n) ≤ (q − 1)(⌊log_q n⌋ + 1)`.
pub fn digit_sum_bound_holds(n: u64, q: u64) -> bool {
    digit_sum(n, q) <= (q - 1) * (u64::from(floor_log(n, q)) + 1)
}
