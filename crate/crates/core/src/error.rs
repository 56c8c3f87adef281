use core::fmt;

use crate::partition::Partition;

pub type Result<T> = core::result::Result<T, Error>;

/// Errors reported by the library surface.
///
/// Variants split into caller mistakes (bad arguments) and
/// [`Error::Invariant`]-style failures that can only come from a bug.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// Parts are not weakly decreasing positive integers.
    InvalidPartition,
    /// A beta-set needs at least as many beads as the partition has parts.
    InsufficientBeads { parts: usize, beads: usize },
    /// Bead positions of a beta-set must be strictly decreasing.
    InvalidBetaSet,
    /// The modulus of a core or quotient must be at least 2.
    InvalidModulus(usize),
    /// The operation applies a formula that only holds for primes.
    PrimeRequired(u64),
    /// A partition passed as a core has a hook divisible by the modulus.
    NotACore { core: Partition, q: usize },
    /// The quotient has the wrong number of components.
    QuotientArity { expected: usize, found: usize },
    /// A tower node is not a core, or a row has the wrong width.
    InvalidTower,
    /// `k > n` in a falling factorial.
    EmptyFallingFactorial { n: u64, k: u64 },
    /// The cycle type is larger than the ambient degree.
    CycleTypeTooLarge { k: usize, n: usize },
    /// The partition size does not match the cycle type's degree.
    SizeMismatch { partition: usize, cycle_type: usize },
    /// A divisibility census needs `d >= 2`.
    InvalidDivisor(u64),
    /// `chi * (n)_k` was not divisible by `f`.
    LassalleIntegrality,
    /// The partition index space does not fit in 64 bits.
    IndexOverflow(usize),
    /// A shard range lies outside `[0, p(n))`.
    InvalidRange { start: u64, end: u64, total: u64 },
    /// The statistic involves `log n` and needs `n >= 1`.
    ZeroDegree,
    /// A trend needs a non-empty, strictly ascending list of sizes.
    InvalidSeries,
}

impl Error {
    /// True for failures that indicate a bug in this crate rather than bad input.
    pub fn is_internal(&self) -> bool {
        matches!(self, Error::LassalleIntegrality)
    }
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::InvalidPartition => {
                write!(f, "parts must be weakly decreasing positive integers")
            }
            Error::InsufficientBeads { parts, beads } => {
                write!(f, "insufficient beads: {beads} beads for {parts} parts")
            }
            Error::InvalidBetaSet => write!(f, "bead positions must be strictly decreasing"),
            Error::InvalidModulus(q) => write!(f, "modulus must be at least 2, got {q}"),
            Error::PrimeRequired(q) => write!(f, "prime required, got {q}"),
            Error::NotACore { core, q } => write!(f, "not a core: {core} is not a {q}-core"),
            Error::QuotientArity { expected, found } => {
                write!(f, "quotient needs {expected} components, got {found}")
            }
            Error::InvalidTower => write!(f, "invalid tower"),
            Error::EmptyFallingFactorial { n, k } => {
                write!(f, "empty falling factorial domain: k = {k} exceeds n = {n}")
            }
            Error::CycleTypeTooLarge { k, n } => {
                write!(f, "cycle type of size {k} does not fit in degree {n}")
            }
            Error::SizeMismatch {
                partition,
                cycle_type,
            } => write!(
                f,
                "λ and cycle type disagree: partition of {partition}, cycle type of {cycle_type}"
            ),
            Error::InvalidDivisor(d) => write!(f, "divisor must be at least 2, got {d}"),
            Error::LassalleIntegrality => write!(f, "Lassalle integrality violated"),
            Error::IndexOverflow(n) => {
                write!(f, "partitions of {n} cannot be indexed with 64 bits")
            }
            Error::InvalidRange { start, end, total } => {
                write!(f, "range {start}..{end} is outside 0..{total}")
            }
            Error::ZeroDegree => write!(f, "n must be at least 1"),
            Error::InvalidSeries => write!(f, "sizes must be non-empty and strictly ascending"),
        }
    }
}

impl core::error::Error for Error {}
