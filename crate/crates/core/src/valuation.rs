//! q-adic valuations: base-q digit sums, factorials, falling factorials and
//! character degrees.
//!
//! Comparisons against `log_q n` are done with integer powers, never floats.

use alloc::vec::Vec;
use core::fmt;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Pow, Zero};

use crate::abacus::tower_weight;
use crate::error::{Error, Result};
use crate::partition::Partition;

/// Exponent of the largest power of `q` dividing some non-zero quantity.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Valuation(pub u64);

impl Valuation {
    pub fn get(self) -> u64 {
        self.0
    }
}

impl fmt::Display for Valuation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// Little-endian base-q digits of `n`; empty for `n = 0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QaryExpansion {
    pub q: u64,
    pub digits: Vec<u64>,
}

impl QaryExpansion {
    /// `a(n)`, the sum of the digits.
    pub fn digit_sum(&self) -> u64 {
        self.digits.iter().sum()
    }

    /// Index of the leading digit, `None` for `n = 0`.
    pub fn top(&self) -> Option<usize> {
        self.digits.len().checked_sub(1)
    }

    pub fn value(&self) -> u64 {
        self.digits.iter().rev().fold(0, |acc, &d| acc * self.q + d)
    }
}

pub fn q_expand(mut n: u64, q: u64) -> Result<QaryExpansion> {
    if q < 2 {
        return Err(Error::InvalidModulus(q as usize));
    }
    let mut digits = Vec::new();
    while n > 0 {
        digits.push(n % q);
        n /= q;
    }
    Ok(QaryExpansion { q, digits })
}

pub(crate) fn digit_sum(mut n: u64, q: u64) -> u64 {
    let mut sum = 0;
    while n > 0 {
        sum += n % q;
        n /= q;
    }
    sum
}

/// Trial division.
pub fn is_prime(q: u64) -> bool {
    if q < 2 {
        return false;
    }
    let mut d = 2u64;
    while d.saturating_mul(d) <= q {
        if q.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

pub(crate) fn require_prime(q: u64) -> Result<()> {
    if is_prime(q) {
        Ok(())
    } else {
        Err(Error::PrimeRequired(q))
    }
}

/// Prime factorisation as `(prime, exponent)` pairs in increasing order.
pub fn factorize(mut m: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut d = 2u64;
    while d.saturating_mul(d) <= m {
        if m.is_multiple_of(d) {
            let mut e = 0;
            while m.is_multiple_of(d) {
                m /= d;
                e += 1;
            }
            out.push((d, e));
        }
        d += 1;
    }
    if m > 1 {
        out.push((m, 1));
    }
    out
}

/// `⌊log_q n⌋` for `n ≥ 1`.
pub fn floor_log(n: u64, q: u64) -> u32 {
    debug_assert!(n >= 1 && q >= 2);
    let mut r = 0;
    let mut power = q;
    while power <= n {
        r += 1;
        match power.checked_mul(q) {
            Some(next) => power = next,
            None => break,
        }
    }
    r
}

/// `v_q(n!) = (n − a(n)) / (q − 1)`.
pub fn legendre_valuation_factorial(n: u64, q: u64) -> Result<Valuation> {
    require_prime(q)?;
    Ok(Valuation((n - digit_sum(n, q)) / (q - 1)))
}

/// `v_q((n)_k) = (k + a(n − k) − a(n)) / (q − 1)` for `(n)_k = n(n−1)⋯(n−k+1)`.
pub fn falling_factorial_valuation(n: u64, k: u64, q: u64) -> Result<Valuation> {
    require_prime(q)?;
    if k > n {
        return Err(Error::EmptyFallingFactorial { n, k });
    }
    let numerator = k + digit_sum(n - k, q) - digit_sum(n, q);
    debug_assert_eq!(numerator % (q - 1), 0);
    Ok(Valuation(numerator / (q - 1)))
}

/// `v_q(f_λ) = (w(λ) − a(n)) / (q − 1)`, with `w(λ)` the total size of the
/// q-core tower of λ.
///
/// # Panics
///
/// If the division is not exact, which can only happen through a bug in the
/// tower construction.
pub fn degree_valuation_macdonald(partition: &Partition, q: u64) -> Result<Valuation> {
    require_prime(q)?;
    let w = tower_weight(partition, q as usize)? as u64;
    let a = digit_sum(partition.size() as u64, q);
    assert!(
        w >= a && (w - a).is_multiple_of(q - 1),
        "tower weight {w} and digit sum {a} of {partition} are inconsistent for q = {q}"
    );
    Ok(Valuation((w - a) / (q - 1)))
}

/// `v_q(f_λ) = v_q(n!) − Σ_cells v_q(hook)`, from the hook length formula.
pub fn degree_valuation_hooks(partition: &Partition, q: u64) -> Result<Valuation> {
    let total = legendre_valuation_factorial(partition.size() as u64, q)?.0;
    let hooks: u64 = partition
        .hook_lengths()
        .iter()
        .map(|h| small_valuation(h as u64, q))
        .sum();
    Ok(Valuation(total - hooks))
}

fn small_valuation(mut m: u64, q: u64) -> u64 {
    debug_assert!(m > 0);
    let mut v = 0;
    while m.is_multiple_of(q) {
        m /= q;
        v += 1;
    }
    v
}

/// `v_q(m)`, or `None` for `m = 0`.
pub fn valuation_of(m: &BigInt, q: u64) -> Option<Valuation> {
    if m.is_zero() {
        return None;
    }
    let q = BigInt::from(q);
    let mut m = m.clone();
    let mut v = 0;
    loop {
        let (quot, rem) = m.div_rem(&q);
        if !rem.is_zero() {
            return Some(Valuation(v));
        }
        m = quot;
        v += 1;
    }
}

/// Largest valuation `v` with `v ≤ m + (q − 1)·log_q n`.
///
/// Exact: for `v > m` the test is `q^(v−m) ≤ n^(q−1)`, so the answer is
/// `m + max{t : q^t ≤ n^(q−1)}`. Ties are admitted.
pub fn small_valuation_threshold(n: u64, q: u64, m: u64) -> u64 {
    assert!(n >= 1 && q >= 2, "threshold needs n ≥ 1 and q ≥ 2");
    let bound: BigUint = Pow::pow(BigUint::from(n), (q - 1) as u32);
    let q_big = BigUint::from(q);
    let mut t = 0u64;
    let mut power = q_big.clone();
    while power <= bound {
        t += 1;
        power *= &q_big;
    }
    m + t
}

/// Whether `v ≤ m + (q − 1)·log_q n`, compared exactly.
pub fn within_threshold(v: u64, n: u64, q: u64, m: u64) -> bool {
    if v <= m {
        return true;
    }
    let lhs: BigUint = Pow::pow(BigUint::from(q), (v - m) as u32);
    let rhs: BigUint = Pow::pow(BigUint::from(n), (q - 1) as u32);
    lhs <= rhs
}

pub(crate) fn factorial(n: u64) -> BigUint {
    (1..=n).fold(BigUint::one(), |acc, i| acc * i)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn expansions() {
        let e = q_expand(0, 2).unwrap();
        assert!(e.digits.is_empty());
        assert_eq!(e.digit_sum(), 0);
        assert_eq!(e.top(), None);
        let e = q_expand(4, 2).unwrap();
        assert_eq!(e.digits, [0, 0, 1]);
        assert_eq!(e.digit_sum(), 1);
        assert_eq!(e.top(), Some(2));
        assert_eq!(q_expand(50, 2).unwrap().digit_sum(), 3);
        assert_eq!(q_expand(10, 3).unwrap().digits, [1, 0, 1]);
        assert_eq!(q_expand(12345, 7).unwrap().value(), 12345);
        assert!(q_expand(5, 1).is_err());
    }

    #[test]
    fn legendre() {
        assert_eq!(legendre_valuation_factorial(0, 3).unwrap(), Valuation(0));
        assert_eq!(legendre_valuation_factorial(4, 2).unwrap(), Valuation(3));
        assert_eq!(legendre_valuation_factorial(10, 3).unwrap(), Valuation(4));
        assert_eq!(legendre_valuation_factorial(10, 4), Err(Error::PrimeRequired(4)));
    }

    #[test]
    fn falling() {
        assert_eq!(falling_factorial_valuation(9, 0, 5).unwrap(), Valuation(0));
        assert_eq!(falling_factorial_valuation(4, 2, 2).unwrap(), Valuation(2));
        assert_eq!(falling_factorial_valuation(10, 3, 3).unwrap(), Valuation(2));
        assert_eq!(
            falling_factorial_valuation(3, 4, 2),
            Err(Error::EmptyFallingFactorial { n: 3, k: 4 })
        );
        assert_eq!(falling_factorial_valuation(4, 2, 6), Err(Error::PrimeRequired(6)));
    }

    #[test]
    fn degree_valuations() {
        for q in [2, 3, 5, 7] {
            assert_eq!(degree_valuation_macdonald(&p(&[9]), q).unwrap(), Valuation(0));
        }
        assert_eq!(degree_valuation_macdonald(&p(&[2, 1]), 2).unwrap(), Valuation(1));
        assert_eq!(degree_valuation_macdonald(&p(&[2, 2]), 2).unwrap(), Valuation(1));
        assert_eq!(degree_valuation_hooks(&p(&[1, 1, 1]), 5).unwrap(), Valuation(0));
        assert_eq!(degree_valuation_hooks(&p(&[2, 1]), 2).unwrap(), Valuation(1));
        assert_eq!(degree_valuation_hooks(&p(&[3, 1]), 2).unwrap(), Valuation(0));
        assert_eq!(
            degree_valuation_macdonald(&p(&[2, 1]), 4),
            Err(Error::PrimeRequired(4))
        );
        assert_eq!(degree_valuation_hooks(&p(&[2, 1]), 9), Err(Error::PrimeRequired(9)));
        assert_eq!(
            degree_valuation_macdonald(&Partition::empty(), 2).unwrap(),
            Valuation(0)
        );
    }

    #[test]
    fn thresholds() {
        // log_2 8 = 3
        assert_eq!(small_valuation_threshold(8, 2, 0), 3);
        assert!(within_threshold(3, 8, 2, 0));
        assert!(!within_threshold(4, 8, 2, 0));
        // 2^3 ≤ 10 < 2^4
        assert_eq!(small_valuation_threshold(10, 2, 0), 3);
        assert!(within_threshold(3, 10, 2, 0));
        assert!(!within_threshold(4, 10, 2, 0));
        // 3^4 = 81 = 9^2
        assert!(within_threshold(5, 9, 3, 1));
        assert!(!within_threshold(6, 9, 3, 1));
        assert_eq!(small_valuation_threshold(9, 3, 1), 5);
        assert!(within_threshold(0, 1, 2, 0));
        assert_eq!(small_valuation_threshold(1, 5, 2), 2);
    }

    #[test]
    fn primes_and_factors() {
        let primes: Vec<u64> = (0..30).filter(|&q| is_prime(q)).collect();
        assert_eq!(primes, [2, 3, 5, 7, 11, 13, 17, 19, 23, 29]);
        assert_eq!(factorize(1), []);
        assert_eq!(factorize(12), [(2, 2), (3, 1)]);
        assert_eq!(factorize(97), [(97, 1)]);
        assert_eq!(floor_log(1, 2), 0);
        assert_eq!(floor_log(8, 2), 3);
        assert_eq!(floor_log(26, 3), 2);
        assert_eq!(floor_log(27, 3), 3);
    }

    #[test]
    fn big_valuations() {
        assert_eq!(valuation_of(&BigInt::from(0), 2), None);
        assert_eq!(valuation_of(&BigInt::from(-24), 2), Some(Valuation(3)));
        assert_eq!(valuation_of(&BigInt::from(720), 3), Some(Valuation(2)));
        assert_eq!(factorial(5), BigUint::from(120u32));
    }
}
