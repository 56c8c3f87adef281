//! Irreducible characters of the symmetric group: degrees from the hook
//! length formula, values from the Murnaghan–Nakayama rule, and the integer
//! `A` in `χ^λ_μ = f_λ · A / (n)_k`.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::partition::Partition;
use crate::valuation::factorial;

/// The class of permutations of `n` points with cycle type `(μ, 1^{n−k})`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CycleType {
    mu: Partition,
    n: usize,
}

impl CycleType {
    pub fn new(mu: Partition, n: usize) -> Result<Self> {
        if mu.size() > n {
            return Err(Error::CycleTypeTooLarge { k: mu.size(), n });
        }
        Ok(Self { mu, n })
    }

    /// The identity class of `S_n`.
    pub fn identity(n: usize) -> Self {
        Self {
            mu: Partition::empty(),
            n,
        }
    }

    pub fn mu(&self) -> &Partition {
        &self.mu
    }

    /// `k = |μ|`.
    pub fn k(&self) -> usize {
        self.mu.size()
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// `(μ_1, …, μ_m, 1^{n−k})` as a partition of `n`.
    pub fn full_type(&self) -> Partition {
        let mut parts = self.mu.parts().to_vec();
        parts.resize(parts.len() + self.n - self.k(), 1);
        Partition::from_parts_unchecked(parts)
    }

    /// Cycle lengths greater than one, largest first.
    fn long_cycles(&self) -> Vec<usize> {
        self.mu.parts().iter().copied().filter(|&c| c > 1).collect()
    }
}

/// Sign of a permutation of this cycle type.
pub fn cycle_type_sign(ct: &CycleType) -> i8 {
    let transpositions: usize = ct.mu.parts().iter().map(|&c| c - 1).sum();
    if transpositions.is_multiple_of(2) {
        1
    } else {
        -1
    }
}

/// `f_λ = n! / Π hooks`.
pub fn degree(partition: &Partition) -> BigUint {
    let (f, rem) = factorial(partition.size() as u64).div_rem(&partition.hook_lengths().product());
    debug_assert!(rem.is_zero());
    f
}

/// `(n)_k = n(n−1)⋯(n−k+1)`.
pub fn falling_factorial(n: u64, k: u64) -> Result<BigUint> {
    if k > n {
        return Err(Error::EmptyFallingFactorial { n, k });
    }
    Ok((n - k + 1..=n).fold(BigUint::one(), |acc, i| acc * i))
}

/// Order of the centralizer of a permutation with cycle type `sigma`:
/// `Π i^{m_i} m_i!`.
pub fn centralizer_order(sigma: &Partition) -> BigUint {
    let mut z = BigUint::one();
    let parts = sigma.parts();
    let mut i = 0;
    while i < parts.len() {
        let len = parts[i];
        let mult = parts[i..].iter().take_while(|&&c| c == len).count();
        for j in 1..=mult {
            z *= len;
            z *= j;
        }
        i += mult;
    }
    z
}

/// `χ^λ_μ` together with the pieces of `χ · (n)_k = f_λ · A`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LassalleDecomposition {
    /// `f_λ`
    pub degree: BigUint,
    /// `(n)_k`
    pub falling: BigUint,
    pub a: BigInt,
    pub chi: BigInt,
}

/// Murnaghan–Nakayama evaluator with a memo keyed on
/// `(remaining partition, remaining cycles > 1)`.
///
/// Cycles are stripped longest first. Once only fixed points remain the value
/// is the degree of what is left, so 1-cycles never enter the recursion. The
/// cache carries over between calls, which pays off when many λ are evaluated
/// against the same μ.
#[derive(Clone, Debug, Default)]
pub struct CharacterEvaluator {
    values: BTreeMap<(Vec<usize>, Vec<usize>), BigInt>,
    degrees: BTreeMap<Vec<usize>, BigUint>,
}

impl CharacterEvaluator {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn cached_values(&self) -> usize {
        self.values.len()
    }

    pub fn degree(&mut self, partition: &Partition) -> BigUint {
        if let Some(f) = self.degrees.get(partition.parts()) {
            return f.clone();
        }
        let f = degree(partition);
        self.degrees.insert(partition.parts().to_vec(), f.clone());
        f
    }

    pub fn character(&mut self, partition: &Partition, ct: &CycleType) -> Result<BigInt> {
        if partition.size() != ct.n() {
            return Err(Error::SizeMismatch {
                partition: partition.size(),
                cycle_type: ct.n(),
            });
        }
        Ok(self.strip(partition.parts(), &ct.long_cycles()))
    }

    pub fn lassalle(&mut self, partition: &Partition, ct: &CycleType) -> Result<LassalleDecomposition> {
        let chi = self.character(partition, ct)?;
        let falling = falling_factorial(ct.n() as u64, ct.k() as u64)?;
        let f = self.degree(partition);
        let (a, rem) = (&chi * BigInt::from(falling.clone())).div_rem(&BigInt::from(f.clone()));
        if !rem.is_zero() {
            return Err(Error::LassalleIntegrality);
        }
        Ok(LassalleDecomposition {
            degree: f,
            falling,
            a,
            chi,
        })
    }

    fn strip(&mut self, parts: &[usize], cycles: &[usize]) -> BigInt {
        let Some((&len, rest)) = cycles.split_first() else {
            let shape = Partition::from_parts_unchecked(parts.to_vec());
            return BigInt::from(self.degree(&shape));
        };
        let key = (parts.to_vec(), cycles.to_vec());
        if let Some(v) = self.values.get(&key) {
            return v.clone();
        }

        // Beta-set with one bead per part; a rim hook of length `len` is a
        // bead moving down `len` places into a gap, and its leg length is
        // the number of beads jumped over.
        let count = parts.len();
        let beads: Vec<usize> = (0..count).map(|i| parts[i] + count - 1 - i).collect();
        let top = beads.first().copied().unwrap_or(0);
        let mut occupied = alloc::vec![false; top + 1];
        for &b in &beads {
            occupied[b] = true;
        }

        let mut total = BigInt::zero();
        for (i, &b) in beads.iter().enumerate() {
            if b < len || occupied[b - len] {
                continue;
            }
            let target = b - len;
            let leg = beads[i + 1..].iter().take_while(|&&c| c > target).count();
            let mut moved = beads.clone();
            moved[i] = target;
            moved.sort_unstable_by(|x, y| y.cmp(x));
            let remaining: Vec<usize> = moved
                .iter()
                .enumerate()
                .map(|(j, &c)| c - (count - 1 - j))
                .take_while(|&p| p > 0)
                .collect();
            let value = self.strip(&remaining, rest);
            if leg.is_multiple_of(2) {
                total += value;
            } else {
                total -= value;
            }
        }
        self.values.insert(key, total.clone());
        total
    }
}

/// `χ^λ` at the class `ct`, evaluated with a fresh cache.
pub fn character(partition: &Partition, ct: &CycleType) -> Result<BigInt> {
    CharacterEvaluator::new().character(partition, ct)
}

/// `A^λ_μ = χ^λ_μ · (n)_k / f_λ`, which is always an integer.
pub fn lassalle_decomposition(partition: &Partition, ct: &CycleType) -> Result<LassalleDecomposition> {
    CharacterEvaluator::new().lassalle(partition, ct)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partition::enumerate_partitions;

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    fn ct(mu: &[usize], n: usize) -> CycleType {
        CycleType::new(p(mu), n).unwrap()
    }

    #[test]
    fn degrees() {
        assert_eq!(degree(&p(&[7])), BigUint::one());
        assert_eq!(degree(&p(&[2, 1])), BigUint::from(2u32));
        assert_eq!(degree(&p(&[3, 1])), BigUint::from(3u32));
        assert_eq!(degree(&Partition::empty()), BigUint::one());
        // f_(3,2) = 5
        assert_eq!(degree(&p(&[3, 2])), BigUint::from(5u32));
    }

    #[test]
    fn character_values() {
        for mu in [&[][..], &[2], &[3, 2], &[1, 1]] {
            assert_eq!(character(&p(&[6]), &ct(mu, 6)).unwrap(), BigInt::one());
        }
        assert_eq!(character(&p(&[2, 1]), &ct(&[2], 3)).unwrap(), BigInt::zero());
        assert_eq!(character(&p(&[3, 1]), &ct(&[2], 4)).unwrap(), BigInt::one());
        assert_eq!(character(&p(&[1, 1, 1]), &ct(&[2], 3)).unwrap(), BigInt::from(-1));
        assert_eq!(character(&p(&[2, 2]), &ct(&[3], 4)).unwrap(), BigInt::from(-1));
        // μ = (1) pads to the identity
        assert_eq!(character(&p(&[3, 1]), &ct(&[1], 4)).unwrap(), BigInt::from(3));
    }

    #[test]
    fn size_mismatch() {
        assert_eq!(
            character(&p(&[2, 1]), &ct(&[2], 4)),
            Err(Error::SizeMismatch {
                partition: 3,
                cycle_type: 4
            })
        );
        assert_eq!(
            CycleType::new(p(&[3, 2]), 4),
            Err(Error::CycleTypeTooLarge { k: 5, n: 4 })
        );
    }

    #[test]
    fn lassalle_examples() {
        let d = lassalle_decomposition(&p(&[3, 1]), &ct(&[2], 4)).unwrap();
        assert_eq!(d.a, BigInt::from(4));
        assert_eq!(d.falling, BigUint::from(12u32));
        let d = lassalle_decomposition(&p(&[2, 1]), &ct(&[2], 3)).unwrap();
        assert_eq!(d.a, BigInt::zero());
        // identity type: A = (n)_k
        for l in enumerate_partitions(6) {
            let d = lassalle_decomposition(&l, &ct(&[1, 1, 1], 6)).unwrap();
            assert_eq!(d.a, BigInt::from(120));
        }
    }

    #[test]
    fn signs() {
        assert_eq!(cycle_type_sign(&ct(&[], 5)), 1);
        assert_eq!(cycle_type_sign(&ct(&[2], 4)), -1);
        assert_eq!(cycle_type_sign(&ct(&[3, 2], 7)), -1);
        assert_eq!(cycle_type_sign(&ct(&[3, 3], 7)), 1);
    }

    #[test]
    fn centralizers() {
        assert_eq!(centralizer_order(&p(&[1, 1, 1])), BigUint::from(6u32));
        assert_eq!(centralizer_order(&p(&[2, 2])), BigUint::from(8u32));
        assert_eq!(centralizer_order(&p(&[3, 1])), BigUint::from(3u32));
        assert_eq!(ct(&[2], 4).full_type(), p(&[2, 1, 1]));
    }

    #[test]
    fn falling_factorials() {
        assert_eq!(falling_factorial(10, 3).unwrap(), BigUint::from(720u32));
        assert_eq!(falling_factorial(4, 0).unwrap(), BigUint::one());
        assert!(falling_factorial(2, 3).is_err());
    }
}
