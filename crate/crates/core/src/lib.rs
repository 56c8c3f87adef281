//! Exact arithmetic for the characters of the symmetric groups.
//!
//! This crate covers integer partitions and their hook lengths, the abacus
//! (beta-set) description of q-cores, q-quotients and q-core towers, q-adic
//! valuations of factorials and of character degrees, Murnaghan–Nakayama
//! evaluation of character values, and exhaustive divisibility censuses over
//! all partitions of a fixed size.
//!
//! The crate is `no_std` and only needs `alloc`. Threading, file formats and
//! the command-line front end live in the `chardiv` crate.

#![no_std]

extern crate alloc;

pub mod abacus;
pub mod census;
pub mod character;
mod error;
pub mod partition;
pub mod valuation;

pub use abacus::{BetaSet, CoreTower, WeightVector};
pub use census::{BoundReport, CensusKind, CensusReport};
pub use character::{CharacterEvaluator, CycleType, LassalleDecomposition};
pub use error::{Error, Result};
pub use partition::{HookMultiset, Partition, PartitionIndexRange, Partitions};
pub use valuation::{QaryExpansion, Valuation};
