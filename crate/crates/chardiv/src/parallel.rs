//! Data-parallel censuses over contiguous shards of the partition index
//! space.
//!
//! Each shard is counted independently (with its own character cache) and
//! the counts are summed, so the result cannot depend on the worker count or
//! on which worker picked up which shard.

use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::Mutex;
use std::thread;

use chardiv_core::census::{census_range, check_series, CensusKind, CensusReport};
use chardiv_core::partition::PartitionIndexRange;
use chardiv_core::Result;

/// Shards per worker; keeps workers busy when shard costs differ.
const SHARDS_PER_WORKER: usize = 8;

/// Census over every partition of `n` using up to `workers` threads.
pub fn census(n: usize, kind: &CensusKind, workers: usize) -> Result<CensusReport> {
    kind.validate(n)?;
    let full = PartitionIndexRange::full(n)?;
    let workers = workers.max(1);
    if workers == 1 {
        let count = census_range(kind, full)?;
        return Ok(CensusReport::new(n, kind.clone(), count));
    }

    let shards = full.split(workers * SHARDS_PER_WORKER);
    let next = AtomicUsize::new(0);
    let counts = Mutex::new(vec![None; shards.len()]);
    thread::scope(|scope| {
        for _ in 0..workers.min(shards.len()) {
            scope.spawn(|| loop {
                let i = next.fetch_add(1, Ordering::Relaxed);
                let Some(&shard) = shards.get(i) else { break };
                let result = census_range(kind, shard);
                let failed = result.is_err();
                counts.lock().unwrap()[i] = Some(result);
                if failed {
                    break;
                }
            });
        }
    });

    let mut total = 0u64;
    // a shard left unclaimed means another one failed; its error is
    // reported from its own slot
    for result in counts.into_inner().unwrap().into_iter().flatten() {
        total += result?;
    }
    Ok(CensusReport::new(n, kind.clone(), total))
}

/// One report per entry of `ns` (non-empty, strictly ascending).
pub fn trend_report(ns: &[usize], kind: &CensusKind, workers: usize) -> Result<Vec<CensusReport>> {
    check_series(ns)?;
    for &n in ns {
        kind.validate(n)?;
    }
    ns.iter().map(|&n| census(n, kind, workers)).collect()
}
