//! Sharded scans with a deterministic first-witness result.
//!
//! An index range is cut into contiguous chunks, one per worker. Each worker
//! returns the first hit in its chunk; the overall answer is the hit with the
//! smallest index, which is exactly what a sequential scan would return.

use std::ops::Range;

/// Worker count from `RAMSEYFORGE_WORKERS`, defaulting to 1.
pub fn default_workers() -> usize {
    std::env::var("RAMSEYFORGE_WORKERS")
        .ok()
        .and_then(|v| v.trim().parse().ok())
        .filter(|&w: &usize| w >= 1)
        .unwrap_or(1)
}

/// Runs `scan` over contiguous chunks of `0..len` and returns the hit with the
/// lowest index. `scan` must return the first hit (by index) of its chunk.
pub fn first_hit<T, F>(len: u64, workers: usize, scan: F) -> Option<(u64, T)>
where
    T: Send,
    F: Fn(Range<u64>) -> Option<(u64, T)> + Sync,
{
    let workers = (workers.max(1) as u64).min(len.max(1));
    if workers <= 1 {
        return scan(0..len);
    }
    let chunk = len.div_ceil(workers);
    let ranges: Vec<Range<u64>> = (0..workers)
        .map(|i| (i * chunk).min(len)..((i + 1) * chunk).min(len))
        .filter(|r| !r.is_empty())
        .collect();
    let results: Vec<Option<(u64, T)>> = std::thread::scope(|s| {
        let handles: Vec<_> = ranges
            .into_iter()
            .map(|r| {
                let scan = &scan;
                s.spawn(move || scan(r))
            })
            .collect();
        handles
            .into_iter()
            .map(|h| h.join().expect("scan worker panicked"))
            .collect()
    });
    // Chunks are in index order, so the first non-empty chunk result wins.
    results.into_iter().flatten().next()
}

/// Sums `count` over contiguous chunks of `0..len`.
pub fn sum<F>(len: u64, workers: usize, count: F) -> u64
where
    F: Fn(Range<u64>) -> u64 + Sync,
{
    let workers = (workers.max(1) as u64).min(len.max(1));
    if workers <= 1 {
        return count(0..len);
    }
    let chunk = len.div_ceil(workers);
    std::thread::scope(|s| {
        let handles: Vec<_> = (0..workers)
            .map(|i| {
                let r = (i * chunk).min(len)..((i + 1) * chunk).min(len);
                let count = &count;
                s.spawn(move || count(r))
            })
            .collect();
        handles
            .into_iter()
            .map(|h| h.join().expect("count worker panicked"))
            .sum()
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn scan(hits: &[u64]) -> impl Fn(Range<u64>) -> Option<(u64, u64)> + Sync + '_ {
        move |r: Range<u64>| r.clone().find(|i| hits.contains(i)).map(|i| (i, i * 10))
    }

    #[test]
    fn same_answer_for_any_worker_count() {
        let hits = [37u64, 90, 91];
        for w in [1, 2, 3, 4, 7, 200] {
            assert_eq!(first_hit(100, w, scan(&hits)), Some((37, 370)));
            assert_eq!(first_hit(30, w, scan(&hits)), None);
            assert_eq!(sum(100, w, |r| r.filter(|i| i % 3 == 0).count() as u64), 34);
        }
        assert_eq!(first_hit(0, 4, scan(&hits)), None);
    }
}
