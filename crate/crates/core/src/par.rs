//! Fixed-size chunking for range-parallel work.
//!
//! Chunk boundaries depend only on the range and `CHUNK`, never on the
//! number of worker threads, and partial results come back in chunk order.
//! Floating-point reductions over the chunk results are therefore identical
//! for any pool size.

use rayon::prelude::*;

pub(crate) const CHUNK: i64 = 4096;

/// Splits `lo..=hi` into `CHUNK`-sized pieces, maps each in parallel and
/// returns the results in ascending chunk order.
pub(crate) fn map_chunks<T, F>(lo: i64, hi: i64, f: F) -> Vec<T>
where
    T: Send,
    F: Fn(i64, i64) -> T + Sync + Send,
{
    if hi < lo {
        return Vec::new();
    }
    let span = (hi as i128 - lo as i128 + 1) as u128;
    let chunks = span.div_ceil(CHUNK as u128) as u64;
    (0..chunks)
        .into_par_iter()
        .map(|c| {
            let start = lo + (c as i64) * CHUNK;
            let end = hi.min(start + CHUNK - 1);
            f(start, end)
        })
        .collect()
}
