//! Thin indirection over rayon so the crate builds with or without the
//! `parallel` feature. Every helper returns results in index order, so the
//! two implementations are observably identical.

#[cfg(feature = "parallel")]
pub(crate) fn map_range<T, F>(n: usize, f: F) -> Vec<T>
where
    T: Send,
    F: Fn(usize) -> T + Sync + Send,
{
    use rayon::prelude::*;
    (0..n).into_par_iter().map(f).collect()
}

#[cfg(not(feature = "parallel"))]
pub(crate) fn map_range<T, F>(n: usize, f: F) -> Vec<T>
where
    F: Fn(usize) -> T,
{
    (0..n).map(f).collect()
}

/// Cap the global worker count (for a CLI `--jobs` flag). A no-op once a
/// pool exists, and always a no-op without the `parallel` feature.
#[cfg(feature = "parallel")]
pub fn configure_threads(jobs: usize) {
    let _ = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs)
        .build_global();
}

#[cfg(not(feature = "parallel"))]
pub fn configure_threads(_jobs: usize) {}

/// Sequential version, always available; used by the benchmarks as the
/// baseline and by callers that are already inside a parallel region.
pub(crate) fn map_range_seq<T, F>(n: usize, f: F) -> Vec<T>
where
    F: Fn(usize) -> T,
{
    (0..n).map(f).collect()
}
