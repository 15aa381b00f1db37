//! Parallel execution helpers.
//!
//! The data-parallel loops (grid sweeps, search trials) run on rayon when
//! the `parallel` feature is enabled and fall back to plain iteration
//! otherwise. Both paths produce results in input order, so downstream
//! aggregation is identical either way. [`map_sequential`] is always
//! available so benchmarks can compare the two.

#[cfg(feature = "parallel")]
use rayon::prelude::*;

/// Map `f` over `items`, in parallel when built with the `parallel` feature.
/// Output order matches input order.
pub fn map<T, U, F>(items: Vec<T>, f: F) -> Vec<U>
where
    T: Send,
    U: Send,
    F: Fn(T) -> U + Sync + Send,
{
    #[cfg(feature = "parallel")]
    {
        items.into_par_iter().map(f).collect()
    }
    #[cfg(not(feature = "parallel"))]
    {
        items.into_iter().map(f).collect()
    }
}

/// Single-threaded map with the same signature, for baseline comparisons.
pub fn map_sequential<T, U, F>(items: Vec<T>, f: F) -> Vec<U>
where
    F: Fn(T) -> U,
{
    items.into_iter().map(f).collect()
}

/// Cap the worker count for all parallel regions. `None` or `Some(0)` keeps
/// the automatic sizing. Call once at startup; later calls are ignored.
pub fn init_threads(cap: Option<usize>) {
    #[cfg(feature = "parallel")]
    {
        if let Some(n) = cap {
            if n > 0 {
                let _ = rayon::ThreadPoolBuilder::new().num_threads(n).build_global();
            }
        }
    }
    #[cfg(not(feature = "parallel"))]
    {
        let _ = cap;
    }
}

/// Read the worker cap from the `MLLAB_THREADS` environment variable
/// (0 = automatic).
pub fn thread_cap_from_env() -> Option<usize> {
    std::env::var("MLLAB_THREADS")
        .ok()
        .and_then(|v| v.trim().parse::<usize>().ok())
        .filter(|&n| n > 0)
}
