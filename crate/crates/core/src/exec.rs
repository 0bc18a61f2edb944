//! Grid execution helpers: data-parallel by default, sequential when the
//! `parallel` feature is disabled. Results are always assembled in input
//! order, so output is worker-count independent.

#[cfg(feature = "parallel")]
use rayon::prelude::*;

/// Maps `f` over `items`, in parallel when the `parallel` feature is enabled.
pub fn map_collect<T, U, F>(items: &[T], f: F) -> Vec<U>
where
    T: Sync,
    U: Send,
    F: Fn(&T) -> U + Sync + Send,
{
    #[cfg(feature = "parallel")]
    {
        items.par_iter().map(f).collect()
    }
    #[cfg(not(feature = "parallel"))]
    {
        items.iter().map(f).collect()
    }
}

/// Always-sequential counterpart of [`map_collect`]; the benchmark baseline.
pub fn map_collect_seq<T, U, F>(items: &[T], f: F) -> Vec<U>
where
    F: Fn(&T) -> U,
{
    items.iter().map(f).collect()
}

/// Caps the worker pool from the `QGENZ_THREADS` environment variable.
/// No-op when the variable is unset, unparsable, or the pool already exists;
/// no-op entirely in sequential builds.
pub fn configure_threads_from_env() {
    #[cfg(feature = "parallel")]
    {
        if let Ok(v) = std::env::var("QGENZ_THREADS") {
            if let Ok(n) = v.trim().parse::<usize>() {
                if n >= 1 {
                    let _ = rayon::ThreadPoolBuilder::new().num_threads(n).build_global();
                }
            }
        }
    }
}
