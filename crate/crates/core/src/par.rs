//! Data-parallel map helpers.
//!
//! The heavy inner loops of this crate (finite-difference gradients,
//! multi-start descent, Monte-Carlo certification sweeps) are all
//! independent evaluations indexed by an integer. They run through
//! [`map_indexed`], which dispatches to rayon when the `parallel`
//! feature is enabled and falls back to a plain sequential loop
//! otherwise. Results are always collected in index order, so the two
//! paths are bit-identical.

#[cfg(feature = "parallel")]
use rayon::prelude::*;

/// Maps `f` over `0..n`, in parallel when the `parallel` feature is on.
pub fn map_indexed<T, F>(n: usize, f: F) -> Vec<T>
where
    T: Send,
    F: Fn(usize) -> T + Sync,
{
    #[cfg(feature = "parallel")]
    {
        map_indexed_par(n, f)
    }
    #[cfg(not(feature = "parallel"))]
    {
        map_indexed_seq(n, f)
    }
}

/// Sequential map over `0..n`. Always available; used by the benchmark
/// suite as the baseline against the rayon path.
pub fn map_indexed_seq<T, F>(n: usize, f: F) -> Vec<T>
where
    T: Send,
    F: Fn(usize) -> T + Sync,
{
    (0..n).map(f).collect()
}

/// Rayon map over `0..n`.
#[cfg(feature = "parallel")]
pub fn map_indexed_par<T, F>(n: usize, f: F) -> Vec<T>
where
    T: Send,
    F: Fn(usize) -> T + Sync,
{
    (0..n).into_par_iter().map(f).collect()
}
