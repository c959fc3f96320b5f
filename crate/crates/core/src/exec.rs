//! Execution strategy for the enumeration-heavy loops.
//!
//! Every parallel loop in the crate goes through [`Exec`], so the same call
//! site can run on the rayon pool or on the current thread. Without the
//! `parallel` feature, [`Exec::Parallel`] falls back to the sequential path.
//! Results never depend on the strategy: ordered collections are merged in
//! index order and reductions are associative and commutative.

#[cfg(feature = "parallel")]
use rayon::prelude::*;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Exec {
    Sequential,
    #[default]
    Parallel,
}

impl Exec {
    /// Whether this strategy actually runs on more than one thread.
    pub fn is_parallel(self) -> bool {
        cfg!(feature = "parallel") && self == Exec::Parallel
    }

    /// `(0..n).filter_map(f)`, preserving index order.
    pub fn filter_map_range<T, F>(self, n: u64, f: F) -> Vec<T>
    where
        T: Send,
        F: Fn(u64) -> Option<T> + Sync + Send,
    {
        #[cfg(feature = "parallel")]
        if self.is_parallel() {
            return (0..n).into_par_iter().filter_map(f).collect();
        }
        (0..n).filter_map(f).collect()
    }

    /// `(0..n).map(f).min()`.
    pub fn min_range<T, F>(self, n: u64, f: F) -> Option<T>
    where
        T: Ord + Send,
        F: Fn(u64) -> T + Sync + Send,
    {
        #[cfg(feature = "parallel")]
        if self.is_parallel() {
            return (0..n).into_par_iter().map(f).min();
        }
        (0..n).map(f).min()
    }

    /// `(0..n).all(f)`.
    pub fn all_range<F>(self, n: u64, f: F) -> bool
    where
        F: Fn(u64) -> bool + Sync + Send,
    {
        #[cfg(feature = "parallel")]
        if self.is_parallel() {
            return (0..n).into_par_iter().all(f);
        }
        (0..n).all(f)
    }

    /// `items.iter().map(f).collect()`, preserving order.
    pub fn map_slice<S, T, F>(self, items: &[S], f: F) -> Vec<T>
    where
        S: Sync,
        T: Send,
        F: Fn(&S) -> T + Sync + Send,
    {
        #[cfg(feature = "parallel")]
        if self.is_parallel() {
            return items.par_iter().map(f).collect();
        }
        items.iter().map(f).collect()
    }

    /// `items.iter().all(f)`.
    pub fn all_slice<S, F>(self, items: &[S], f: F) -> bool
    where
        S: Sync,
        F: Fn(&S) -> bool + Sync + Send,
    {
        #[cfg(feature = "parallel")]
        if self.is_parallel() {
            return items.par_iter().all(f);
        }
        items.iter().all(f)
    }
}

/// Sizes the global worker pool. Has no effect once the pool is running, or
/// without the `parallel` feature.
pub fn configure_threads(threads: usize) {
    #[cfg(feature = "parallel")]
    {
        let _ = rayon::ThreadPoolBuilder::new()
            .num_threads(threads)
            .build_global();
    }
    #[cfg(not(feature = "parallel"))]
    let _ = threads;
}
