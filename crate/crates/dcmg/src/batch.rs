//! Order-preserving map over a batch of independent work items.
//!
//! With the `parallel` feature (default) the work is distributed with rayon;
//! without it the same API runs sequentially. Everything in this crate that
//! is data-parallel (multistart solves, property sweeps, batch analysis)
//! funnels through [`map`], so a single feature flag flips the whole crate.

#[cfg(feature = "parallel")]
use rayon::prelude::*;

/// True when this build distributes batch work across threads.
pub const fn parallel_enabled() -> bool {
    cfg!(feature = "parallel")
}

/// Map `f` over `items`, preserving order.
#[cfg(feature = "parallel")]
pub fn map<T, U, F>(items: &[T], f: F) -> Vec<U>
where
    T: Sync,
    U: Send,
    F: Fn(&T) -> U + Send + Sync,
{
    items.par_iter().map(f).collect()
}

/// Map `f` over `items`, preserving order.
#[cfg(not(feature = "parallel"))]
pub fn map<T, U, F>(items: &[T], f: F) -> Vec<U>
where
    F: Fn(&T) -> U,
{
    items.iter().map(f).collect()
}

/// Sequential reference path, kept available in parallel builds so the two
/// can be compared (used by the benches).
pub fn map_sequential<T, U, F>(items: &[T], f: F) -> Vec<U>
where
    F: Fn(&T) -> U,
{
    items.iter().map(f).collect()
}
