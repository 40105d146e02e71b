//! Order-preserving map over independent work items.
//!
//! With the `parallel` feature the work is spread over a rayon pool; without
//! it, or with [`Jobs::Fixed`] set to one, items are processed in order on the
//! calling thread. Output order always matches input order.

use std::num::NonZeroUsize;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Jobs {
    /// Use every available core.
    #[default]
    Auto,
    Fixed(NonZeroUsize),
}

impl Jobs {
    pub const SEQUENTIAL: Jobs = Jobs::Fixed(NonZeroUsize::MIN);

    /// `0` means [`Jobs::Auto`].
    pub fn from_count(count: usize) -> Jobs {
        NonZeroUsize::new(count).map_or(Jobs::Auto, Jobs::Fixed)
    }

    pub fn is_sequential(self) -> bool {
        self == Jobs::SEQUENTIAL || !cfg!(feature = "parallel")
    }
}

pub fn map<T, R, F>(items: &[T], jobs: Jobs, f: F) -> Vec<R>
where
    T: Sync,
    R: Send,
    F: Fn(&T) -> R + Sync + Send,
{
    if jobs.is_sequential() {
        return items.iter().map(f).collect();
    }
    parallel_map(items, jobs, f)
}

#[cfg(feature = "parallel")]
fn parallel_map<T, R, F>(items: &[T], jobs: Jobs, f: F) -> Vec<R>
where
    T: Sync,
    R: Send,
    F: Fn(&T) -> R + Sync + Send,
{
    use rayon::prelude::*;

    match jobs {
        Jobs::Auto => items.par_iter().map(f).collect(),
        Jobs::Fixed(threads) => match rayon::ThreadPoolBuilder::new()
            .num_threads(threads.get())
            .build()
        {
            Ok(pool) => pool.install(|| items.par_iter().map(f).collect()),
            Err(_) => items.iter().map(f).collect(),
        },
    }
}

#[cfg(not(feature = "parallel"))]
fn parallel_map<T, R, F>(items: &[T], _jobs: Jobs, f: F) -> Vec<R>
where
    T: Sync,
    R: Send,
    F: Fn(&T) -> R + Sync + Send,
{
    items.iter().map(f).collect()
}
