//! Data-parallel helpers with a sequential fallback.
//!
//! With the `parallel` feature, work is spread over a rayon pool; without
//! it (or with `jobs == 1`) everything runs on the calling thread. Results
//! never depend on the schedule: maps preserve input order and searches
//! reduce by smallest index.

#[cfg(feature = "parallel")]
use rayon::prelude::*;

/// Parallelism request. `0` means "use the default pool".
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Jobs(pub usize);

impl Jobs {
    pub const SEQUENTIAL: Jobs = Jobs(1);
    pub const DEFAULT: Jobs = Jobs(0);

    pub fn is_sequential(self) -> bool {
        self.0 == 1 || !cfg!(feature = "parallel")
    }

    #[cfg(feature = "parallel")]
    fn install<R: Send>(self, op: impl FnOnce() -> R + Send) -> R {
        if self.0 == 0 {
            return op();
        }
        match rayon::ThreadPoolBuilder::new().num_threads(self.0).build() {
            Ok(pool) => pool.install(op),
            Err(_) => op(),
        }
    }
}

impl Default for Jobs {
    fn default() -> Self {
        Jobs::DEFAULT
    }
}

/// Order-preserving map.
pub fn map<T, R, F>(items: &[T], jobs: Jobs, f: F) -> Vec<R>
where
    T: Sync,
    R: Send,
    F: Fn(&T) -> R + Sync + Send,
{
    #[cfg(feature = "parallel")]
    if !jobs.is_sequential() {
        return jobs.install(|| items.par_iter().map(&f).collect());
    }
    let _ = jobs;
    items.iter().map(f).collect()
}

/// Evaluates `f(0), f(1), ...` up to `limit` and returns the hit with the
/// smallest index together with that index.
///
/// Candidates are processed in chunks; every candidate in a chunk may be
/// evaluated even when an earlier one hits, but the reported hit is always
/// the first one.
pub fn first_hit<R, F>(limit: usize, jobs: Jobs, f: F) -> Option<(usize, R)>
where
    R: Send,
    F: Fn(usize) -> Option<R> + Sync + Send,
{
    #[cfg(feature = "parallel")]
    if !jobs.is_sequential() {
        return jobs.install(|| {
            let chunk = 4 * rayon::current_num_threads();
            let mut start = 0;
            while start < limit {
                let end = (start + chunk).min(limit);
                let hit = (start..end)
                    .into_par_iter()
                    .filter_map(|i| f(i).map(|r| (i, r)))
                    .min_by_key(|(i, _)| *i);
                if hit.is_some() {
                    return hit;
                }
                start = end;
            }
            None
        });
    }
    let _ = jobs;
    (0..limit).find_map(|i| f(i).map(|r| (i, r)))
}
