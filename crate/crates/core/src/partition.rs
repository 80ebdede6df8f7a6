//! Ordered fan-out over an outer loop.
//!
//! The outer range is split across a dedicated pool of `jobs` workers and
//! the per-index results come back in index order, so merged output is
//! identical to a sequential run.

use std::ops::Range;

use rayon::prelude::*;

use crate::error::{Error, Result, Violation};

pub fn map_ordered<R, F>(outer: Range<u64>, jobs: usize, f: F) -> Result<Vec<R>>
where
    R: Send,
    F: Fn(u64) -> Result<R> + Sync + Send,
{
    match jobs {
        0 => Err(Violation::NonPositive("jobs").into()),
        1 => outer.map(f).collect(),
        _ => {
            let pool = rayon::ThreadPoolBuilder::new()
                .num_threads(jobs)
                .build()
                .map_err(|e| Error::Pool(e.to_string()))?;
            pool.install(|| outer.into_par_iter().map(f).collect())
        }
    }
}

/// Like [`map_ordered`], flattening each index's batch in order.
pub fn flat_map_ordered<T, F>(outer: Range<u64>, jobs: usize, f: F) -> Result<Vec<T>>
where
    T: Send,
    F: Fn(u64) -> Result<Vec<T>> + Sync + Send,
{
    Ok(map_ordered(outer, jobs, f)?.into_iter().flatten().collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parallel_matches_sequential() {
        let f = |i: u64| Ok((0..i % 7).map(|j| i * 10 + j).collect::<Vec<_>>());
        let seq = flat_map_ordered(0..500, 1, f).unwrap();
        for jobs in [2, 4, 8] {
            assert_eq!(flat_map_ordered(0..500, jobs, f).unwrap(), seq);
        }
    }

    #[test]
    fn zero_jobs_rejected() {
        assert!(map_ordered(0..3, 0, Ok).is_err());
    }

    #[test]
    fn errors_propagate() {
        let r = map_ordered(0..100, 4, |i| {
            if i == 57 {
                Err(Error::Overflow("test"))
            } else {
                Ok(i)
            }
        });
        assert_eq!(r, Err(Error::Overflow("test")));
    }
}
