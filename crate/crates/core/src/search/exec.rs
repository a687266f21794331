//! Sequential or data-parallel execution of independent work units.
//!
//! Without the `parallel` feature every strategy runs on the calling thread.

#[cfg(feature = "parallel")]
use rayon::prelude::*;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Execution {
    Sequential,
    /// Rayon pool with the given number of workers (0 = rayon's default).
    Parallel { jobs: usize },
}

impl Execution {
    pub fn with_jobs(jobs: usize) -> Self {
        if jobs == 1 {
            Execution::Sequential
        } else {
            Execution::Parallel { jobs }
        }
    }

    #[cfg(feature = "parallel")]
    fn pool(jobs: usize) -> rayon::ThreadPool {
        rayon::ThreadPoolBuilder::new()
            .num_threads(jobs)
            .build()
            .expect("thread pool")
    }

    /// Maps every unit and folds the results with an associative,
    /// commutative `merge`.
    pub fn map_reduce<U, R, M, G>(self, units: &[U], map: M, merge: G) -> R
    where
        U: Sync,
        R: Default + Send,
        M: Fn(&U) -> R + Sync + Send,
        G: Fn(R, R) -> R + Sync + Send,
    {
        match self {
            Execution::Sequential => units.iter().map(&map).fold(R::default(), &merge),
            #[cfg(feature = "parallel")]
            Execution::Parallel { jobs } => Self::pool(jobs)
                .install(|| units.par_iter().map(&map).reduce(R::default, &merge)),
            #[cfg(not(feature = "parallel"))]
            Execution::Parallel { .. } => units.iter().map(&map).fold(R::default(), &merge),
        }
    }

    /// The first `Some` in unit order.
    pub fn find_map_first<U, R, M>(self, units: &[U], map: M) -> Option<R>
    where
        U: Sync,
        R: Send,
        M: Fn(&U) -> Option<R> + Sync + Send,
    {
        match self {
            Execution::Sequential => units.iter().find_map(&map),
            #[cfg(feature = "parallel")]
            Execution::Parallel { jobs } => {
                Self::pool(jobs).install(|| units.par_iter().find_map_first(&map))
            }
            #[cfg(not(feature = "parallel"))]
            Execution::Parallel { .. } => units.iter().find_map(&map),
        }
    }
}

impl Default for Execution {
    fn default() -> Self {
        Execution::Parallel { jobs: 0 }
    }
}
