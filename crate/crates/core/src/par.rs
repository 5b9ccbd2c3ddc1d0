//! Data-parallel helpers. With the `parallel` feature the work is split over
//! the rayon pool; without it, or under [`Parallelism::Sequential`], every
//! helper runs on the calling thread.

use serde::{Deserialize, Serialize};

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Parallelism {
    #[default]
    Parallel,
    Sequential,
}

impl Parallelism {
    /// Whether work will actually fan out in this build.
    pub fn is_parallel(self) -> bool {
        cfg!(feature = "parallel") && self == Parallelism::Parallel
    }
}

/// `items.iter().map(f).collect()`, order preserved.
pub fn map<T, R, F>(p: Parallelism, items: &[T], f: F) -> Vec<R>
where
    T: Sync,
    R: Send,
    F: Fn(&T) -> R + Sync + Send,
{
    #[cfg(feature = "parallel")]
    if p.is_parallel() {
        use rayon::prelude::*;
        return items.par_iter().map(f).collect();
    }
    let _ = p;
    items.iter().map(f).collect()
}

/// Folds `0..n` into per-worker accumulators and merges them.
pub fn fold_range<A, I, F, M>(p: Parallelism, n: u64, init: I, fold: F, merge: M) -> A
where
    A: Send,
    I: Fn() -> A + Sync + Send,
    F: Fn(A, u64) -> A + Sync + Send,
    M: Fn(A, A) -> A + Sync + Send,
{
    #[cfg(feature = "parallel")]
    if p.is_parallel() && n > 64 {
        use rayon::prelude::*;
        return (0..n).into_par_iter().fold(&init, &fold).reduce(&init, &merge);
    }
    let _ = (p, &merge);
    (0..n).fold(init(), fold)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn modes_agree() {
        let xs: Vec<u64> = (0..1000).collect();
        for p in [Parallelism::Parallel, Parallelism::Sequential] {
            assert_eq!(map(p, &xs, |x| x * 2)[999], 1998);
            let s = fold_range(p, 1000, || 0u64, |a, i| a + i, |a, b| a + b);
            assert_eq!(s, 499_500);
        }
    }
}
