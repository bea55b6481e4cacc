//! Execution strategy for the batch loops in this crate.
//!
//! Builds with the `parallel` feature fan index ranges out over rayon's
//! global pool. Without the feature, [`Strategy::Parallel`] quietly runs
//! sequentially, so callers never need their own `cfg` gates.

#[cfg(feature = "parallel")]
use rayon::prelude::*;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Strategy {
    Sequential,
    Parallel,
}

impl Default for Strategy {
    fn default() -> Self {
        if cfg!(feature = "parallel") {
            Strategy::Parallel
        } else {
            Strategy::Sequential
        }
    }
}

impl Strategy {
    /// Maps `f` over `0..n`, preserving index order in the output.
    pub fn map<T, F>(self, n: usize, f: F) -> Vec<T>
    where
        T: Send,
        F: Fn(usize) -> T + Sync + Send,
    {
        match self {
            #[cfg(feature = "parallel")]
            Strategy::Parallel => (0..n).into_par_iter().map(f).collect(),
            _ => (0..n).map(f).collect(),
        }
    }

    /// Returns true iff `pred` holds on every index in `0..n`.
    pub fn all<F>(self, n: usize, pred: F) -> bool
    where
        F: Fn(usize) -> bool + Sync + Send,
    {
        match self {
            #[cfg(feature = "parallel")]
            Strategy::Parallel => (0..n).into_par_iter().all(pred),
            _ => (0..n).all(pred),
        }
    }

    /// Maps then keeps the `Some` results, in index order.
    pub fn filter_map<T, F>(self, n: usize, f: F) -> Vec<T>
    where
        T: Send,
        F: Fn(usize) -> Option<T> + Sync + Send,
    {
        match self {
            #[cfg(feature = "parallel")]
            Strategy::Parallel => (0..n).into_par_iter().filter_map(f).collect(),
            _ => (0..n).filter_map(f).collect(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn strategies_agree_and_keep_order() {
        let seq = Strategy::Sequential.map(100, |i| i * i);
        let par = Strategy::Parallel.map(100, |i| i * i);
        assert_eq!(seq, par);
        assert_eq!(
            Strategy::Parallel.filter_map(10, |i| (i % 3 == 0).then_some(i)),
            vec![0, 3, 6, 9]
        );
        assert!(Strategy::Parallel.all(50, |i| i < 50));
        assert!(!Strategy::Sequential.all(50, |i| i < 49));
    }
}
