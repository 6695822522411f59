// Thin layer over rayon so the algorithms read the same with and without the
// `parallel` feature. All helpers preserve index order in their outputs.

use alloc::vec::Vec;
use core::sync::atomic::{AtomicBool, AtomicUsize, Ordering};

#[cfg(feature = "parallel")]
pub(crate) fn map_range<T, F>(len: usize, f: F) -> Vec<T>
where
    T: Send,
    F: Fn(usize) -> T + Sync + Send,
{
    use rayon::prelude::*;
    (0..len).into_par_iter().map(f).collect()
}

#[cfg(not(feature = "parallel"))]
pub(crate) fn map_range<T, F>(len: usize, f: F) -> Vec<T>
where
    T: Send,
    F: Fn(usize) -> T + Sync + Send,
{
    (0..len).map(f).collect()
}

/// Counts indices satisfying `pred`, giving up (returning `None`) as soon as
/// the count exceeds `limit`. The answer is schedule-independent.
pub(crate) fn count_up_to<F>(len: usize, limit: usize, pred: F) -> Option<usize>
where
    F: Fn(usize) -> bool + Sync + Send,
{
    let count = AtomicUsize::new(0);
    let over = AtomicBool::new(false);
    let body = |i: usize| {
        if over.load(Ordering::Relaxed) {
            return Err(());
        }
        if pred(i) && count.fetch_add(1, Ordering::Relaxed) + 1 > limit {
            over.store(true, Ordering::Relaxed);
            return Err(());
        }
        Ok(())
    };
    #[cfg(feature = "parallel")]
    let res = {
        use rayon::prelude::*;
        (0..len).into_par_iter().try_for_each(body)
    };
    #[cfg(not(feature = "parallel"))]
    let res = (0..len).try_for_each(body);
    match res {
        Ok(()) => Some(count.into_inner()),
        Err(()) => None,
    }
}
