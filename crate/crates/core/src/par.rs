//! Data-parallel helpers.
//!
//! With the `parallel` feature (default) the heavy inner loops — row
//! elimination, per-basis axiom sweeps, suite cases — run on rayon.
//! Without it everything falls back to plain sequential iteration, so the
//! crate builds with no rayon dependency at all. Both code paths produce
//! identical results; parallel searches return the *first* hit in index
//! order so witnesses stay deterministic.

/// Execution mode for the hot loops. `Parallel` is only honoured when the
/// `parallel` feature is enabled; otherwise it degrades to `Sequential`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ExecMode {
    Sequential,
    Parallel,
}

impl ExecMode {
    pub fn default_mode() -> ExecMode {
        if cfg!(feature = "parallel") {
            ExecMode::Parallel
        } else {
            ExecMode::Sequential
        }
    }
}

/// Rows below a threshold are not worth the fork/join overhead.
pub const PAR_MIN_LEN: usize = 24;

#[cfg(feature = "parallel")]
pub fn for_each_mut<T: Send, F: Fn(usize, &mut T) + Sync + Send>(mode: ExecMode, items: &mut [T], f: F) {
    use rayon::prelude::*;
    if mode == ExecMode::Parallel && items.len() >= PAR_MIN_LEN {
        items.par_iter_mut().enumerate().for_each(|(i, t)| f(i, t));
    } else {
        for (i, t) in items.iter_mut().enumerate() {
            f(i, t);
        }
    }
}

#[cfg(not(feature = "parallel"))]
pub fn for_each_mut<T, F: Fn(usize, &mut T)>(_mode: ExecMode, items: &mut [T], f: F) {
    for (i, t) in items.iter_mut().enumerate() {
        f(i, t);
    }
}

#[cfg(feature = "parallel")]
pub fn map_indexed<R: Send, F: Fn(usize) -> R + Sync + Send>(mode: ExecMode, n: usize, f: F) -> Vec<R> {
    use rayon::prelude::*;
    if mode == ExecMode::Parallel && n >= PAR_MIN_LEN {
        (0..n).into_par_iter().map(f).collect()
    } else {
        (0..n).map(f).collect()
    }
}

#[cfg(not(feature = "parallel"))]
pub fn map_indexed<R, F: Fn(usize) -> R>(_mode: ExecMode, n: usize, f: F) -> Vec<R> {
    (0..n).map(f).collect()
}

/// First index (in order) for which `f` returns a witness.
#[cfg(feature = "parallel")]
pub fn find_first<R: Send, F: Fn(usize) -> Option<R> + Sync + Send>(
    mode: ExecMode,
    n: usize,
    f: F,
) -> Option<R> {
    use rayon::prelude::*;
    if mode == ExecMode::Parallel && n >= PAR_MIN_LEN {
        (0..n).into_par_iter().find_map_first(f)
    } else {
        (0..n).find_map(f)
    }
}

#[cfg(not(feature = "parallel"))]
pub fn find_first<R, F: Fn(usize) -> Option<R>>(_mode: ExecMode, n: usize, f: F) -> Option<R> {
    (0..n).find_map(f)
}
