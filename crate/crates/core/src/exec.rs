//! Data-parallel helpers. With the `parallel` feature (default) the maps
//! run on rayon; without it they fall back to plain iteration. Results are
//! order-stable either way.

#[cfg(feature = "parallel")]
use rayon::prelude::*;

#[cfg(feature = "parallel")]
pub fn map_indexed<U: Send>(len: usize, f: impl Fn(usize) -> U + Sync + Send) -> Vec<U> {
    (0..len).into_par_iter().map(f).collect()
}

#[cfg(not(feature = "parallel"))]
pub fn map_indexed<U>(len: usize, f: impl Fn(usize) -> U) -> Vec<U> {
    (0..len).map(f).collect()
}

/// Sequential twin of [`map_indexed`], kept available under every feature
/// set so benchmarks can compare the two paths directly.
pub fn map_indexed_seq<U>(len: usize, f: impl Fn(usize) -> U) -> Vec<U> {
    (0..len).map(f).collect()
}

#[cfg(feature = "parallel")]
pub fn map_slice<T: Sync, U: Send>(items: &[T], f: impl Fn(&T) -> U + Sync + Send) -> Vec<U> {
    items.par_iter().map(f).collect()
}

#[cfg(not(feature = "parallel"))]
pub fn map_slice<T, U>(items: &[T], f: impl Fn(&T) -> U) -> Vec<U> {
    items.iter().map(f).collect()
}

pub fn map_slice_seq<T, U>(items: &[T], f: impl Fn(&T) -> U) -> Vec<U> {
    items.iter().map(f).collect()
}
