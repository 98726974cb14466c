//! Batch normalization over many utterances.
//!
//! With the `parallel` feature (on by default) [`normalize_batch`] spreads
//! lines over the rayon pool; without it, it falls back to a plain loop.
//! Output order always matches input order.

use crate::pipeline::{NormalizationResult, Normalizer};

pub fn normalize_batch_sequential<S: AsRef<str>>(
    normalizer: &Normalizer,
    lines: &[S],
    enable_preprocessing: bool,
) -> Vec<NormalizationResult> {
    lines
        .iter()
        .map(|line| normalizer.normalize(line.as_ref(), enable_preprocessing))
        .collect()
}

#[cfg(feature = "parallel")]
pub fn normalize_batch_parallel<S: AsRef<str> + Sync>(
    normalizer: &Normalizer,
    lines: &[S],
    enable_preprocessing: bool,
) -> Vec<NormalizationResult> {
    use rayon::prelude::*;

    lines
        .par_iter()
        .map(|line| normalizer.normalize(line.as_ref(), enable_preprocessing))
        .collect()
}

#[cfg(feature = "parallel")]
pub fn normalize_batch<S: AsRef<str> + Sync>(
    normalizer: &Normalizer,
    lines: &[S],
    enable_preprocessing: bool,
) -> Vec<NormalizationResult> {
    normalize_batch_parallel(normalizer, lines, enable_preprocessing)
}

#[cfg(not(feature = "parallel"))]
pub fn normalize_batch<S: AsRef<str> + Sync>(
    normalizer: &Normalizer,
    lines: &[S],
    enable_preprocessing: bool,
) -> Vec<NormalizationResult> {
    normalize_batch_sequential(normalizer, lines, enable_preprocessing)
}
