//! Rule-based Vietnamese text normalization for TTS frontends.
//!
//! Numbers, dates, times, currency amounts, percentages, acronyms and
//! loanwords are rewritten into pronounceable Vietnamese by seven ordered
//! passes: clean, date, time, currency, percent, number, dictionary.
//!
//! ```
//! use vntn_core::Normalizer;
//!
//! let normalizer = Normalizer::with_defaults();
//! let out = normalizer.normalize("Giá 1.500.000 đồng lúc 9:30", true);
//! assert_eq!(out.text, "Giá một triệu năm trăm nghìn đồng lúc chín giờ ba mươi phút");
//! ```

pub mod batch;
pub mod datetime;
pub mod dict;
mod error;
pub mod numverb;
pub mod pipeline;
pub mod quantity;
mod scan;
pub mod textclean;

pub use batch::normalize_batch;
pub use dict::{CompiledDictionary, DictionaryEntry, DictionarySet, ReplacementRecord};
pub use error::{Error, Result};
pub use numverb::{parse_number_token, verbalize_decimal, verbalize_integer, Lexicon};
pub use pipeline::{
    replay_trace, NormalizationResult, Normalizer, NormalizerConfig, PassId, PassSet, TraceRecord,
};
pub use scan::{Edit, Rewritten};
pub use textclean::{clean, fold_diacritics, CleanPolicy};
