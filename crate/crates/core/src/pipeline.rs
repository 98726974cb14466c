//! The seven-pass normalizer and its audit trace.

use std::fmt;
use std::ops::Range;
use std::path::{Path, PathBuf};
use std::sync::Arc;

use crate::datetime;
use crate::dict::{DictionarySet, DictionaryStore, LoadedDictionary, ValueCasing};
use crate::error::Result;
use crate::numverb::{self, Lexicon};
use crate::quantity;
use crate::scan::Rewritten;
use crate::textclean::{self, CleanPolicy};

/// Identifier of one normalization pass. Passes always run in the order of
/// [`PassId::ALL`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum PassId {
    Clean,
    Date,
    Time,
    Currency,
    Percent,
    Number,
    Dictionary,
}

impl PassId {
    pub const ALL: [PassId; 7] = [
        PassId::Clean,
        PassId::Date,
        PassId::Time,
        PassId::Currency,
        PassId::Percent,
        PassId::Number,
        PassId::Dictionary,
    ];

    /// 1-based position in the pipeline.
    pub fn order(self) -> u8 {
        self as u8 + 1
    }

    pub fn as_str(self) -> &'static str {
        match self {
            PassId::Clean => "clean",
            PassId::Date => "date",
            PassId::Time => "time",
            PassId::Currency => "currency",
            PassId::Percent => "percent",
            PassId::Number => "number",
            PassId::Dictionary => "dictionary",
        }
    }

    /// Passes that still run with preprocessing disabled.
    pub fn is_dictionary_only(self) -> bool {
        matches!(self, PassId::Clean | PassId::Dictionary)
    }

    fn bit(self) -> u8 {
        1 << (self as u8)
    }
}

impl fmt::Display for PassId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Set of enabled passes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PassSet(u8);

impl PassSet {
    pub const ALL: PassSet = PassSet(0x7f);

    pub fn contains(self, pass: PassId) -> bool {
        self.0 & pass.bit() != 0
    }

    pub fn with(self, pass: PassId, enabled: bool) -> PassSet {
        if enabled {
            PassSet(self.0 | pass.bit())
        } else {
            PassSet(self.0 & !pass.bit())
        }
    }
}

impl Default for PassSet {
    fn default() -> Self {
        PassSet::ALL
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NormalizerConfig {
    /// `None` selects the shipped acronym dictionary.
    pub acronyms_path: Option<PathBuf>,
    /// `None` selects the shipped loanword dictionary.
    pub loanwords_path: Option<PathBuf>,
    pub clean_policy: CleanPolicy,
    /// Emit dictionary values in lowercase.
    pub lowercase_expansions: bool,
    pub passes: PassSet,
}

impl Default for NormalizerConfig {
    fn default() -> Self {
        Self {
            acronyms_path: None,
            loanwords_path: None,
            clean_policy: CleanPolicy::default(),
            lowercase_expansions: true,
            passes: PassSet::ALL,
        }
    }
}

impl NormalizerConfig {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn with_acronyms(mut self, path: impl Into<PathBuf>) -> Self {
        self.acronyms_path = Some(path.into());
        self
    }

    pub fn with_loanwords(mut self, path: impl Into<PathBuf>) -> Self {
        self.loanwords_path = Some(path.into());
        self
    }

    pub fn with_clean_policy(mut self, policy: CleanPolicy) -> Self {
        self.clean_policy = policy;
        self
    }

    pub fn with_lowercase_expansions(mut self, lowercase: bool) -> Self {
        self.lowercase_expansions = lowercase;
        self
    }

    pub fn with_pass(mut self, pass: PassId, enabled: bool) -> Self {
        self.passes = self.passes.with(pass, enabled);
        self
    }

    fn value_casing(&self) -> ValueCasing {
        if self.lowercase_expansions {
            ValueCasing::Lowercase
        } else {
            ValueCasing::AsWritten
        }
    }
}

/// One change made by a pass.
///
/// `span` is a byte range into the text as it stands after all earlier
/// records have been applied, so replaying the records in order over the
/// input reproduces the output (see [`replay_trace`]).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TraceRecord {
    pub pass: PassId,
    pub span: Range<usize>,
    pub original: String,
    pub replacement: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct NormalizationResult {
    pub text: String,
    pub trace: Vec<TraceRecord>,
}

/// Applies `trace` to `input`. Returns `None` if a record does not match the
/// text it claims to replace.
pub fn replay_trace(input: &str, trace: &[TraceRecord]) -> Option<String> {
    let mut text = input.to_string();
    for record in trace {
        if text.get(record.span.clone())? != record.original {
            return None;
        }
        text.replace_range(record.span.clone(), &record.replacement);
    }
    Some(text)
}

struct TraceBuilder {
    enabled: bool,
    records: Vec<TraceRecord>,
}

impl TraceBuilder {
    fn push_edits(&mut self, pass: PassId, before: &str, rewritten: &Rewritten) {
        if !self.enabled {
            return;
        }
        let mut delta: isize = 0;
        for edit in &rewritten.edits {
            let original = &before[edit.span.clone()];
            let start = (edit.span.start as isize + delta) as usize;
            self.records.push(TraceRecord {
                pass,
                span: start..start + original.len(),
                original: original.to_string(),
                replacement: edit.replacement.clone(),
            });
            delta += edit.replacement.len() as isize - original.len() as isize;
        }
    }

    /// Records a whole-text rewrite as one edit over the differing middle.
    fn push_diff(&mut self, pass: PassId, before: &str, after: &str) {
        if !self.enabled || before == after {
            return;
        }
        let prefix = before
            .char_indices()
            .zip(after.chars())
            .find(|((_, a), b)| a != b)
            .map_or(before.len().min(after.len()), |((i, _), _)| i);
        let suffix = before[prefix..]
            .chars()
            .rev()
            .zip(after[prefix..].chars().rev())
            .take_while(|(a, b)| a == b)
            .map(|(a, _)| a.len_utf8())
            .sum::<usize>();
        self.records.push(TraceRecord {
            pass,
            span: prefix..before.len() - suffix,
            original: before[prefix..before.len() - suffix].to_string(),
            replacement: after[prefix..after.len() - suffix].to_string(),
        });
    }
}

/// Vietnamese text normalizer.
///
/// Construction compiles every pattern and dictionary; `normalize` only
/// matches. A normalizer can be shared between threads, and
/// [`reload_dictionaries`](Self::reload_dictionaries) may run while other
/// threads normalize: each call sees either the old or the new dictionaries
/// in full.
#[derive(Debug)]
pub struct Normalizer {
    config: NormalizerConfig,
    lexicon: Lexicon,
    dictionaries: DictionaryStore,
}

impl Normalizer {
    pub fn new(config: NormalizerConfig) -> Result<Self> {
        datetime::warm_up();
        quantity::warm_up();
        numverb::warm_up();

        let acronyms = match &config.acronyms_path {
            Some(path) => crate::dict::load_csv(path)?,
            None => LoadedDictionary::builtin_acronyms(),
        };
        let loanwords = match &config.loanwords_path {
            Some(path) => crate::dict::load_csv(path)?,
            None => LoadedDictionary::builtin_loanwords(),
        };
        let casing = config.value_casing();
        let set = DictionarySet::new(Arc::new(acronyms), Arc::new(loanwords), casing);
        Ok(Self {
            dictionaries: DictionaryStore::new(set, casing),
            lexicon: Lexicon::NORTHERN,
            config,
        })
    }

    /// Normalizer with the shipped dictionaries.
    pub fn with_defaults() -> Self {
        Self::new(NormalizerConfig::default()).expect("builtin dictionaries load")
    }

    pub fn config(&self) -> &NormalizerConfig {
        &self.config
    }

    pub fn dictionaries(&self) -> Arc<DictionarySet> {
        self.dictionaries.snapshot()
    }

    /// Runs the pipeline. With `enable_preprocessing` off, only the clean and
    /// dictionary passes run.
    pub fn normalize(&self, text: &str, enable_preprocessing: bool) -> NormalizationResult {
        self.run(text, enable_preprocessing, true)
    }

    /// Like [`normalize`](Self::normalize) with preprocessing on, without
    /// building the trace.
    pub fn normalize_text(&self, text: &str) -> String {
        self.run(text, true, false).text
    }

    pub fn reload_dictionaries(
        &self,
        acronyms_path: Option<&Path>,
        loanwords_path: Option<&Path>,
    ) -> Result<()> {
        self.dictionaries.reload(acronyms_path, loanwords_path)
    }

    fn run(&self, input: &str, enable_preprocessing: bool, with_trace: bool) -> NormalizationResult {
        let dictionaries = self.dictionaries.snapshot();
        let lex = &self.lexicon;
        let mut trace = TraceBuilder {
            enabled: with_trace,
            records: Vec::new(),
        };
        let mut text = input.to_string();

        for pass in PassId::ALL {
            if !self.config.passes.contains(pass)
                || (!enable_preprocessing && !pass.is_dictionary_only())
            {
                continue;
            }
            let rewritten = match pass {
                PassId::Clean => {
                    let cleaned = textclean::clean(&text, &self.config.clean_policy);
                    trace.push_diff(pass, &text, &cleaned);
                    text = cleaned;
                    continue;
                }
                PassId::Dictionary => {
                    let (out, records) = dictionaries.compiled.apply(&text);
                    if with_trace {
                        let edits = records
                            .into_iter()
                            .map(|r| crate::scan::Edit {
                                span: r.span,
                                replacement: r.value,
                            })
                            .collect();
                        trace.push_edits(pass, &text, &Rewritten { text: String::new(), edits });
                    }
                    text = out;
                    continue;
                }
                PassId::Date => datetime::date_pass(&text, lex),
                PassId::Time => datetime::time_pass(&text, lex),
                PassId::Currency => quantity::currency_pass(&text, lex),
                PassId::Percent => quantity::percent_pass(&text, lex),
                PassId::Number => numverb::number_pass(&text, lex),
            };
            trace.push_edits(pass, &text, &rewritten);
            text = rewritten.text;
        }

        NormalizationResult {
            text,
            trace: trace.records,
        }
    }
}
