//! Acronym and loanword dictionaries.
//!
//! All keys from every dictionary are compiled into one character trie. The
//! scan visits each token start once and walks the trie from there, so the
//! work per input character is bounded by the longest key and does not grow
//! with the number of entries. Matches are anchored to token boundaries and
//! the longest valid key wins. Replacements are emitted in a single left to
//! right pass and never re-scanned.

use std::collections::HashMap;
use std::fmt;
use std::io::Read;
use std::ops::Range;
use std::path::{Path, PathBuf};
use std::sync::{Arc, Mutex, RwLock};

use unicode_normalization::UnicodeNormalization;

use crate::error::{Error, Result};

pub const ACRONYMS_FILE: &str = "acronyms.csv";
pub const LOANWORDS_FILE: &str = "non_vietnamese_words.csv";

const BUILTIN_ACRONYMS: &str = include_str!("../data/acronyms.csv");
const BUILTIN_LOANWORDS: &str = include_str!("../data/non_vietnamese_words.csv");

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DictionaryEntry {
    pub key: String,
    pub value: String,
}

impl DictionaryEntry {
    pub fn new(key: impl Into<String>, value: impl Into<String>) -> Self {
        Self {
            key: key.into(),
            value: value.into(),
        }
    }
}

/// Where a dictionary came from.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum DictSource {
    Builtin(&'static str),
    File(PathBuf),
}

impl fmt::Display for DictSource {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DictSource::Builtin(name) => write!(f, "<builtin>/{name}"),
            DictSource::File(path) => write!(f, "{}", path.display()),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum DictWarning {
    DuplicateKey { key: String, line: u64 },
    /// The value contains another key as a whole token, so a second
    /// normalization would change it again.
    ValueContainsKey { key: String, found: String },
    ValueContainsDigit { key: String },
}

impl fmt::Display for DictWarning {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DictWarning::DuplicateKey { key, line } => {
                write!(f, "line {line}: duplicate key {key:?}, keeping this row")
            }
            DictWarning::ValueContainsKey { key, found } => {
                write!(f, "value of {key:?} contains dictionary key {found:?}")
            }
            DictWarning::ValueContainsDigit { key } => {
                write!(f, "value of {key:?} contains digits")
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LoadedDictionary {
    pub source: DictSource,
    pub entries: Vec<DictionaryEntry>,
    pub warnings: Vec<DictWarning>,
}

impl LoadedDictionary {
    pub fn builtin_acronyms() -> Self {
        parse_csv(BUILTIN_ACRONYMS.as_bytes(), DictSource::Builtin(ACRONYMS_FILE))
            .expect("builtin acronym dictionary is valid")
    }

    pub fn builtin_loanwords() -> Self {
        parse_csv(BUILTIN_LOANWORDS.as_bytes(), DictSource::Builtin(LOANWORDS_FILE))
            .expect("builtin loanword dictionary is valid")
    }
}

/// Reads a `key,value` CSV file. A leading `word,replacement` header is
/// skipped, lines starting with `#` are comments, and for duplicate keys the
/// last row wins.
pub fn load_csv(path: impl AsRef<Path>) -> Result<LoadedDictionary> {
    let path = path.as_ref();
    let file = std::fs::File::open(path).map_err(|source| Error::Config {
        path: path.to_path_buf(),
        source,
    })?;
    parse_csv(file, DictSource::File(path.to_path_buf()))
}

pub fn parse_csv<R: Read>(reader: R, source: DictSource) -> Result<LoadedDictionary> {
    let origin = match &source {
        DictSource::Builtin(name) => PathBuf::from(name),
        DictSource::File(path) => path.clone(),
    };
    let parse_error = |line: u64, message: String| Error::Parse {
        path: origin.clone(),
        line,
        message,
    };

    let mut reader = csv::ReaderBuilder::new()
        .has_headers(false)
        .flexible(true)
        .comment(Some(b'#'))
        .trim(csv::Trim::All)
        .from_reader(reader);

    let mut entries: Vec<DictionaryEntry> = Vec::new();
    let mut index: HashMap<String, usize> = HashMap::new();
    let mut warnings = Vec::new();

    for (row, record) in reader.records().enumerate() {
        let record = record.map_err(|e| {
            let line = e.position().map_or(0, |p| p.line());
            match e.into_kind() {
                csv::ErrorKind::Io(source) => Error::Config {
                    path: origin.clone(),
                    source,
                },
                kind => parse_error(line, format!("{kind:?}")),
            }
        })?;
        let line = record.position().map_or(row as u64 + 1, |p| p.line());
        if record.len() < 2 {
            return Err(parse_error(line, "expected two fields: key,value".into()));
        }
        let key: String = record[0].nfc().collect();
        let value: String = record[1].nfc().collect();
        if row == 0 && key.eq_ignore_ascii_case("word") && value.eq_ignore_ascii_case("replacement")
        {
            continue;
        }
        if key.is_empty() {
            return Err(parse_error(line, "empty key".into()));
        }
        if key.contains(['\n', '\r']) {
            return Err(parse_error(line, "key spans more than one line".into()));
        }
        match index.get(&key) {
            Some(&i) => {
                warnings.push(DictWarning::DuplicateKey {
                    key: key.clone(),
                    line,
                });
                entries[i].value = value;
            }
            None => {
                index.insert(key.clone(), entries.len());
                entries.push(DictionaryEntry { key, value });
            }
        }
    }

    Ok(LoadedDictionary {
        source,
        entries,
        warnings,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MatchCase {
    Sensitive,
    Insensitive,
}

/// How replacement values are emitted.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum ValueCasing {
    #[default]
    AsWritten,
    Lowercase,
}

/// One dictionary replacement, in the coordinates of the text passed to
/// [`CompiledDictionary::apply`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReplacementRecord {
    pub span: Range<usize>,
    pub key: String,
    pub original: String,
    pub value: String,
}

#[derive(Debug, Clone)]
struct Target {
    key: String,
    value: String,
    case: MatchCase,
    layer: usize,
}

#[derive(Debug, Clone, Default)]
struct Node {
    /// Sorted by char.
    edges: Vec<(char, u32)>,
    /// Indices into `targets`, in priority order.
    terminals: Vec<u32>,
}

impl Node {
    fn child(&self, c: char) -> Option<u32> {
        self.edges
            .binary_search_by_key(&c, |&(ch, _)| ch)
            .ok()
            .map(|i| self.edges[i].1)
    }
}

/// Simple one-to-one lowercase mapping; characters whose lowercase form is
/// longer than one scalar are kept as they are.
fn fold_char(c: char) -> char {
    if c.is_ascii() {
        return c.to_ascii_lowercase();
    }
    let mut lower = c.to_lowercase();
    match (lower.next(), lower.next()) {
        (Some(l), None) => l,
        _ => c,
    }
}

fn is_word_char(c: char) -> bool {
    c.is_alphanumeric()
}

/// A set of dictionaries compiled into one token-anchored matcher.
#[derive(Debug, Clone)]
pub struct CompiledDictionary {
    nodes: Vec<Node>,
    targets: Vec<Target>,
    warnings: Vec<DictWarning>,
}

impl Default for CompiledDictionary {
    fn default() -> Self {
        Self::new(&[], ValueCasing::AsWritten)
    }
}

impl CompiledDictionary {
    /// Case-sensitive dictionary with values emitted as written.
    pub fn compile(entries: &[DictionaryEntry]) -> Self {
        Self::new(&[(entries, MatchCase::Sensitive)], ValueCasing::AsWritten)
    }

    /// Compiles several dictionaries into one matcher. When two layers share
    /// a key that matches the same text, the earlier layer wins.
    pub fn new(layers: &[(&[DictionaryEntry], MatchCase)], casing: ValueCasing) -> Self {
        let mut dict = CompiledDictionary {
            nodes: vec![Node::default()],
            targets: Vec::new(),
            warnings: Vec::new(),
        };
        for (layer, &(entries, case)) in layers.iter().enumerate() {
            for entry in entries {
                if entry.key.is_empty() {
                    continue;
                }
                let value = match casing {
                    ValueCasing::AsWritten => entry.value.clone(),
                    ValueCasing::Lowercase => entry.value.to_lowercase(),
                };
                dict.insert(&entry.key, value, case, layer);
            }
        }
        dict.validate_values();
        dict
    }

    fn insert(&mut self, key: &str, value: String, case: MatchCase, layer: usize) {
        let mut node = 0usize;
        for c in key.chars().map(fold_char) {
            node = match self.nodes[node].child(c) {
                Some(next) => next as usize,
                None => {
                    let next = self.nodes.len();
                    self.nodes.push(Node::default());
                    let edges = &mut self.nodes[node].edges;
                    let at = edges.partition_point(|&(ch, _)| ch < c);
                    edges.insert(at, (c, next as u32));
                    next
                }
            };
        }
        // A later entry in the same layer that matches exactly the same text
        // replaces the earlier one; entries from earlier layers keep priority.
        let terminals = &self.nodes[node].terminals;
        let same = terminals.iter().copied().find(|&t| {
            let target = &self.targets[t as usize];
            target.layer == layer
                && match case {
                    MatchCase::Sensitive => target.key == key,
                    MatchCase::Insensitive => true,
                }
        });
        match same {
            Some(t) => {
                let target = &mut self.targets[t as usize];
                target.key = key.to_string();
                target.value = value;
            }
            None => {
                let t = self.targets.len() as u32;
                self.targets.push(Target {
                    key: key.to_string(),
                    value,
                    case,
                    layer,
                });
                self.nodes[node].terminals.push(t);
            }
        }
    }

    fn validate_values(&mut self) {
        let mut warnings = Vec::new();
        for target in &self.targets {
            if target.value.chars().any(|c| c.is_ascii_digit()) {
                warnings.push(DictWarning::ValueContainsDigit {
                    key: target.key.clone(),
                });
            }
            if let Some(hit) = self.find_all(&target.value).next() {
                warnings.push(DictWarning::ValueContainsKey {
                    key: target.key.clone(),
                    found: target.value[hit.0.clone()].to_string(),
                });
            }
        }
        self.warnings = warnings;
    }

    pub fn len(&self) -> usize {
        self.targets.len()
    }

    pub fn is_empty(&self) -> bool {
        self.targets.is_empty()
    }

    pub fn warnings(&self) -> &[DictWarning] {
        &self.warnings
    }

    /// Longest valid match starting at byte `start`, as (end, target index).
    fn longest_at(&self, text: &str, start: usize) -> Option<(usize, u32)> {
        let mut node = 0usize;
        let mut best = None;
        let mut iter = text[start..].char_indices().peekable();
        while let Some((offset, c)) = iter.next() {
            let Some(next) = self.nodes[node].child(fold_char(c)) else {
                break;
            };
            node = next as usize;
            let terminals = &self.nodes[node].terminals;
            if terminals.is_empty() {
                continue;
            }
            let end = start + offset + c.len_utf8();
            if iter.peek().is_some_and(|&(_, n)| is_word_char(n)) {
                continue;
            }
            let matched = &text[start..end];
            let hit = terminals.iter().copied().find(|&t| {
                let target = &self.targets[t as usize];
                match target.case {
                    MatchCase::Sensitive => target.key == matched,
                    MatchCase::Insensitive => true,
                }
            });
            if let Some(t) = hit {
                best = Some((end, t));
            }
        }
        best
    }

    fn find_all<'a>(&'a self, text: &'a str) -> impl Iterator<Item = (Range<usize>, u32)> + 'a {
        let mut pos = 0usize;
        let mut prev_is_word = false;
        std::iter::from_fn(move || {
            while pos < text.len() {
                let c = text[pos..].chars().next()?;
                if !prev_is_word {
                    if let Some((end, t)) = self.longest_at(text, pos) {
                        let start = pos;
                        prev_is_word = text[..end].chars().next_back().is_some_and(is_word_char);
                        pos = end;
                        return Some((start..end, t));
                    }
                }
                prev_is_word = is_word_char(c);
                pos += c.len_utf8();
            }
            None
        })
    }

    /// Replaces every dictionary key found in `text` in one left to right pass.
    pub fn apply(&self, text: &str) -> (String, Vec<ReplacementRecord>) {
        if self.targets.is_empty() {
            return (text.to_string(), Vec::new());
        }
        let mut out = String::with_capacity(text.len() + text.len() / 4);
        let mut records = Vec::new();
        let mut last = 0;
        for (span, t) in self.find_all(text) {
            let target = &self.targets[t as usize];
            out.push_str(&text[last..span.start]);
            out.push_str(&target.value);
            last = span.end;
            records.push(ReplacementRecord {
                original: text[span.clone()].to_string(),
                span,
                key: target.key.clone(),
                value: target.value.clone(),
            });
        }
        if records.is_empty() {
            return (text.to_string(), records);
        }
        out.push_str(&text[last..]);
        (out, records)
    }
}

/// The loaded dictionaries plus the matcher compiled from them.
#[derive(Debug, Clone)]
pub struct DictionarySet {
    pub acronyms: Arc<LoadedDictionary>,
    pub loanwords: Arc<LoadedDictionary>,
    pub compiled: CompiledDictionary,
}

impl DictionarySet {
    /// Acronyms match case-sensitively and take priority; loanwords match
    /// case-insensitively.
    pub fn new(
        acronyms: Arc<LoadedDictionary>,
        loanwords: Arc<LoadedDictionary>,
        casing: ValueCasing,
    ) -> Self {
        let compiled = CompiledDictionary::new(
            &[
                (&acronyms.entries, MatchCase::Sensitive),
                (&loanwords.entries, MatchCase::Insensitive),
            ],
            casing,
        );
        for w in acronyms.warnings.iter().map(|w| (&acronyms.source, w)).chain(
            loanwords.warnings.iter().map(|w| (&loanwords.source, w)),
        ) {
            log::warn!("{}: {}", w.0, w.1);
        }
        for w in compiled.warnings() {
            log::warn!("dictionary: {w}");
        }
        Self {
            acronyms,
            loanwords,
            compiled,
        }
    }
}

/// Holds the active [`DictionarySet`] and swaps it atomically on reload.
/// Readers take an `Arc` snapshot and keep using it for a whole call.
#[derive(Debug)]
pub struct DictionaryStore {
    current: RwLock<Arc<DictionarySet>>,
    reload_lock: Mutex<()>,
    casing: ValueCasing,
}

impl DictionaryStore {
    pub fn new(set: DictionarySet, casing: ValueCasing) -> Self {
        Self {
            current: RwLock::new(Arc::new(set)),
            reload_lock: Mutex::new(()),
            casing,
        }
    }

    pub fn snapshot(&self) -> Arc<DictionarySet> {
        Arc::clone(&self.current.read().unwrap_or_else(|e| e.into_inner()))
    }

    /// Loads the given files, recompiles, and installs the result. On any
    /// error the previous dictionaries stay active. A dictionary whose path
    /// is not given is carried over unchanged.
    pub fn reload(&self, acronyms: Option<&Path>, loanwords: Option<&Path>) -> Result<()> {
        if acronyms.is_none() && loanwords.is_none() {
            return Err(Error::NothingToReload);
        }
        let new_acronyms = acronyms.map(load_csv).transpose()?;
        let new_loanwords = loanwords.map(load_csv).transpose()?;

        let _guard = self.reload_lock.lock().unwrap_or_else(|e| e.into_inner());
        let old = self.snapshot();
        let set = DictionarySet::new(
            new_acronyms.map_or_else(|| Arc::clone(&old.acronyms), Arc::new),
            new_loanwords.map_or_else(|| Arc::clone(&old.loanwords), Arc::new),
            self.casing,
        );
        *self.current.write().unwrap_or_else(|e| e.into_inner()) = Arc::new(set);
        Ok(())
    }
}
