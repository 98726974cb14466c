//! Match-and-rewrite plumbing shared by the pattern passes.

use std::ops::Range;

use regex::{Captures, Regex};

/// Signed-or-unsigned number token: digits with optional `.`/`,` groups.
pub(crate) const NUMBER: &str = r"-?[0-9]+(?:[.,][0-9]+)*";

/// Separators that glue a digit run to a neighbouring digit run.
pub(crate) const NUMERIC_CONNECTORS: &[char] = &['.', ',', '/', ':'];

/// One replacement made by a pass, in the coordinates of that pass's input.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Edit {
    pub span: Range<usize>,
    pub replacement: String,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Rewritten {
    pub text: String,
    pub edits: Vec<Edit>,
}

impl Rewritten {
    pub fn unchanged(text: &str) -> Self {
        Self {
            text: text.to_string(),
            edits: Vec::new(),
        }
    }
}

/// Runs `re` over `text` left to right. For each match `decide` may return the
/// span to replace (usually the match itself) and its replacement; `None`
/// leaves the match untouched. Spans must not overlap and must be increasing.
pub(crate) fn rewrite<F>(text: &str, re: &Regex, mut decide: F) -> Rewritten
where
    F: FnMut(&Captures<'_>) -> Option<Edit>,
{
    let mut out = String::with_capacity(text.len() + text.len() / 2);
    let mut edits = Vec::new();
    let mut last = 0;
    for caps in re.captures_iter(text) {
        let Some(edit) = decide(&caps) else { continue };
        debug_assert!(edit.span.start >= last);
        out.push_str(&text[last..edit.span.start]);
        out.push_str(&edit.replacement);
        last = edit.span.end;
        edits.push(edit);
    }
    if edits.is_empty() {
        return Rewritten::unchanged(text);
    }
    out.push_str(&text[last..]);
    Rewritten { text: out, edits }
}

pub(crate) fn char_before(text: &str, idx: usize) -> Option<char> {
    text[..idx].chars().next_back()
}

pub(crate) fn char_after(text: &str, idx: usize) -> Option<char> {
    text[idx..].chars().next()
}

/// A token starting at `start` is free-standing: the previous character is
/// not alphanumeric, and if it is a connector, the character before that is
/// not alphanumeric either ("1/2/3" does not yield "2/3").
pub(crate) fn left_boundary_ok(text: &str, start: usize, connectors: &[char]) -> bool {
    match char_before(text, start) {
        None => true,
        Some(p) if p.is_alphanumeric() => false,
        Some(p) if connectors.contains(&p) => {
            !char_before(text, start - p.len_utf8()).is_some_and(char::is_alphanumeric)
        }
        Some(_) => true,
    }
}

/// Mirror of [`left_boundary_ok`] for the token end; a trailing connector only
/// blocks when a digit follows it, so sentence-final "2023." is accepted.
pub(crate) fn right_boundary_ok(text: &str, end: usize, connectors: &[char]) -> bool {
    match char_after(text, end) {
        None => true,
        Some(n) if n.is_alphanumeric() => false,
        Some(n) if connectors.contains(&n) => {
            !char_after(text, end + n.len_utf8()).is_some_and(|c| c.is_ascii_digit())
        }
        Some(_) => true,
    }
}

/// Start of a number token matched at `start`. A leading minus counts as a
/// sign only at the start of the text or after whitespace; otherwise the
/// token begins at the first digit.
pub(crate) fn signed_start(text: &str, start: usize) -> (usize, bool) {
    if text[start..].starts_with('-') {
        match char_before(text, start) {
            None => (start, true),
            Some(c) if c.is_whitespace() => (start, true),
            Some(_) => (start + 1, false),
        }
    } else {
        (start, false)
    }
}
