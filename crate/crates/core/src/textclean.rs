//! Unicode canonicalization and removal of emoji and control characters.

use unicode_normalization::char::is_combining_mark;
use unicode_normalization::UnicodeNormalization;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CleanPolicy {
    pub strip_emoji: bool,
    /// Drop C0/C1 controls other than newline and tab.
    pub strip_control: bool,
    /// Collapse runs of horizontal whitespace and trim each line.
    pub collapse_whitespace: bool,
}

impl Default for CleanPolicy {
    fn default() -> Self {
        Self {
            strip_emoji: true,
            strip_control: true,
            collapse_whitespace: true,
        }
    }
}

const EMOJI_BLOCKS: [(char, char); 7] = [
    ('\u{1F300}', '\u{1F5FF}'),
    ('\u{1F600}', '\u{1F64F}'),
    ('\u{1F680}', '\u{1F6FF}'),
    ('\u{1F900}', '\u{1F9FF}'),
    ('\u{1F1E6}', '\u{1F1FF}'),
    ('\u{2600}', '\u{26FF}'),
    ('\u{2700}', '\u{27BF}'),
];

pub fn is_emoji(c: char) -> bool {
    matches!(c, '\u{FE0E}' | '\u{FE0F}' | '\u{200D}')
        || EMOJI_BLOCKS.iter().any(|&(lo, hi)| (lo..=hi).contains(&c))
}

pub fn is_stripped_control(c: char) -> bool {
    c != '\n' && c != '\t' && c.is_control()
}

fn is_horizontal_space(c: char) -> bool {
    c != '\n' && c.is_whitespace()
}

pub fn clean(text: &str, policy: &CleanPolicy) -> String {
    // Stripping first lets NFC compose marks that were split by a ZWJ or a
    // stray control character.
    let composed: String = text
        .chars()
        .filter(|&c| !(policy.strip_emoji && is_emoji(c)))
        .filter(|&c| !(policy.strip_control && is_stripped_control(c)))
        .nfc()
        .collect();

    if !policy.collapse_whitespace {
        return composed;
    }

    let mut out = String::with_capacity(composed.len());
    for (i, line) in composed.split('\n').enumerate() {
        if i > 0 {
            out.push('\n');
        }
        let mut pending_space = false;
        let mut started = false;
        for c in line.chars() {
            if is_horizontal_space(c) {
                pending_space = started;
                continue;
            }
            if pending_space {
                out.push(' ');
                pending_space = false;
            }
            started = true;
            out.push(c);
        }
    }
    out
}

/// Accent-insensitive comparison key: NFD, drop combining marks, map đ/Đ to
/// d/D, lowercase.
pub fn fold_diacritics(text: &str) -> String {
    text.nfd()
        .filter(|&c| !is_combining_mark(c))
        .map(|c| match c {
            'đ' => 'd',
            'Đ' => 'D',
            c => c,
        })
        .flat_map(char::to_lowercase)
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;
    use unicode_normalization::is_nfc;

    fn clean_default(s: &str) -> String {
        clean(s, &CleanPolicy::default())
    }

    #[test]
    fn strips_emoji() {
        assert_eq!(clean_default("xin chào 😀"), "xin chào");
        assert_eq!(clean_default("👍🏻 tốt ❤️"), "tốt");
        assert_eq!(clean_default("🇻🇳 Việt Nam"), "Việt Nam");
    }

    #[test]
    fn empty_is_identity() {
        assert_eq!(clean_default(""), "");
    }

    #[test]
    fn composes_to_nfc() {
        assert_eq!(clean_default("cafe\u{0301}"), "caf\u{00E9}");
        // ZWJ between base and mark disappears, then the pair composes
        assert_eq!(clean_default("e\u{200D}\u{0301}"), "\u{00E9}");
    }

    #[test]
    fn controls_and_whitespace() {
        assert_eq!(clean_default("a\u{0007}b\r\nc"), "ab\nc");
        assert_eq!(clean_default("  một \t  hai  \n  ba  "), "một hai\nba");
        assert_eq!(clean_default("a\u{0085}b"), "ab");
        let keep = CleanPolicy {
            strip_control: false,
            collapse_whitespace: false,
            ..CleanPolicy::default()
        };
        assert_eq!(clean("a\u{0007}  b", &keep), "a\u{0007}  b");
    }

    #[test]
    fn punctuation_preserved() {
        assert_eq!(clean_default("Chào, bạn! (thật?)"), "Chào, bạn! (thật?)");
    }

    #[test]
    fn folding() {
        assert_eq!(fold_diacritics("Đường Hồ Chí Minh"), "duong ho chi minh");
        assert_eq!(fold_diacritics("công-te-nơ"), "cong-te-no");
    }

    /// NFC maps a few code points (U+0344, U+0958, Hebrew presentation
    /// forms, ...) to two scalars; those are excluded from the length check.
    fn nfc_expands(c: char) -> bool {
        c.to_string().nfc().count() > 1
    }

    proptest! {
        #[test]
        fn idempotent(s in "\\PC{0,40}|[a-zà-ỹ \\t\\n\u{0300}-\u{0309}\u{200D}\u{1F600}]{0,40}") {
            let once = clean_default(&s);
            prop_assert_eq!(clean_default(&once), once);
        }

        #[test]
        fn output_is_nfc(s in "\\PC{0,40}|[a-zà-ỹ \u{0300}-\u{0323}]{0,40}") {
            prop_assert!(is_nfc(&clean_default(&s)));
        }

        #[test]
        fn never_grows(s in "\\PC{0,40}|[a-zà-ỹ \u{0300}-\u{0323}\u{1F600}]{0,40}") {
            prop_assume!(!s.chars().any(nfc_expands));
            prop_assert!(clean_default(&s).chars().count() <= s.chars().count());
        }

        #[test]
        fn no_emoji_or_controls_survive(s in any::<String>()) {
            let out = clean_default(&s);
            prop_assert!(!out.chars().any(|c| is_emoji(c) || is_stripped_control(c)));
        }
    }
}
