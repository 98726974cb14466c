//! Currency (VND, USD) and percentage verbalization.

use once_cell::sync::Lazy;
use regex::Regex;

use crate::numverb::{parse_number_token, Lexicon};
use crate::scan::{self, Edit, Rewritten, NUMBER, NUMERIC_CONNECTORS};

pub const DONG_WORD: &str = "đồng";
pub const DOLLAR_WORD: &str = "đô la";
pub const PERCENT_WORD: &str = "phần trăm";

static CURRENCY_RE: Lazy<Regex> = Lazy::new(|| {
    Regex::new(&format!(
        r"\$ ?({NUMBER})|({NUMBER}) ?(đồng|VNĐ|vnđ|₫|đ|(?i:vnd|usd|dong)|\$)"
    ))
    .unwrap()
});

static PERCENT_RE: Lazy<Regex> = Lazy::new(|| Regex::new(&format!(r"({NUMBER}) ?%")).unwrap());

pub(crate) fn warm_up() {
    Lazy::force(&CURRENCY_RE);
    Lazy::force(&PERCENT_RE);
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Currency {
    Vnd,
    Usd,
}

impl Currency {
    fn from_suffix(suffix: &str) -> Currency {
        if suffix == "$" || suffix.eq_ignore_ascii_case("usd") {
            Currency::Usd
        } else {
            Currency::Vnd
        }
    }

    pub fn word(self) -> &'static str {
        match self {
            Currency::Vnd => DONG_WORD,
            Currency::Usd => DOLLAR_WORD,
        }
    }
}

/// Verbalizes a number token, or `None` if it does not parse or is out of range.
fn number_words(token: &str, lex: &Lexicon) -> Option<String> {
    let parsed = parse_number_token(token).ok()?;
    lex.number(&parsed).ok()
}

pub(crate) fn currency_pass(text: &str, lex: &Lexicon) -> Rewritten {
    scan::rewrite(text, &CURRENCY_RE, |caps| {
        let m = caps.get(0)?;
        let (span_start, number, currency, number_end) = match caps.get(1) {
            Some(num) => (m.start(), num, Currency::Usd, num.end()),
            None => {
                let num = caps.get(2)?;
                let suffix = caps.get(3)?.as_str();
                (num.start(), num, Currency::from_suffix(suffix), m.end())
            }
        };
        let (start, signed) = scan::signed_start(text, span_start);
        let token = if signed || caps.get(1).is_some() {
            number.as_str()
        } else {
            number.as_str().trim_start_matches('-')
        };
        if !scan::left_boundary_ok(text, start, NUMERIC_CONNECTORS)
            || !scan::right_boundary_ok(text, number_end, NUMERIC_CONNECTORS)
        {
            return None;
        }
        let words = number_words(token, lex)?;
        Some(Edit {
            span: start..m.end(),
            replacement: format!("{words} {}", currency.word()),
        })
    })
}

pub(crate) fn percent_pass(text: &str, lex: &Lexicon) -> Rewritten {
    scan::rewrite(text, &PERCENT_RE, |caps| {
        let m = caps.get(0)?;
        let (start, _) = scan::signed_start(text, m.start());
        if !scan::left_boundary_ok(text, start, NUMERIC_CONNECTORS)
            || !scan::right_boundary_ok(text, m.end(), NUMERIC_CONNECTORS)
        {
            return None;
        }
        let token = &caps[1][start - m.start()..];
        let words = number_words(token, lex)?;
        Some(Edit {
            span: start..m.end(),
            replacement: format!("{words} {PERCENT_WORD}"),
        })
    })
}

/// Verbalizes VND amounts ("đồng", "đ", "₫", "VND", "dong") and USD amounts
/// ("$5", "5 USD") as "<words> đồng" / "<words> đô la".
pub fn normalize_currency(text: &str) -> String {
    currency_pass(text, &Lexicon::NORTHERN).text
}

pub fn normalize_percent(text: &str) -> String {
    percent_pass(text, &Lexicon::NORTHERN).text
}
