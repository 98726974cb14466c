//! Date and time verbalization.
//!
//! Dates run before every other numeric pass, so "2/9" reads as a date and
//! never as a fraction or two separate numbers.

use once_cell::sync::Lazy;
use regex::{Captures, Regex};

use crate::numverb::Lexicon;
use crate::scan::{self, Edit, Rewritten};

static DATE_RE: Lazy<Regex> = Lazy::new(|| {
    Regex::new(r"([0-9]{1,2})([/.\-])([0-9]{1,2})(?:([/.\-])([0-9]{1,4}))?").unwrap()
});

static TIME_RE: Lazy<Regex> =
    Lazy::new(|| Regex::new(r"([0-9]{1,2}):([0-9]{2})(?::([0-9]{2}))?").unwrap());

const DATE_CONNECTORS: &[char] = &['/', '.', '-', ':', ','];

pub(crate) fn warm_up() {
    Lazy::force(&DATE_RE);
    Lazy::force(&TIME_RE);
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DatePattern {
    pub day: u8,
    pub month: u8,
    pub year: Option<u16>,
    pub separator: char,
}

impl DatePattern {
    pub fn new(day: u32, month: u32, year: Option<u32>, separator: char) -> Option<Self> {
        let in_range = (1..=31).contains(&day)
            && (1..=12).contains(&month)
            && year.is_none_or(|y| (1..=9999).contains(&y))
            && matches!(separator, '/' | '-' | '.');
        // "." without a year would collide with thousands grouping
        if !in_range || (separator == '.' && year.is_none()) {
            return None;
        }
        Some(Self {
            day: day as u8,
            month: month as u8,
            year: year.map(|y| y as u16),
            separator,
        })
    }

    pub fn verbalize(&self, lex: &Lexicon) -> String {
        let day = cardinal(lex, u64::from(self.day));
        let month = if self.month == 4 {
            "tư".to_string()
        } else {
            cardinal(lex, u64::from(self.month))
        };
        match self.year {
            Some(year) => format!(
                "ngày {day} tháng {month} năm {}",
                cardinal(lex, u64::from(year))
            ),
            None => format!("ngày {day} tháng {month}"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TimePattern {
    pub hour: u8,
    pub minute: u8,
    pub second: Option<u8>,
}

impl TimePattern {
    pub fn new(hour: u32, minute: u32, second: Option<u32>) -> Option<Self> {
        if hour > 23 || minute > 59 || second.is_some_and(|s| s > 59) {
            return None;
        }
        Some(Self {
            hour: hour as u8,
            minute: minute as u8,
            second: second.map(|s| s as u8),
        })
    }

    pub fn verbalize(&self, lex: &Lexicon) -> String {
        let mut out = format!("{} giờ", cardinal(lex, u64::from(self.hour)));
        // a zero minute is dropped only when no seconds follow
        if self.minute != 0 || self.second.is_some() {
            out.push(' ');
            out.push_str(&cardinal(lex, u64::from(self.minute)));
            out.push_str(" phút");
        }
        if let Some(second) = self.second {
            out.push(' ');
            out.push_str(&cardinal(lex, u64::from(second)));
            out.push_str(" giây");
        }
        out
    }
}

fn cardinal(lex: &Lexicon, n: u64) -> String {
    // every caller passes a value below 10^4
    lex.cardinal(n).unwrap_or_default()
}

fn field(caps: &Captures<'_>, i: usize) -> Option<u32> {
    caps.get(i).and_then(|m| m.as_str().parse().ok())
}

fn parse_date(caps: &Captures<'_>) -> Option<DatePattern> {
    let sep = caps[2].chars().next()?;
    let year = match caps.get(4) {
        Some(second_sep) if second_sep.as_str().starts_with(sep) => Some(field(caps, 5)?),
        Some(_) => return None,
        None => None,
    };
    DatePattern::new(field(caps, 1)?, field(caps, 3)?, year, sep)
}

pub(crate) fn date_pass(text: &str, lex: &Lexicon) -> Rewritten {
    scan::rewrite(text, &DATE_RE, |caps| {
        let m = caps.get(0)?;
        if !scan::left_boundary_ok(text, m.start(), DATE_CONNECTORS)
            || !scan::right_boundary_ok(text, m.end(), DATE_CONNECTORS)
        {
            return None;
        }
        let date = parse_date(caps)?;
        Some(Edit {
            span: m.range(),
            replacement: date.verbalize(lex),
        })
    })
}

pub(crate) fn time_pass(text: &str, lex: &Lexicon) -> Rewritten {
    const TIME_CONNECTORS: &[char] = &[':', '.', ',', '/'];
    scan::rewrite(text, &TIME_RE, |caps| {
        let m = caps.get(0)?;
        if !scan::left_boundary_ok(text, m.start(), TIME_CONNECTORS)
            || !scan::right_boundary_ok(text, m.end(), TIME_CONNECTORS)
        {
            return None;
        }
        let time = TimePattern::new(field(caps, 1)?, field(caps, 2)?, field(caps, 3))?;
        Some(Edit {
            span: m.range(),
            replacement: time.verbalize(lex),
        })
    })
}

/// Replaces every valid `DD/MM/YYYY`, `DD-MM-YYYY`, `DD.MM.YYYY`, `DD/MM` or
/// `DD-MM` with its spoken form. Out-of-range tokens are left as they are.
pub fn normalize_dates(text: &str) -> String {
    date_pass(text, &Lexicon::NORTHERN).text
}

/// Replaces `HH:MM` and `HH:MM:SS` with "… giờ … phút … giây".
pub fn normalize_times(text: &str) -> String {
    time_pass(text, &Lexicon::NORTHERN).text
}
