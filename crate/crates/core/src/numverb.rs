//! Vietnamese cardinal and decimal verbalization.
//!
//! Integers are decomposed recursively on the magnitude words (tỷ, triệu,
//! nghìn) down to three-digit groups, each read as hundreds, tens, units.
//! A group that follows a nonzero higher group always speaks its hundreds
//! slot, so 2023 reads "hai nghìn không trăm hai mươi ba".

use once_cell::sync::Lazy;
use regex::Regex;

use crate::error::{Error, Result};
use crate::scan::{self, Edit, Rewritten, NUMBER, NUMERIC_CONNECTORS};

/// Exclusive upper bound for [`verbalize_integer`].
pub const MAX_CARDINAL: u64 = 1_000_000_000_000_000;

/// The word table used by the verbalizer.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Lexicon {
    pub digit_words: [&'static str; 10],
    pub ten_word: &'static str,
    pub tens_multiplier_word: &'static str,
    /// "mốt": a units 1 after "mươi".
    pub irregular_unit_one_after_tens: &'static str,
    /// "lăm": a units 5 after "mười" or "mươi".
    pub irregular_unit_five_after_tens: &'static str,
    pub hundred_word: &'static str,
    /// "linh": bridges an empty tens slot after the hundreds slot.
    pub zero_tens_connector: &'static str,
    pub thousand_word: &'static str,
    pub million_word: &'static str,
    pub billion_word: &'static str,
    pub decimal_point_word: &'static str,
    pub negative_word: &'static str,
}

impl Default for Lexicon {
    fn default() -> Self {
        Self::NORTHERN
    }
}

impl Lexicon {
    /// Northern-standard forms (nghìn, linh, bốn).
    pub const NORTHERN: Lexicon = Lexicon {
        digit_words: [
            "không", "một", "hai", "ba", "bốn", "năm", "sáu", "bảy", "tám", "chín",
        ],
        ten_word: "mười",
        tens_multiplier_word: "mươi",
        irregular_unit_one_after_tens: "mốt",
        irregular_unit_five_after_tens: "lăm",
        hundred_word: "trăm",
        zero_tens_connector: "linh",
        thousand_word: "nghìn",
        million_word: "triệu",
        billion_word: "tỷ",
        decimal_point_word: "phẩy",
        negative_word: "âm",
    };

    /// Every word this lexicon can emit.
    pub fn words(&self) -> impl Iterator<Item = &'static str> + '_ {
        self.digit_words.iter().copied().chain([
            self.ten_word,
            self.tens_multiplier_word,
            self.irregular_unit_one_after_tens,
            self.irregular_unit_five_after_tens,
            self.hundred_word,
            self.zero_tens_connector,
            self.thousand_word,
            self.million_word,
            self.billion_word,
            self.decimal_point_word,
            self.negative_word,
        ])
    }

    pub fn cardinal(&self, n: u64) -> Result<String> {
        let mut words = Vec::with_capacity(8);
        self.push_cardinal_checked(n, &mut words)?;
        Ok(words.join(" "))
    }

    pub fn decimal(&self, integer: u64, fraction_digits: &str) -> Result<String> {
        let mut words = Vec::with_capacity(12);
        self.push_decimal(integer, fraction_digits, &mut words)?;
        Ok(words.join(" "))
    }

    /// Reads a parsed number token, sign and fraction included.
    pub fn number(&self, number: &ParsedNumber) -> Result<String> {
        let mut words = Vec::with_capacity(12);
        if number.negative {
            words.push(self.negative_word);
        }
        match &number.fraction {
            Some(fraction) => self.push_decimal(number.integer, fraction, &mut words)?,
            None => self.push_cardinal_checked(number.integer, &mut words)?,
        }
        Ok(words.join(" "))
    }

    fn push_decimal(
        &self,
        integer: u64,
        fraction: &str,
        out: &mut Vec<&'static str>,
    ) -> Result<()> {
        if fraction.is_empty() || !fraction.bytes().all(|b| b.is_ascii_digit()) {
            return Err(Error::Format {
                token: fraction.to_string(),
                reason: "fraction must be a nonempty run of digits 0-9",
            });
        }
        self.push_cardinal_checked(integer, out)?;
        out.push(self.decimal_point_word);
        if fraction.len() <= 2 && !fraction.starts_with('0') {
            // at most two digits, so this cannot overflow
            let value: u64 = fraction.parse().unwrap_or_default();
            self.push_cardinal(value, false, out);
        } else {
            out.extend(
                fraction
                    .bytes()
                    .map(|b| self.digit_words[usize::from(b - b'0')]),
            );
        }
        Ok(())
    }

    fn push_cardinal_checked(&self, n: u64, out: &mut Vec<&'static str>) -> Result<()> {
        if n >= MAX_CARDINAL {
            return Err(Error::Range {
                value: n.to_string(),
                bound: MAX_CARDINAL,
            });
        }
        if n == 0 {
            out.push(self.digit_words[0]);
        } else {
            self.push_cardinal(n, false, out);
        }
        Ok(())
    }

    /// `padded` is set when a nonzero higher group has already been spoken.
    fn push_cardinal(&self, n: u64, padded: bool, out: &mut Vec<&'static str>) {
        let scales = [
            (1_000_000_000, self.billion_word),
            (1_000_000, self.million_word),
            (1_000, self.thousand_word),
        ];
        for (scale, word) in scales {
            if n >= scale {
                self.push_cardinal(n / scale, padded, out);
                out.push(word);
                let low = n % scale;
                if low > 0 {
                    self.push_cardinal(low, true, out);
                }
                return;
            }
        }
        self.push_group(n as usize, padded, out);
    }

    fn push_group(&self, n: usize, padded: bool, out: &mut Vec<&'static str>) {
        debug_assert!(n < 1000);
        let (hundreds, tens, units) = (n / 100, n / 10 % 10, n % 10);
        if hundreds > 0 || padded {
            out.push(self.digit_words[hundreds]);
            out.push(self.hundred_word);
            if tens == 0 && units == 0 {
                return;
            }
            if tens == 0 {
                out.push(self.zero_tens_connector);
            }
        }
        match tens {
            0 => out.push(self.digit_words[units]),
            1 => {
                out.push(self.ten_word);
                match units {
                    0 => {}
                    5 => out.push(self.irregular_unit_five_after_tens),
                    u => out.push(self.digit_words[u]),
                }
            }
            t => {
                out.push(self.digit_words[t]);
                out.push(self.tens_multiplier_word);
                match units {
                    0 => {}
                    1 => out.push(self.irregular_unit_one_after_tens),
                    5 => out.push(self.irregular_unit_five_after_tens),
                    u => out.push(self.digit_words[u]),
                }
            }
        }
    }
}

/// Reads `n` with the default lexicon. Fails for `n >= 10^15`.
pub fn verbalize_integer(n: u64) -> Result<String> {
    Lexicon::NORTHERN.cardinal(n)
}

pub fn verbalize_decimal(integer: u64, fraction_digits: &str) -> Result<String> {
    Lexicon::NORTHERN.decimal(integer, fraction_digits)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum NumberKind {
    Integer,
    Decimal,
}

/// A number token split into sign, integer part and optional fraction digits.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParsedNumber {
    pub negative: bool,
    pub integer: u64,
    pub fraction: Option<String>,
}

impl ParsedNumber {
    pub fn kind(&self) -> NumberKind {
        if self.fraction.is_some() {
            NumberKind::Decimal
        } else {
            NumberKind::Integer
        }
    }
}

fn format_error(token: &str, reason: &'static str) -> Error {
    Error::Format {
        token: token.to_string(),
        reason,
    }
}

/// True for "1.500.000"-style grouping: a 1-3 digit head followed by one or
/// more exact 3-digit groups.
fn is_dot_grouped(s: &str) -> bool {
    let mut groups = s.split('.');
    let head = groups.next().unwrap_or_default();
    let mut tail_count = 0;
    let tails_ok = groups.all(|g| {
        tail_count += 1;
        g.len() == 3 && g.bytes().all(|b| b.is_ascii_digit())
    });
    (1..=3).contains(&head.len())
        && head.bytes().all(|b| b.is_ascii_digit())
        && tail_count > 0
        && tails_ok
}

fn parse_digits(token: &str, digits: &str) -> Result<u64> {
    if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
        return Err(format_error(token, "expected digits"));
    }
    let trimmed = digits.trim_start_matches('0');
    if trimmed.is_empty() {
        return Ok(0);
    }
    trimmed.parse::<u64>().map_err(|_| Error::Range {
        value: trimmed.to_string(),
        bound: MAX_CARDINAL,
    })
}

/// Splits a number token as written in Vietnamese text.
///
/// Dots that form valid thousands grouping are dropped ("1.500.000"), a comma
/// introduces the fraction ("3,5"), and a lone dot that is not grouping is
/// read as a decimal point ("3.5").
pub fn parse_number_token(token: &str) -> Result<ParsedNumber> {
    let (negative, body) = match token.strip_prefix('-') {
        Some(rest) => (true, rest),
        None => (false, token),
    };
    if body.is_empty() {
        return Err(format_error(token, "empty number"));
    }

    let (integer, fraction) = if let Some((int_part, frac_part)) = body.split_once(',') {
        if frac_part.contains(',') || frac_part.contains('.') {
            return Err(format_error(token, "more than one decimal separator"));
        }
        let integer = if int_part.contains('.') {
            if !is_dot_grouped(int_part) {
                return Err(format_error(token, "malformed thousands grouping before comma"));
            }
            parse_digits(token, &int_part.replace('.', ""))?
        } else {
            parse_digits(token, int_part)?
        };
        (integer, Some(frac_part))
    } else if body.contains('.') {
        if is_dot_grouped(body) {
            (parse_digits(token, &body.replace('.', ""))?, None)
        } else {
            match body.split_once('.') {
                Some((int_part, frac_part)) if !frac_part.contains('.') => {
                    (parse_digits(token, int_part)?, Some(frac_part))
                }
                _ => return Err(format_error(token, "malformed thousands grouping")),
            }
        }
    } else {
        (parse_digits(token, body)?, None)
    };

    if let Some(frac) = fraction {
        if frac.is_empty() || !frac.bytes().all(|b| b.is_ascii_digit()) {
            return Err(format_error(token, "expected fraction digits"));
        }
    }
    Ok(ParsedNumber {
        negative,
        integer,
        fraction: fraction.map(str::to_string),
    })
}

static NUMBER_RE: Lazy<Regex> = Lazy::new(|| Regex::new(NUMBER).unwrap());

pub(crate) fn warm_up() {
    Lazy::force(&NUMBER_RE);
}

/// General number pass: free-standing integers and decimals. Digit runs glued
/// to letters ("A4", "3x") or to other digit runs by `/`, `:`, `.` or `,` are
/// left alone, as are tokens that fail to parse.
pub(crate) fn number_pass(text: &str, lex: &Lexicon) -> Rewritten {
    scan::rewrite(text, &NUMBER_RE, |caps| {
        let m = caps.get(0)?;
        let (start, _) = scan::signed_start(text, m.start());
        if !scan::left_boundary_ok(text, start, NUMERIC_CONNECTORS)
            || !scan::right_boundary_ok(text, m.end(), NUMERIC_CONNECTORS)
        {
            return None;
        }
        let parsed = parse_number_token(&text[start..m.end()]).ok()?;
        Some(Edit {
            span: start..m.end(),
            replacement: lex.number(&parsed).ok()?,
        })
    })
}

pub fn normalize_numbers(text: &str) -> String {
    number_pass(text, &Lexicon::NORTHERN).text
}
