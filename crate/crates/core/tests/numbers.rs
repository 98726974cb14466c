mod common;

use common::oracle::{reference_cardinal, reference_decimal};
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use vntn_core::numverb::{normalize_numbers, MAX_CARDINAL};
use vntn_core::{parse_number_token, verbalize_decimal, verbalize_integer, Error, Lexicon};

#[test]
fn matches_reference_below_ten_thousand() {
    for n in 0..10_000u64 {
        assert_eq!(verbalize_integer(n).unwrap(), reference_cardinal(n), "n = {n}");
    }
}

#[test]
fn matches_reference_on_random_large_values() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for _ in 0..5_000 {
        let n = rng.gen_range(10_000..MAX_CARDINAL);
        assert_eq!(verbalize_integer(n).unwrap(), reference_cardinal(n), "n = {n}");
    }
    // values with runs of zero groups
    for exp in 3..15 {
        for lead in [1u64, 5, 21, 105] {
            let n = lead * 10u64.pow(exp);
            if n < MAX_CARDINAL {
                assert_eq!(verbalize_integer(n).unwrap(), reference_cardinal(n), "n = {n}");
                assert_eq!(verbalize_integer(n + 7).unwrap(), reference_cardinal(n + 7));
            }
        }
    }
}

#[test]
fn gold_fixture() {
    let gold = include_str!("fixtures/numbers_gold.tsv");
    let mut count = 0;
    for line in gold.lines().filter(|l| !l.trim().is_empty()) {
        let (n, expected) = line.split_once('\t').expect("tab separated");
        let n: u64 = n.parse().unwrap();
        assert_eq!(verbalize_integer(n).unwrap(), expected, "n = {n}");
        count += 1;
    }
    assert!(count >= 200, "fixture has {count} rows");
}

#[test]
fn range_limits() {
    assert!(verbalize_integer(MAX_CARDINAL - 1).is_ok());
    assert!(matches!(
        verbalize_integer(MAX_CARDINAL),
        Err(Error::Range { .. })
    ));
    let parsed = parse_number_token("1.000.000.000.000.000").unwrap();
    assert!(matches!(
        Lexicon::NORTHERN.number(&parsed),
        Err(Error::Range { .. })
    ));
    assert!(matches!(
        parse_number_token("99999999999999999999999"),
        Err(Error::Range { .. })
    ));
    // out-of-range tokens stay in the text
    assert_eq!(
        normalize_numbers("có 1.000.000.000.000.000 hạt"),
        "có 1.000.000.000.000.000 hạt"
    );
}

#[test]
fn decimals() {
    assert_eq!(verbalize_decimal(3, "14").unwrap(), "ba phẩy mười bốn");
    assert_eq!(verbalize_decimal(0, "05").unwrap(), "không phẩy không năm");
    assert_eq!(verbalize_decimal(2, "125").unwrap(), "hai phẩy một hai năm");
    for (int, frac) in [(0u64, "5"), (12, "75"), (1_000, "001"), (7, "10")] {
        assert_eq!(verbalize_decimal(int, frac).unwrap(), reference_decimal(int, frac));
    }
}

#[test]
fn in_text() {
    assert_eq!(normalize_numbers("có 25 người"), "có hai mươi lăm người");
    assert_eq!(normalize_numbers("1.234.567"), "một triệu hai trăm ba mươi bốn nghìn năm trăm sáu mươi bảy");
    assert_eq!(normalize_numbers("nhiệt độ -3,5"), "nhiệt độ âm ba phẩy năm");
}

fn allowed_words() -> Vec<&'static str> {
    Lexicon::NORTHERN.words().collect()
}

proptest! {
    #[test]
    fn only_lexicon_words(n in 0..MAX_CARDINAL) {
        let allowed = allowed_words();
        let s = verbalize_integer(n).unwrap();
        prop_assert!(!s.chars().any(|c| c.is_ascii_digit()));
        for w in s.split(' ') {
            prop_assert!(allowed.contains(&w), "{w:?} in {s:?}");
        }
    }

    #[test]
    fn short_below_thousand(n in 1u64..1000) {
        prop_assert!(verbalize_integer(n).unwrap().split(' ').count() <= 5);
    }

    #[test]
    fn irregular_forms_in_place(n in 0..MAX_CARDINAL) {
        let s = verbalize_integer(n).unwrap();
        let words: Vec<&str> = s.split(' ').collect();
        for (i, w) in words.iter().enumerate() {
            let prev = if i == 0 { "" } else { words[i - 1] };
            match *w {
                "lăm" => prop_assert!(prev == "mười" || prev == "mươi", "{s}"),
                "mốt" => prop_assert_eq!(prev, "mươi", "{}", s),
                "linh" => prop_assert_eq!(prev, "trăm", "{}", s),
                _ => {}
            }
        }
        // "năm" never directly follows a tens word, "một" never follows "mươi"
        for pair in words.windows(2) {
            prop_assert!(!(pair[0] == "mươi" && pair[1] == "một"), "{s}");
            prop_assert!(!((pair[0] == "mười" || pair[0] == "mươi") && pair[1] == "năm"), "{s}");
        }
    }

    #[test]
    fn grouped_tokens_parse_back(n in 0..MAX_CARDINAL) {
        let digits = n.to_string();
        let mut grouped = String::new();
        for (i, c) in digits.chars().enumerate() {
            if i > 0 && (digits.len() - i) % 3 == 0 {
                grouped.push('.');
            }
            grouped.push(c);
        }
        let parsed = parse_number_token(&grouped).unwrap();
        prop_assert_eq!(parsed.integer, n);
        prop_assert!(parsed.fraction.is_none());
    }
}
