use proptest::prelude::*;
use vntn_core::batch::normalize_batch_sequential;
use vntn_core::{normalize_batch, replay_trace, Normalizer};

const CORPUS: &str = include_str!("fixtures/mixed_corpus.txt");

fn lines() -> Vec<&'static str> {
    CORPUS.lines().collect()
}

#[test]
fn corpus_has_thousand_lines() {
    assert_eq!(lines().len(), 1000);
}

#[test]
fn no_digit_residue() {
    let n = Normalizer::with_defaults();
    for line in lines() {
        let out = n.normalize_text(line);
        assert!(!out.bytes().any(|b| b.is_ascii_digit()), "{line:?} -> {out:?}");
    }
}

#[test]
fn idempotent() {
    let n = Normalizer::with_defaults();
    for line in lines() {
        let once = n.normalize_text(line);
        assert_eq!(n.normalize_text(&once), once, "{line:?}");
    }
}

#[test]
fn trace_is_faithful() {
    let n = Normalizer::with_defaults();
    for line in lines() {
        for preprocess in [true, false] {
            let r = n.normalize(line, preprocess);
            assert_eq!(replay_trace(line, &r.trace).as_deref(), Some(r.text.as_str()), "{line:?}");
        }
    }
}

#[test]
fn deterministic_and_batch_consistent() {
    let n = Normalizer::with_defaults();
    let input = lines();
    let sequential = normalize_batch_sequential(&n, &input, true);
    let batched = normalize_batch(&n, &input, true);
    assert_eq!(sequential, batched);
    let again = Normalizer::with_defaults();
    for (line, out) in input.iter().zip(&sequential) {
        assert_eq!(again.normalize(line, true), *out);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(512))]

    #[test]
    fn trace_faithful_on_arbitrary_text(s in "[ 0-9a-zA-Zàáđêôươ.,:/%$\\-😀\t]{0,40}") {
        let n = Normalizer::with_defaults();
        let r = n.normalize(&s, true);
        prop_assert_eq!(replay_trace(&s, &r.trace), Some(r.text.clone()));
        prop_assert_eq!(n.normalize_text(&s), r.text);
    }

    #[test]
    fn well_formed_numbers_leave_no_digits(n in 0u64..1_000_000_000_000, words in "[a-z ]{0,10}") {
        let normalizer = Normalizer::with_defaults();
        let text = format!("{words} {n} {words}");
        let out = normalizer.normalize_text(&text);
        prop_assert!(!out.bytes().any(|b| b.is_ascii_digit()), "{}", out);
    }
}
