//! Property suite: dictionary lookup against an independent whole-word
//! regex oracle, over the shipped French lexicon.

use std::path::Path;

use proptest::prelude::*;
use regex::Regex;

use errlingo::dictionary::{load_lexicon, strip_edge_punctuation, Lexicon};

fn fixture_lexicon() -> Lexicon {
    let path = Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/fixtures/dico.txt");
    load_lexicon(&path).expect("fixture dictionary").lexicon
}

/// Independent route: whole-token regex match per key, case-insensitive,
/// exact form first, then the punctuation-stripped form.
fn oracle_lookup(lex: &Lexicon, token: &str) -> Option<String> {
    let whole_word = |key: &str, candidate: &str| {
        Regex::new(&format!("(?i)^{}$", regex::escape(key)))
            .unwrap()
            .is_match(candidate)
    };
    for entry in lex.entries() {
        if whole_word(&entry.key, token) {
            return Some(entry.key.clone());
        }
    }
    let folded = token.to_lowercase();
    let stripped = strip_edge_punctuation(&folded);
    if stripped.is_empty() || stripped == folded {
        return None;
    }
    for entry in lex.entries() {
        if whole_word(&entry.key, stripped) {
            return Some(entry.key.clone());
        }
    }
    None
}

fn token_strategy(keys: Vec<String>) -> impl Strategy<Value = String> {
    let random = proptest::string::string_regex("[a-zA-Z0-9_:;()'`.,<>+*\"-]{1,12}").unwrap();
    let mutated = (0..keys.len(), 0..7usize).prop_map(move |(i, mutation)| {
        let key = &keys[i];
        match mutation {
            0 => key.clone(),
            1 => key.to_uppercase(),
            2 => {
                let mut chars = key.chars();
                match chars.next() {
                    Some(first) => first.to_uppercase().collect::<String>() + chars.as_str(),
                    None => key.clone(),
                }
            }
            3 => format!("{key}:"),
            4 => format!("{key}s"),
            5 => format!("({key}"),
            _ => format!("'{key}'"),
        }
    });
    prop_oneof![random, mutated]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]
    #[test]
    fn lookup_agrees_with_regex_oracle(
        token in token_strategy(
            fixture_lexicon().entries().map(|e| e.key.clone()).collect()
        )
    ) {
        let lex = fixture_lexicon();
        let got = lex.lookup(&token).map(|e| e.key.clone());
        let want = oracle_lookup(&lex, &token);
        prop_assert_eq!(got, want, "token {:?}", token);
    }
}

#[test]
fn every_key_matches_case_insensitively() {
    let lex = fixture_lexicon();
    for entry in lex.entries() {
        let upper = lex.lookup(&entry.key.to_uppercase());
        let lower = lex.lookup(&entry.key.to_lowercase());
        let plain = lex.lookup(&entry.key);
        assert_eq!(upper.map(|e| &e.key), Some(&entry.key));
        assert_eq!(lower.map(|e| &e.key), Some(&entry.key));
        assert_eq!(plain.map(|e| &e.key), Some(&entry.key));
    }
}

#[test]
fn plural_never_matches_singular() {
    let lex = fixture_lexicon();
    assert!(lex.lookup("errors").is_none());
}
