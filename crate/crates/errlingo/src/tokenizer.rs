//! Line splitting and token classification.
//!
//! A diagnostic line is split on whitespace and each token is classified so
//! the pipeline can keep code tokens away from the dictionary: quoted
//! literals, file/position locations, and ALL-CAPS keywords are code, the
//! rest is natural language.

use crate::dictionary::strip_edge_punctuation;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TokenKind {
    Natural,
    Quoted,
    Location,
    AllCapsCode,
}

impl TokenKind {
    /// Code tokens are everything except natural language.
    pub fn is_code(self) -> bool {
        self != TokenKind::Natural
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Token {
    /// The token exactly as it appeared (non-empty, no whitespace).
    pub raw: String,
    /// Case-folded form with edge punctuation stripped.
    pub normalized: String,
    pub kind: TokenKind,
}

/// Split a line into classified tokens. Runs of whitespace collapse; an
/// empty line yields an empty list. Every token is kept, however many.
pub fn split_line(line: &str) -> Vec<Token> {
    line.split_whitespace()
        .map(|raw| Token {
            raw: raw.to_owned(),
            normalized: strip_edge_punctuation(&raw.to_lowercase()).to_owned(),
            kind: classify_token(raw),
        })
        .collect()
}

const QUOTE_PAIRS: &[(char, char)] = &[('`', '\''), ('\'', '\''), ('"', '"'), ('\u{2018}', '\u{2019}')];

/// Classify one whitespace-free token. Precedence:
/// quoted > location > all-caps-code > natural. Unknown shapes default to
/// natural, so at worst a code word picks up a harmless gloss.
pub fn classify_token(raw: &str) -> TokenKind {
    if is_quoted(raw) {
        TokenKind::Quoted
    } else if is_location(raw) {
        TokenKind::Location
    } else if is_all_caps_code(raw) {
        TokenKind::AllCapsCode
    } else {
        TokenKind::Natural
    }
}

fn is_quoted(raw: &str) -> bool {
    let mut chars = raw.chars();
    let (Some(first), Some(last)) = (chars.next(), chars.next_back()) else {
        return false;
    };
    // A single quote character is not a pair.
    if raw.chars().count() < 2 {
        return false;
    }
    QUOTE_PAIRS.iter().any(|&(open, close)| first == open && last == close)
}

fn is_location(raw: &str) -> bool {
    if raw.contains('/') {
        return true;
    }
    // Position shapes end with ':' — "6:", "err.f90:4.5:", "err.c:7:1:",
    // and bare file names like "err.c:".
    if let Some(body) = raw.strip_suffix(':') {
        if body.chars().next_back().is_some_and(|c| c.is_ascii_digit()) {
            return true;
        }
        if looks_like_filename(body) {
            return true;
        }
    }
    false
}

fn looks_like_filename(body: &str) -> bool {
    match body.rsplit_once('.') {
        Some((stem, ext)) => {
            !stem.is_empty()
                && !ext.is_empty()
                && stem.chars().next().is_some_and(|c| c.is_alphanumeric() || c == '_' || c == '.')
                && ext.chars().all(|c| c.is_alphanumeric())
        }
        None => false,
    }
}

fn is_all_caps_code(raw: &str) -> bool {
    if raw.chars().count() < 2 {
        return false;
    }
    let mut saw_letter = false;
    for c in raw.chars() {
        if c.is_alphabetic() {
            saw_letter = true;
            if !c.is_uppercase() {
                return false;
            }
        }
    }
    saw_letter
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn splits_bash_diagnostic_line() {
        let tokens = split_line("./testerr.sh: line 6: error near unexpected token `;'");
        let raws: Vec<&str> = tokens.iter().map(|t| t.raw.as_str()).collect();
        assert_eq!(
            raws,
            ["./testerr.sh:", "line", "6:", "error", "near", "unexpected", "token", "`;'"]
        );
    }

    #[test]
    fn empty_line_yields_no_tokens() {
        assert!(split_line("").is_empty());
    }

    #[test]
    fn whitespace_runs_collapse() {
        let tokens = split_line("a  b");
        let raws: Vec<&str> = tokens.iter().map(|t| t.raw.as_str()).collect();
        assert_eq!(raws, ["a", "b"]);
    }

    #[test]
    fn quoted_tokens() {
        assert_eq!(classify_token("`;'"), TokenKind::Quoted);
        assert_eq!(classify_token("'int'"), TokenKind::Quoted);
        assert_eq!(classify_token("\u{2018};\u{2019}"), TokenKind::Quoted);
        assert_eq!(classify_token("\"x\""), TokenKind::Quoted);
        // lone apostrophe and unbalanced shapes are not quoted
        assert_eq!(classify_token("'"), TokenKind::Natural);
        assert_eq!(classify_token("b'"), TokenKind::Natural);
    }

    #[test]
    fn location_tokens() {
        assert_eq!(classify_token("./testerr.sh:"), TokenKind::Location);
        assert_eq!(classify_token("6:"), TokenKind::Location);
        assert_eq!(classify_token("err.f90:4.5:"), TokenKind::Location);
        assert_eq!(classify_token("err.c:7:1:"), TokenKind::Location);
        assert_eq!(classify_token("err.c:"), TokenKind::Location);
    }

    #[test]
    fn all_caps_code_tokens() {
        assert_eq!(classify_token("NAMELIST"), TokenKind::AllCapsCode);
        assert_eq!(classify_token("WRITE"), TokenKind::AllCapsCode);
        // single letters stay natural
        assert_eq!(classify_token("I"), TokenKind::Natural);
        assert_eq!(classify_token("A"), TokenKind::Natural);
        // mixed case is natural so keys like "TypeError" can still match
        assert_eq!(classify_token("TypeError:"), TokenKind::Natural);
        // no letters at all is natural
        assert_eq!(classify_token("(1)"), TokenKind::Natural);
    }

    #[test]
    fn natural_tokens() {
        assert_eq!(classify_token("near"), TokenKind::Natural);
        assert_eq!(classify_token("unexpected"), TokenKind::Natural);
    }

    proptest::proptest! {
        #[test]
        fn resplit_idempotent_on_random_lines(line in "[ -~]{0,80}") {
            let tokens = split_line(&line);
            let joined = tokens.iter().map(|t| t.raw.as_str()).collect::<Vec<_>>().join(" ");
            proptest::prop_assert_eq!(split_line(&joined), tokens);
        }
    }

    #[test]
    fn resplit_is_stable() {
        let line = "err.c:7:1: error: expected \u{2018};\u{2019} before \u{2018}}\u{2019} token";
        let tokens = split_line(line);
        let joined: Vec<String> = tokens.iter().map(|t| t.raw.clone()).collect();
        let resplit = split_line(&joined.join(" "));
        assert_eq!(tokens, resplit);
    }
}
