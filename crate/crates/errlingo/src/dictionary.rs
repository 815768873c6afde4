//! Lexicon parsing, validation and lookup.
//!
//! A lexicon file is plain UTF-8 text with one `key=gloss` entry per line.
//! The first `=` separates key from gloss; lines without `=` are headers or
//! comments and are skipped. Keys are case-folded so lookup ignores case.

use std::collections::HashMap;
use std::path::Path;

use thiserror::Error;

use crate::report::ReportLabels;

/// One dictionary entry. The key may carry attached punctuation exactly as
/// written in the file (e.g. `(most` or `last):`), which lets the lexicon
/// target punctuated tokens directly.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LexiconEntry {
    /// Case-folded key, never empty, never contains whitespace.
    pub key: String,
    /// Target-language text, possibly with an embedded parenthetical
    /// explanation. Right-trimmed, never empty.
    pub gloss: String,
}

/// Immutable key→gloss map. Safe to share across threads once built.
#[derive(Debug, Clone)]
pub struct Lexicon {
    entries: HashMap<String, LexiconEntry>,
    source_path: String,
    labels: ReportLabels,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ParseWarning {
    /// Same case-folded key seen twice; the later entry wins.
    DuplicateKey { key: String, line: usize },
    /// Line starts with `=`; rejected.
    EmptyKey { line: usize },
    /// Key present but nothing after `=`; rejected.
    EmptyGloss { key: String, line: usize },
}

impl std::fmt::Display for ParseWarning {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            ParseWarning::DuplicateKey { key, line } => {
                write!(f, "line {line}: duplicate key '{key}' (last entry wins)")
            }
            ParseWarning::EmptyKey { line } => write!(f, "line {line}: empty key, line rejected"),
            ParseWarning::EmptyGloss { key, line } => {
                write!(f, "line {line}: empty gloss for key '{key}', line rejected")
            }
        }
    }
}

/// Result of [`parse_lexicon`]: the lexicon plus non-fatal findings.
#[derive(Debug)]
pub struct ParseOutcome {
    pub lexicon: Lexicon,
    pub warnings: Vec<ParseWarning>,
}

#[derive(Debug, Error)]
pub enum DictError {
    #[error("cannot read dictionary {path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
    #[error("dictionary {path} is not valid UTF-8")]
    InvalidEncoding { path: String },
}

/// Parse a lexicon document. Total on valid UTF-8: malformed lines produce
/// warnings, never a failure.
pub fn parse_lexicon(text: &str, source_path: &str) -> ParseOutcome {
    let mut entries: HashMap<String, LexiconEntry> = HashMap::new();
    let mut warnings = Vec::new();
    for (idx, line) in text.lines().enumerate() {
        let line_no = idx + 1;
        let Some((raw_key, raw_gloss)) = line.split_once('=') else {
            continue; // header or comment line
        };
        let key = raw_key.trim().to_lowercase();
        let gloss = raw_gloss.trim_end();
        if key.is_empty() {
            warnings.push(ParseWarning::EmptyKey { line: line_no });
            continue;
        }
        if gloss.is_empty() {
            warnings.push(ParseWarning::EmptyGloss { key, line: line_no });
            continue;
        }
        if entries.contains_key(&key) {
            warnings.push(ParseWarning::DuplicateKey {
                key: key.clone(),
                line: line_no,
            });
        }
        entries.insert(
            key.clone(),
            LexiconEntry {
                key,
                gloss: gloss.to_owned(),
            },
        );
    }
    ParseOutcome {
        lexicon: Lexicon {
            entries,
            source_path: source_path.to_owned(),
            labels: ReportLabels::default(),
        },
        warnings,
    }
}

/// Read and parse a lexicon file. Non-UTF-8 content is fatal.
pub fn load_lexicon(path: &Path) -> Result<ParseOutcome, DictError> {
    let display = path.display().to_string();
    let bytes = std::fs::read(path).map_err(|source| DictError::Io {
        path: display.clone(),
        source,
    })?;
    let text = String::from_utf8(bytes)
        .map_err(|_| DictError::InvalidEncoding { path: display.clone() })?;
    Ok(parse_lexicon(&text, &display))
}

impl Lexicon {
    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn source_path(&self) -> &str {
        &self.source_path
    }

    pub fn labels(&self) -> &ReportLabels {
        &self.labels
    }

    pub fn entries(&self) -> impl Iterator<Item = &LexiconEntry> {
        self.entries.values()
    }

    /// Whole-word lookup. The case-folded token is matched against keys
    /// exactly; on a miss the token is retried with leading and trailing
    /// punctuation stripped. Gloss text is never searched.
    pub fn lookup(&self, token: &str) -> Option<&LexiconEntry> {
        let folded = token.to_lowercase();
        if let Some(entry) = self.entries.get(&folded) {
            return Some(entry);
        }
        let stripped = strip_edge_punctuation(&folded);
        if stripped.is_empty() || stripped == folded {
            return None;
        }
        self.entries.get(stripped)
    }
}

/// Remove leading and trailing characters outside letters/digits/underscore.
pub fn strip_edge_punctuation(token: &str) -> &str {
    token.trim_matches(|c: char| !(c.is_alphanumeric() || c == '_'))
}

/// Findings from a validation pass over a lexicon document.
#[derive(Debug, Default, PartialEq, Eq)]
pub struct ValidationReport {
    pub entry_count: usize,
    pub header_lines: usize,
    pub duplicate_keys: Vec<String>,
    pub empty_key_lines: usize,
    pub empty_gloss_keys: Vec<String>,
}

impl ValidationReport {
    pub fn has_findings(&self) -> bool {
        !self.duplicate_keys.is_empty() || self.empty_key_lines > 0 || !self.empty_gloss_keys.is_empty()
    }
}

/// Validate a lexicon document without building a lexicon. Pure; never
/// mutates or rejects the input.
pub fn validate_lexicon(text: &str) -> ValidationReport {
    let mut report = ValidationReport::default();
    let mut seen: HashMap<String, ()> = HashMap::new();
    for line in text.lines() {
        if line.trim().is_empty() {
            continue;
        }
        let Some((raw_key, raw_gloss)) = line.split_once('=') else {
            report.header_lines += 1;
            continue;
        };
        let key = raw_key.trim().to_lowercase();
        if key.is_empty() {
            report.empty_key_lines += 1;
            continue;
        }
        if raw_gloss.trim_end().is_empty() {
            report.empty_gloss_keys.push(key);
            continue;
        }
        if seen.insert(key.clone(), ()).is_some() {
            report.duplicate_keys.push(key);
        } else {
            report.entry_count += 1;
        }
    }
    report
}
