//! Turns captured diagnostic lines into a translation report, and measures
//! how much code leaks through a translator backend.

use std::collections::HashSet;

use thiserror::Error;

use crate::dictionary::Lexicon;
use crate::tokenizer::{split_line, Token};

/// One captured error line with its 1-based index.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DiagnosticLine {
    pub index: usize,
    pub raw: String,
    pub tokens: Vec<Token>,
}

impl DiagnosticLine {
    pub fn new(index: usize, raw: String) -> Self {
        let tokens = split_line(&raw);
        DiagnosticLine { index, raw, tokens }
    }
}

/// One `source=gloss` translation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TranslationPair {
    pub source: String,
    pub gloss: String,
}

/// Ordered per-line translations, cut to the first `max_lines` lines.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TranslationReport {
    pub lines: Vec<(DiagnosticLine, Vec<TranslationPair>)>,
    pub truncated: bool,
    pub max_lines: usize,
}

/// Translate one line word by word. With the guard on, only natural-language
/// tokens reach the dictionary. Tokens resolving to the same dictionary key
/// are emitted once per line, at their first occurrence.
pub fn translate_line(line: &DiagnosticLine, lex: &Lexicon, guard: bool) -> Vec<TranslationPair> {
    let mut pairs = Vec::new();
    let mut seen_keys: HashSet<&str> = HashSet::new();
    for token in &line.tokens {
        if guard && token.kind.is_code() {
            continue;
        }
        if let Some(entry) = lex.lookup(&token.raw) {
            if seen_keys.insert(entry.key.as_str()) {
                pairs.push(TranslationPair {
                    source: token.raw.clone(),
                    gloss: entry.gloss.clone(),
                });
            }
        }
    }
    pairs
}

/// Number the input lines from 1, keep the first `max_lines`, and translate
/// each kept line. Deterministic for identical inputs.
pub fn build_report<I, S>(lines: I, lex: &Lexicon, max_lines: usize, guard: bool) -> TranslationReport
where
    I: IntoIterator<Item = S>,
    S: Into<String>,
{
    assert!(max_lines >= 1, "max_lines must be at least 1");
    let mut kept = Vec::new();
    let mut truncated = false;
    for (idx, raw) in lines.into_iter().enumerate() {
        if kept.len() == max_lines {
            truncated = true;
            break;
        }
        let line = DiagnosticLine::new(idx + 1, raw.into());
        let pairs = translate_line(&line, lex, guard);
        kept.push((line, pairs));
    }
    TranslationReport {
        lines: kept,
        truncated,
        max_lines,
    }
}

/// A message annotated with the code-word occurrences it contains. The file
/// form is UTF-8 text whose first line is `#code: w1 w2 …`; the remaining
/// lines are the message itself.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AnnotatedMessage {
    pub code_words: Vec<String>,
    pub message: String,
}

const CODE_ANNOTATION_PREFIX: &str = "#code:";

/// Parse one annotated message file. A missing `#code:` line means the
/// message has no annotations.
pub fn parse_annotated_message(text: &str) -> AnnotatedMessage {
    match text.split_once('\n') {
        Some((first, rest)) if first.starts_with(CODE_ANNOTATION_PREFIX) => AnnotatedMessage {
            code_words: first[CODE_ANNOTATION_PREFIX.len()..]
                .split_whitespace()
                .map(str::to_owned)
                .collect(),
            message: rest.to_owned(),
        },
        _ if text.starts_with(CODE_ANNOTATION_PREFIX) => AnnotatedMessage {
            code_words: text[CODE_ANNOTATION_PREFIX.len()..]
                .split_whitespace()
                .map(str::to_owned)
                .collect(),
            message: String::new(),
        },
        _ => AnnotatedMessage {
            code_words: Vec::new(),
            message: text.to_owned(),
        },
    }
}

/// Anything that can report which source words of a message it translated.
pub trait TranslatorBackend {
    fn translated_sources(&self, message: &str) -> HashSet<String>;
}

/// The built-in pipeline as a translator backend: the translated sources are
/// the pair sources produced for the message's lines.
pub struct PipelineBackend<'a> {
    pub lexicon: &'a Lexicon,
    pub guard: bool,
}

impl TranslatorBackend for PipelineBackend<'_> {
    fn translated_sources(&self, message: &str) -> HashSet<String> {
        let mut sources = HashSet::new();
        for raw in message.lines() {
            let line = DiagnosticLine::new(1, raw.to_owned());
            for pair in translate_line(&line, self.lexicon, self.guard) {
                sources.insert(pair.source);
            }
        }
        sources
    }
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum RateError {
    #[error("corpus has no annotated code words")]
    EmptyCorpus,
}

/// Percentage of annotated code-word occurrences the backend translated.
/// An occurrence counts per listed word, so repeated words weigh repeatedly.
pub fn code_word_translation_rate(
    corpus: &[AnnotatedMessage],
    backend: &dyn TranslatorBackend,
) -> Result<f64, RateError> {
    let mut total = 0usize;
    let mut translated = 0usize;
    for msg in corpus {
        if msg.code_words.is_empty() {
            continue;
        }
        let sources = backend.translated_sources(&msg.message);
        for word in &msg.code_words {
            total += 1;
            if sources.contains(word) {
                translated += 1;
            }
        }
    }
    if total == 0 {
        return Err(RateError::EmptyCorpus);
    }
    Ok(100.0 * translated as f64 / total as f64)
}
