//! Word-by-word translation of compiler and interpreter error messages.
//!
//! The library wraps a command, captures its error stream, and renders each
//! diagnostic line together with a per-word translation drawn from a plain
//! `key=gloss` lexicon file. Tokens that belong to the code rather than to
//! natural language (quoted literals, ALL-CAPS keywords, file locations) are
//! guarded from translation.

pub mod cli;
pub mod dictionary;
pub mod pipeline;
pub mod report;
pub mod runner;
pub mod tokenizer;
