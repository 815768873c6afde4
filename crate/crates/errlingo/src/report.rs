//! Text rendering of a translation report.
//!
//! The layout is the user-facing output format: a results header followed by
//! the wrapped command's stdout, an errors header, and then one block per
//! diagnostic line holding the raw line and its `source=gloss` pairs.

use crate::pipeline::TranslationReport;

const HEADER_INDENT: &str = "           "; // 11 spaces

/// Section labels used by the renderer. Defaults are French; every label can
/// be overridden to localize the report frame itself.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReportLabels {
    pub results: String,
    pub errors: String,
    pub translation: String,
    pub line: String,
}

impl Default for ReportLabels {
    fn default() -> Self {
        ReportLabels {
            results: "RESULTATS".to_owned(),
            errors: "ERREURS".to_owned(),
            translation: "TRADUCTION".to_owned(),
            line: "LIGNE".to_owned(),
        }
    }
}

/// Render the full report: results section with the passthrough stdout text,
/// then the diagnostics section.
pub fn render(report: &TranslationReport, stdout_text: &str, labels: &ReportLabels) -> String {
    let mut out = String::new();
    out.push_str(HEADER_INDENT);
    out.push_str(&labels.results);
    out.push('\n');
    out.push_str(stdout_text);
    if !stdout_text.is_empty() && !stdout_text.ends_with('\n') {
        out.push('\n');
    }
    push_diagnostics(&mut out, report, labels);
    out
}

/// Render only the errors/translation sections (no results header, no
/// passthrough text). Used when translating pre-captured diagnostics.
pub fn render_diagnostics(report: &TranslationReport, labels: &ReportLabels) -> String {
    let mut out = String::new();
    push_diagnostics(&mut out, report, labels);
    out
}

fn push_diagnostics(out: &mut String, report: &TranslationReport, labels: &ReportLabels) {
    out.push_str(HEADER_INDENT);
    out.push_str(&labels.errors);
    out.push('\n');
    for (line, pairs) in &report.lines {
        out.push('\n');
        out.push_str(&labels.line);
        out.push(' ');
        out.push_str(&line.index.to_string());
        out.push('\n');
        out.push_str(&line.raw);
        out.push('\n');
        out.push_str(HEADER_INDENT);
        out.push_str(&labels.translation);
        out.push(' ');
        out.push_str(&line.index.to_string());
        out.push('\n');
        for pair in pairs {
            out.push_str(&pair.source);
            out.push('=');
            out.push_str(&pair.gloss);
            out.push('\n');
        }
    }
    out.push('\n');
}
