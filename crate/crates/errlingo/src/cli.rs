//! Command-line front end: `run`, `translate`, `dict validate`, `rate`.

use std::io::Read;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};

use crate::dictionary::{load_lexicon, validate_lexicon, Lexicon, ValidationReport};
use crate::pipeline::{
    build_report, code_word_translation_rate, parse_annotated_message, AnnotatedMessage,
    PipelineBackend, RateError,
};
use crate::report::{render, render_diagnostics, ReportLabels};
use crate::runner::{run_command, RunError, RunRequest};

/// Exit code for usage and I/O errors.
pub const EXIT_USAGE: i32 = 2;
/// Exit code when the wrapped program cannot be spawned.
pub const EXIT_SPAWN_FAILURE: i32 = 127;

#[derive(Parser, Debug)]
#[command(
    name = "errlingo",
    version,
    about = "Run a compiler or interpreter and translate its error messages word by word"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Args, Debug, Clone)]
pub struct CommonOpts {
    /// Dictionary file (key=gloss per line)
    #[arg(long = "dict", env = "ERRLINGO_DICT", default_value = "dico.txt", value_name = "PATH")]
    pub dict: PathBuf,

    /// Keep only the first N diagnostic lines
    #[arg(long = "max-lines", default_value_t = 10, value_parser = clap::value_parser!(u64).range(1..), value_name = "N")]
    pub max_lines: u64,

    /// Also look up quoted, ALL-CAPS and location tokens
    #[arg(long = "no-guard")]
    pub no_guard: bool,

    /// Write the report here instead of standard output (overwrites)
    #[arg(long = "output", value_name = "PATH")]
    pub output: Option<PathBuf>,

    /// Header above the wrapped command's output
    #[arg(long = "label-results", default_value = "RESULTATS", value_name = "TEXT")]
    pub label_results: String,

    /// Header above the diagnostics section
    #[arg(long = "label-errors", default_value = "ERREURS", value_name = "TEXT")]
    pub label_errors: String,

    /// Header above each per-line translation block
    #[arg(long = "label-translation", default_value = "TRADUCTION", value_name = "TEXT")]
    pub label_translation: String,

    /// Prefix of each numbered diagnostic line
    #[arg(long = "label-line", default_value = "LIGNE", value_name = "TEXT")]
    pub label_line: String,
}

impl CommonOpts {
    fn labels(&self) -> ReportLabels {
        ReportLabels {
            results: self.label_results.clone(),
            errors: self.label_errors.clone(),
            translation: self.label_translation.clone(),
            line: self.label_line.clone(),
        }
    }

    fn guard(&self) -> bool {
        !self.no_guard
    }
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Run a command, capture its error stream and translate it
    Run {
        #[command(flatten)]
        opts: CommonOpts,
        /// The command to wrap, after `--`
        #[arg(last = true, required = true, value_name = "ARGV")]
        argv: Vec<String>,
    },
    /// Translate pre-captured diagnostics from standard input
    Translate {
        #[command(flatten)]
        opts: CommonOpts,
    },
    /// Dictionary utilities
    Dict {
        #[command(subcommand)]
        command: DictCommand,
    },
    /// Code-word translation rate over an annotated corpus
    Rate {
        #[command(flatten)]
        opts: CommonOpts,
        /// Directory of annotated message files
        corpus_dir: PathBuf,
    },
}

#[derive(Subcommand, Debug)]
pub enum DictCommand {
    /// Check a dictionary file for duplicate or malformed entries
    Validate {
        #[arg(long = "dict", env = "ERRLINGO_DICT", default_value = "dico.txt", value_name = "PATH")]
        dict: PathBuf,
    },
}

/// Dispatch a parsed command line; returns the process exit code.
pub fn execute(cli: Cli) -> i32 {
    match cli.command {
        Command::Run { opts, argv } => cmd_run(&opts, argv),
        Command::Translate { opts } => cmd_translate(&opts),
        Command::Dict { command } => match command {
            DictCommand::Validate { dict } => cmd_dict_validate(&dict),
        },
        Command::Rate { opts, corpus_dir } => cmd_rate(&opts, &corpus_dir),
    }
}

fn load_lexicon_or_exit(path: &Path) -> Result<Lexicon, i32> {
    match load_lexicon(path) {
        Ok(outcome) => {
            for warning in &outcome.warnings {
                eprintln!("errlingo: warning: {}: {warning}", path.display());
            }
            Ok(outcome.lexicon)
        }
        Err(err) => {
            eprintln!("errlingo: {err}");
            Err(EXIT_USAGE)
        }
    }
}

fn write_document(output: Option<&Path>, document: &str) -> Result<(), i32> {
    match output {
        Some(path) => std::fs::write(path, document).map_err(|err| {
            eprintln!("errlingo: cannot write {}: {err}", path.display());
            EXIT_USAGE
        }),
        None => {
            print!("{document}");
            Ok(())
        }
    }
}

fn cmd_run(opts: &CommonOpts, argv: Vec<String>) -> i32 {
    let lexicon = match load_lexicon_or_exit(&opts.dict) {
        Ok(lex) => lex,
        Err(code) => return code,
    };
    let result = match run_command(&RunRequest::new(argv)) {
        Ok(result) => result,
        Err(err @ RunError::Spawn { .. }) => {
            eprintln!("errlingo: {err}");
            return EXIT_SPAWN_FAILURE;
        }
        Err(err) => {
            eprintln!("errlingo: {err}");
            return EXIT_USAGE;
        }
    };
    let report = build_report(
        result.stderr_lines.iter().cloned(),
        &lexicon,
        opts.max_lines as usize,
        opts.guard(),
    );
    let document = render(&report, &result.stdout_text, &opts.labels());
    if let Err(code) = write_document(opts.output.as_deref(), &document) {
        return code;
    }
    result.exit_code()
}

fn cmd_translate(opts: &CommonOpts) -> i32 {
    let lexicon = match load_lexicon_or_exit(&opts.dict) {
        Ok(lex) => lex,
        Err(code) => return code,
    };
    let mut input = String::new();
    if let Err(err) = std::io::stdin().read_to_string(&mut input) {
        eprintln!("errlingo: cannot read standard input: {err}");
        return EXIT_USAGE;
    }
    let lines: Vec<&str> = if input.is_empty() {
        Vec::new()
    } else {
        let mut lines: Vec<&str> = input.split('\n').collect();
        if lines.last().is_some_and(|l| l.is_empty()) {
            lines.pop();
        }
        lines
    };
    let report = build_report(lines, &lexicon, opts.max_lines as usize, opts.guard());
    let document = render_diagnostics(&report, &opts.labels());
    if let Err(code) = write_document(opts.output.as_deref(), &document) {
        return code;
    }
    0
}

fn cmd_dict_validate(dict: &Path) -> i32 {
    let text = match std::fs::read(dict) {
        Ok(bytes) => match String::from_utf8(bytes) {
            Ok(text) => text,
            Err(_) => {
                eprintln!("errlingo: dictionary {} is not valid UTF-8", dict.display());
                return EXIT_USAGE;
            }
        },
        Err(err) => {
            eprintln!("errlingo: cannot read dictionary {}: {err}", dict.display());
            return EXIT_USAGE;
        }
    };
    let report = validate_lexicon(&text);
    print_validation(&report);
    if report.has_findings() {
        1
    } else {
        0
    }
}

fn print_validation(report: &ValidationReport) {
    println!("entries: {}", report.entry_count);
    println!("header lines skipped: {}", report.header_lines);
    println!("empty keys: {}", report.empty_key_lines);
    println!("duplicate keys: {}", report.duplicate_keys.len());
    for key in &report.duplicate_keys {
        println!("  duplicate key: {key}");
    }
    for key in &report.empty_gloss_keys {
        println!("  empty gloss for key: {key}");
    }
}

fn cmd_rate(opts: &CommonOpts, corpus_dir: &Path) -> i32 {
    let lexicon = match load_lexicon_or_exit(&opts.dict) {
        Ok(lex) => lex,
        Err(code) => return code,
    };
    let corpus = match load_corpus(corpus_dir) {
        Ok(corpus) => corpus,
        Err(code) => return code,
    };
    let backend = PipelineBackend {
        lexicon: &lexicon,
        guard: opts.guard(),
    };
    match code_word_translation_rate(&corpus, &backend) {
        Ok(rate) => {
            println!("{rate:.1}%");
            0
        }
        Err(RateError::EmptyCorpus) => {
            eprintln!("errlingo: corpus has no annotated code words");
            EXIT_USAGE
        }
    }
}

fn load_corpus(dir: &Path) -> Result<Vec<AnnotatedMessage>, i32> {
    let entries = std::fs::read_dir(dir).map_err(|err| {
        eprintln!("errlingo: cannot read corpus directory {}: {err}", dir.display());
        EXIT_USAGE
    })?;
    let mut paths: Vec<PathBuf> = entries
        .filter_map(|e| e.ok().map(|e| e.path()))
        .filter(|p| p.is_file())
        .collect();
    paths.sort();
    if paths.is_empty() {
        eprintln!("errlingo: corpus directory {} has no files", dir.display());
        return Err(EXIT_USAGE);
    }
    let mut corpus = Vec::new();
    for path in paths {
        let text = std::fs::read_to_string(&path).map_err(|err| {
            eprintln!("errlingo: cannot read {}: {err}", path.display());
            EXIT_USAGE
        })?;
        corpus.push(parse_annotated_message(&text));
    }
    Ok(corpus)
}
