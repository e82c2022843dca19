//! Command-line interface.
//!
//! Exit codes: 0 on success or agreement, 2 when a cross-validation finds a
//! disagreement, 64 on usage or parse errors.

use std::ffi::OsString;
use std::fs;
use std::io::{self, BufRead, Write};
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use unieuler_core::mfw::{brute_mfw, constructive_mfw};
use unieuler_core::{
    build_grammar_nfa, enumerate_trails, Alphabet, GrammarMode, Multigraph, Trail,
};

use crate::crosscheck::crosscheck;
use crate::report::check_trail;
use crate::text::{numeric_alphabet, parse_trail, render, render_compact, ParseMode, COMPACT_MAX};

pub const EXIT_OK: i32 = 0;
pub const EXIT_DISAGREE: i32 = 2;
pub const EXIT_USAGE: i32 = 64;

/// Largest number of strict-grammar gaps listed by `crosscheck`.
const GAPS_LISTED: usize = 20;

#[derive(Debug, Parser)]
#[command(
    name = "unieuler",
    version,
    about = "Is a vertex sequence the only Eulerian trail of its multigraph?"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Check one sequence per line
    Check {
        /// Input file; standard input when absent or "-"
        file: Option<PathBuf>,
        /// Whitespace-separated symbols instead of one character per symbol
        #[arg(long)]
        tokens: bool,
        /// Fix the alphabet to the ids 0..M
        #[arg(long = "alphabet-size", value_name = "M")]
        alphabet_size: Option<usize>,
        /// Attach a transposition witness and the alternative trail
        #[arg(long)]
        explain: bool,
        /// One JSON object per line
        #[arg(long)]
        json: bool,
    },
    /// List the Eulerian trails of the sequence's multigraph from its first symbol
    Trails {
        sequence: String,
        #[arg(long)]
        tokens: bool,
        #[arg(long)]
        limit: Option<usize>,
    },
    /// Print the minimal forbidden words up to a length
    Mfw {
        #[arg(long = "alphabet-size", value_name = "M")]
        alphabet_size: usize,
        #[arg(long = "max-len", value_name = "L")]
        max_len: usize,
        #[arg(long, value_enum, default_value_t = Method::Both)]
        method: Method,
    },
    /// Compare all classifiers on every string up to a length
    Crosscheck {
        #[arg(long = "alphabet-size", value_name = "M")]
        alphabet_size: usize,
        #[arg(long = "max-len", value_name = "L")]
        max_len: usize,
        #[arg(long, value_enum, default_value_t = Grammar::Amended)]
        grammar: Grammar,
    },
    /// Print the complement grammar's NFA as `from symbol to` lines
    Grammar {
        #[arg(long = "alphabet-size", value_name = "M")]
        alphabet_size: usize,
        #[arg(long, value_enum, default_value_t = Grammar::Strict)]
        mode: Grammar,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Method {
    Constructive,
    Brute,
    Both,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Grammar {
    Strict,
    Amended,
}

impl From<Grammar> for GrammarMode {
    fn from(g: Grammar) -> Self {
        match g {
            Grammar::Strict => GrammarMode::Strict,
            Grammar::Amended => GrammarMode::Amended,
        }
    }
}

/// Runs the CLI on `args` (including the program name) and returns the exit
/// code.
pub fn run<I, T>(args: I, stdin: &mut dyn BufRead, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = write!(err, "{e}");
            return if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
        }
    };
    let result = match cli.command {
        Command::Check {
            file,
            tokens,
            alphabet_size,
            explain,
            json,
        } => {
            let mode = if tokens {
                ParseMode::Tokens
            } else {
                ParseMode::Chars
            };
            cmd_check(file, mode, alphabet_size, explain, json, stdin, out)
        }
        Command::Trails {
            sequence,
            tokens,
            limit,
        } => {
            let mode = if tokens {
                ParseMode::Tokens
            } else {
                ParseMode::Chars
            };
            cmd_trails(&sequence, mode, limit, out)
        }
        Command::Mfw {
            alphabet_size,
            max_len,
            method,
        } => cmd_mfw(alphabet_size, max_len, method, out),
        Command::Crosscheck {
            alphabet_size,
            max_len,
            grammar,
        } => cmd_crosscheck(alphabet_size, max_len, grammar.into(), out, err),
        Command::Grammar {
            alphabet_size,
            mode,
        } => cmd_grammar(alphabet_size, mode.into(), out),
    };
    match result {
        Ok(code) => code,
        Err(CliError::Usage(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_USAGE
        }
        Err(CliError::Io(e)) => {
            let _ = writeln!(err, "error: {e}");
            1
        }
    }
}

#[derive(Debug)]
enum CliError {
    Usage(String),
    Io(io::Error),
}

impl From<io::Error> for CliError {
    fn from(e: io::Error) -> Self {
        CliError::Io(e)
    }
}

fn usage<E: std::fmt::Display>(e: E) -> CliError {
    CliError::Usage(e.to_string())
}

fn cmd_check(
    file: Option<PathBuf>,
    mode: ParseMode,
    alphabet_size: Option<usize>,
    explain: bool,
    json: bool,
    stdin: &mut dyn BufRead,
    out: &mut dyn Write,
) -> Result<i32, CliError> {
    let fixed = match alphabet_size {
        Some(m) => {
            Some(numeric_alphabet(m).ok_or_else(|| usage("--alphabet-size must be at least 1"))?)
        }
        None => None,
    };
    let input = match file {
        Some(path) if path.as_os_str() != "-" => {
            fs::read_to_string(&path).map_err(|e| usage(format!("{}: {e}", path.display())))?
        }
        _ => {
            let mut s = String::new();
            stdin.read_to_string(&mut s)?;
            s
        }
    };

    // parse everything first so a bad line yields no partial output
    let mut parsed: Vec<(Trail, Alphabet)> = Vec::new();
    for (k, line) in input.lines().enumerate() {
        let entry = parse_trail(line, mode, fixed.as_ref())
            .map_err(|e| usage(format!("line {}: {e}", k + 1)))?;
        parsed.push(entry);
    }

    for (index, (t, alphabet)) in parsed.iter().enumerate() {
        let m = alphabet.len().max(1);
        let report = check_trail(index, t, alphabet, m, mode, explain).map_err(usage)?;
        if json {
            writeln!(out, "{}", report.to_json())?;
        } else {
            writeln!(out, "{}", report.to_plain())?;
        }
    }
    Ok(EXIT_OK)
}

fn cmd_trails(
    sequence: &str,
    mode: ParseMode,
    limit: Option<usize>,
    out: &mut dyn Write,
) -> Result<i32, CliError> {
    let (t, alphabet) = parse_trail(sequence, mode, None).map_err(usage)?;
    if t.is_empty() {
        return Err(usage("empty sequence"));
    }
    let g = Multigraph::induced(&t, alphabet.len()).map_err(usage)?;
    for trail in enumerate_trails(&g, t[0], limit).map_err(usage)? {
        writeln!(out, "{}", render(&trail, &alphabet, mode))?;
    }
    Ok(EXIT_OK)
}

fn cmd_mfw(m: usize, max_len: usize, method: Method, out: &mut dyn Write) -> Result<i32, CliError> {
    if m == 0 || m > COMPACT_MAX {
        return Err(usage(format!(
            "--alphabet-size must be between 1 and {COMPACT_MAX}"
        )));
    }
    let words = match method {
        Method::Constructive => constructive_mfw(m, max_len).map_err(usage)?,
        Method::Brute => brute_mfw(m, max_len).map_err(usage)?,
        Method::Both => {
            let built = constructive_mfw(m, max_len).map_err(usage)?;
            let scanned = brute_mfw(m, max_len).map_err(usage)?;
            if built != scanned {
                for w in built.iter().filter(|w| scanned.binary_search(w).is_err()) {
                    writeln!(out, "constructive-only\t{}", render_compact(w))?;
                }
                for w in scanned.iter().filter(|w| built.binary_search(w).is_err()) {
                    writeln!(out, "brute-only\t{}", render_compact(w))?;
                }
                return Ok(EXIT_DISAGREE);
            }
            built
        }
    };
    for w in &words {
        writeln!(out, "{}", render_compact(w))?;
    }
    Ok(EXIT_OK)
}

fn cmd_crosscheck(
    m: usize,
    max_len: usize,
    grammar: GrammarMode,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> Result<i32, CliError> {
    if m == 0 || m > COMPACT_MAX {
        return Err(usage(format!(
            "--alphabet-size must be between 1 and {COMPACT_MAX}"
        )));
    }
    let report = crosscheck(m, max_len, grammar).map_err(usage)?;
    let grammar_name = match grammar {
        GrammarMode::Strict => "strict",
        GrammarMode::Amended => "amended",
    };
    writeln!(out, "strings\t{}", report.strings)?;
    writeln!(out, "unique\t{}", report.unique)?;
    writeln!(out, "nonunique\t{}", report.strings - report.unique)?;
    writeln!(out, "grammar\t{grammar_name}")?;
    writeln!(out, "disagreements\t{}", report.disagreements.len())?;
    for d in &report.disagreements {
        writeln!(
            out,
            "counterexample\t{}\tautomaton={}\toracle={}\tlprime_scan={}\tgrammar={}",
            render_compact(&d.word),
            d.automaton,
            d.oracle,
            d.lprime_scan,
            d.grammar
        )?;
    }
    if grammar == GrammarMode::Strict {
        writeln!(out, "grammar_gaps\t{}", report.grammar_gaps.len())?;
        for g in report.grammar_gaps.iter().take(GAPS_LISTED) {
            writeln!(out, "gap\t{}", render_compact(g))?;
        }
    }
    for (name, d) in &report.timings {
        writeln!(err, "time\t{name}\t{:.3}ms", d.as_secs_f64() * 1e3)?;
    }
    Ok(if report.is_clean() {
        EXIT_OK
    } else {
        EXIT_DISAGREE
    })
}

fn cmd_grammar(m: usize, mode: GrammarMode, out: &mut dyn Write) -> Result<i32, CliError> {
    let nfa = build_grammar_nfa(m, mode).map_err(usage)?;
    for line in nfa.transition_lines() {
        writeln!(out, "{line}")?;
    }
    Ok(EXIT_OK)
}
