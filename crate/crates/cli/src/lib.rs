//! Command-line front end: table emission, correlation queries, border sets,
//! the correlation matrix, avoidance counts and the verification suite.

use std::fmt::Write as _;
use std::io::{self, Write};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use fibword::avoid::{count_avoiding, count_avoiding_bruteforce, min_forbidden_family};
use fibword::borders::{border_set_bruteforce, border_set_closed, border_set_recursive};
use fibword::closed_form::{correlation_matrix, matrix_family_index};
use fibword::correlation::{correlation, polynomial_of, shift_diagram};
use fibword::family::{fib_number, fib_word, min_forbidden, palindromic_prefix};
use fibword::verify::{run_all, DEFAULT_MAX_INDEX, DEFAULT_SEED};
use fibword::{BigCountTable, BorderSet, CorrelationPolynomial, Word};

/// Token accepted on the command line for the empty word.
pub const EMPTY_WORD_TOKEN: &str = "eps";

#[derive(Debug, Parser)]
#[command(
    name = "fibword",
    version,
    about = "Fibonacci minimal forbidden words and their correlations"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Emit a table of one of the indexed families.
    Family {
        #[arg(value_enum)]
        table: Table,
        #[arg(long)]
        max: u32,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Correlation word and polynomial of u over v.
    Corr {
        u: String,
        v: String,
        /// Also print the shift diagram.
        #[arg(long)]
        diagram: bool,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Nonempty borders of M_n in increasing length.
    Borders {
        n: u32,
        #[arg(long, value_enum, default_value_t = Method::Recursive)]
        method: Method,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// The k×k matrix of closed-form correlations; row i is M_{i+2}.
    Matrix {
        k: usize,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Count binary words of each length avoiding a pattern set.
    Count(CountArgs),
    /// Run every cross-check up to a family index.
    Verify {
        #[arg(long, default_value_t = DEFAULT_MAX_INDEX)]
        max_index: u32,
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
}

#[derive(Debug, Args)]
pub struct CountArgs {
    /// Comma-separated patterns.
    #[arg(
        long,
        value_delimiter = ',',
        required_unless_present = "family",
        conflicts_with = "family"
    )]
    patterns: Vec<String>,
    /// Use {M_3, ..., M_K}.
    #[arg(long)]
    family: Option<u32>,
    #[arg(long)]
    max_len: usize,
    /// Count by exhaustive enumeration instead of the automaton.
    #[arg(long)]
    brute: bool,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Table {
    FibNumbers,
    FibWords,
    PalindromicPrefixes,
    MinForbidden,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Method {
    Brute,
    Recursive,
    Closed,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Latex,
}

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error(transparent)]
    Usage(#[from] clap::Error),
    #[error("{0}")]
    Domain(#[from] fibword::Error),
    #[error("{0}")]
    Unsupported(String),
    #[error("{failed} of {total} checks failed")]
    VerificationFailed { failed: usize, total: usize },
    #[error(transparent)]
    Io(#[from] io::Error),
}

impl CliError {
    /// Process exit status: 2 for usage errors, 1 otherwise.
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(e) => e.exit_code(),
            CliError::Unsupported(_) => 2,
            _ => 1,
        }
    }
}

pub type CliResult<T> = Result<T, CliError>;

pub fn parse_word(token: &str) -> CliResult<Word> {
    if token == EMPTY_WORD_TOKEN {
        return Ok(Word::empty());
    }
    Ok(token.parse()?)
}

fn unsupported(command: &str, format: Format) -> CliError {
    CliError::Unsupported(format!("{command} does not support --format {format:?}").to_lowercase())
}

fn latex_word(w: &Word) -> String {
    if w.is_empty() {
        "$\\epsilon$".to_owned()
    } else {
        w.to_string()
    }
}

fn text_word(w: &Word) -> String {
    if w.is_empty() {
        "ε".to_owned()
    } else {
        w.to_string()
    }
}

type WordMaker = fn(u32) -> fibword::Result<Word>;

/// Renders one of the family tables for indices up to `max`.
pub fn render_family(table: Table, max: u32, format: Format) -> CliResult<String> {
    let mut out = String::new();
    if table == Table::FibNumbers {
        let values = (1..=max)
            .map(|n| Ok((n, fib_number(n)?)))
            .collect::<fibword::Result<Vec<_>>>()?;
        match format {
            Format::Text => {
                for (n, f) in values {
                    writeln!(out, "F_{n} = {f}").unwrap();
                }
            }
            Format::Json => {
                for (n, f) in values {
                    writeln!(
                        out,
                        "{}",
                        json!({"table": "fib-numbers", "n": n, "value": f})
                    )
                    .unwrap();
                }
            }
            Format::Latex => {
                let cols = vec!["c"; values.len() + 1].join("|");
                let ns: Vec<String> = values.iter().map(|(n, _)| n.to_string()).collect();
                let fs: Vec<String> = values.iter().map(|(_, f)| f.to_string()).collect();
                writeln!(out, "\\begin{{tabular}}{{{cols}}}").unwrap();
                writeln!(out, "$n$ & {} \\\\", ns.join(" & ")).unwrap();
                writeln!(out, "\\hline").unwrap();
                writeln!(out, "$F_n$ & {}", fs.join(" & ")).unwrap();
                writeln!(out, "\\end{{tabular}}").unwrap();
            }
        }
        return Ok(out);
    }

    let (symbol, name, first, make): (&str, &str, u32, WordMaker) = match table {
        Table::FibWords => ("f", "fib-words", 1, fib_word),
        Table::PalindromicPrefixes => ("p", "palindromic-prefixes", 3, palindromic_prefix),
        Table::MinForbidden => ("M", "min-forbidden", 3, min_forbidden),
        Table::FibNumbers => unreachable!(),
    };
    let rows = (first..=max)
        .map(|n| Ok((n, make(n)?)))
        .collect::<fibword::Result<Vec<_>>>()?;
    match format {
        Format::Text => {
            for (n, w) in &rows {
                writeln!(out, "{symbol}_{n} = {}", text_word(w)).unwrap();
            }
        }
        Format::Json => {
            for (n, w) in &rows {
                writeln!(
                    out,
                    "{}",
                    json!({"table": name, "n": n, "word": w.to_string()})
                )
                .unwrap();
            }
        }
        Format::Latex => {
            writeln!(out, "\\begin{{tabular}}{{l}}").unwrap();
            let lines: Vec<String> = rows
                .iter()
                .map(|(n, w)| format!("${symbol}_{n}$ = {}", latex_word(w)))
                .collect();
            writeln!(out, "{}", lines.join(" \\\\\n")).unwrap();
            writeln!(out, "\\end{{tabular}}").unwrap();
        }
    }
    Ok(out)
}

pub fn render_corr(u: &Word, v: &Word, diagram: bool, format: Format) -> CliResult<String> {
    let c = correlation(u, v)?;
    let p: CorrelationPolynomial = polynomial_of(&c);
    let mut out = String::new();
    match format {
        Format::Text => {
            writeln!(out, "{c}").unwrap();
            writeln!(out, "{p}").unwrap();
            if diagram {
                out.push_str(&shift_diagram(u, v)?);
            }
        }
        Format::Json => {
            let mut record = json!({
                "u": u.to_string(),
                "v": v.to_string(),
                "correlation": c.to_string(),
                "polynomial": p.to_string(),
                "exponents": p.exponents(),
            });
            if diagram {
                record["diagram"] = json!(shift_diagram(u, v)?);
            }
            writeln!(out, "{record}").unwrap();
        }
        Format::Latex => return Err(unsupported("corr", format)),
    }
    Ok(out)
}

pub fn border_set(n: u32, method: Method) -> fibword::Result<BorderSet> {
    match method {
        Method::Brute => border_set_bruteforce(n),
        Method::Recursive => border_set_recursive(n),
        Method::Closed => border_set_closed(n),
    }
}

pub fn render_borders(n: u32, method: Method, format: Format) -> CliResult<String> {
    let set = border_set(n, method)?;
    match format {
        Format::Text => Ok(format!("{set}\n")),
        Format::Json => {
            let members: Vec<String> = set.iter().map(Word::to_string).collect();
            Ok(format!(
                "{}\n",
                json!({"n": n, "borders": members, "lengths": set.lengths()})
            ))
        }
        Format::Latex => Err(unsupported("borders", format)),
    }
}

pub fn render_matrix(k: usize, format: Format) -> CliResult<String> {
    let m = correlation_matrix::<u64>(k)?;
    Ok(match format {
        Format::Text => m.to_text(),
        Format::Latex => m.to_latex(),
        Format::Json => {
            let mut out = String::new();
            for i in 1..=k {
                for j in 1..=k {
                    let p = m.entry(i, j);
                    let record = json!({
                        "i": i,
                        "j": j,
                        "n": matrix_family_index(i),
                        "m": matrix_family_index(j),
                        "polynomial": p.to_string(),
                        "exponents": p.exponents(),
                    });
                    writeln!(out, "{record}").unwrap();
                }
            }
            out
        }
    })
}

pub fn render_count(args: &CountArgs) -> CliResult<String> {
    let patterns: Vec<Word> = match args.family {
        Some(k) => min_forbidden_family(k)?,
        None => args
            .patterns
            .iter()
            .map(|p| parse_word(p))
            .collect::<CliResult<_>>()?,
    };
    let table: BigCountTable = if args.brute {
        count_avoiding_bruteforce(&patterns, args.max_len)?
    } else {
        count_avoiding(&patterns, args.max_len)?
    };
    let mut out = String::new();
    match args.format {
        Format::Text => {
            for (n, c) in table.counts().iter().enumerate() {
                writeln!(out, "{n} {c}").unwrap();
            }
        }
        Format::Json => {
            for (n, c) in table.counts().iter().enumerate() {
                writeln!(out, "{}", json!({"length": n, "count": c.to_string()})).unwrap();
            }
        }
        Format::Latex => return Err(unsupported("count", args.format)),
    }
    Ok(out)
}

/// Verification report with its tallies.
pub struct VerifyReport {
    pub text: String,
    pub failed: usize,
    pub total: usize,
}

pub fn render_verify(max_index: u32, seed: u64, format: Format) -> CliResult<VerifyReport> {
    let outcomes = run_all(max_index, seed)?;
    let failed = outcomes.iter().filter(|o| !o.passed()).count();
    let mut out = String::new();
    match format {
        Format::Text => {
            for o in &outcomes {
                match &o.failure {
                    None => writeln!(out, "PASS {} ({} cases)", o.name, o.cases).unwrap(),
                    Some(msg) => writeln!(out, "FAIL {}: {msg}", o.name).unwrap(),
                }
            }
            writeln!(
                out,
                "{} passed, {failed} failed (max index {max_index}, seed {seed})",
                outcomes.len() - failed
            )
            .unwrap();
        }
        Format::Json => {
            for o in &outcomes {
                let record = json!({"check": o.name, "passed": o.passed(), "cases": o.cases, "failure": o.failure});
                writeln!(out, "{record}").unwrap();
            }
            let summary = json!({"summary": {"passed": outcomes.len() - failed, "failed": failed, "max_index": max_index, "seed": seed}});
            writeln!(out, "{summary}").unwrap();
        }
        Format::Latex => return Err(unsupported("verify", format)),
    }
    Ok(VerifyReport {
        text: out,
        failed,
        total: outcomes.len(),
    })
}

/// Parses `args` (including the program name) and writes the command output.
pub fn run<I, T>(args: I, out: &mut impl Write) -> CliResult<()>
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = Cli::try_parse_from(args)?;
    let text = match &cli.command {
        Command::Family { table, max, format } => render_family(*table, *max, *format)?,
        Command::Corr {
            u,
            v,
            diagram,
            format,
        } => render_corr(&parse_word(u)?, &parse_word(v)?, *diagram, *format)?,
        Command::Borders { n, method, format } => render_borders(*n, *method, *format)?,
        Command::Matrix { k, format } => render_matrix(*k, *format)?,
        Command::Count(args) => render_count(args)?,
        Command::Verify {
            max_index,
            seed,
            format,
        } => {
            let report = render_verify(*max_index, *seed, *format)?;
            out.write_all(report.text.as_bytes())?;
            if report.failed > 0 {
                return Err(CliError::VerificationFailed {
                    failed: report.failed,
                    total: report.total,
                });
            }
            return Ok(());
        }
    };
    out.write_all(text.as_bytes())?;
    Ok(())
}
