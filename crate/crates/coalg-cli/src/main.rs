//! Command-line front end: membership, coefficient, equivalence, unfolding
//! and enumeration queries over automata, grammars, stack machines and
//! recursive program schemes in the documented file formats.

use clap::{Parser, Subcommand};
use coalg_cli::commands::{self, EquivMode};
use coalg_cli::doc;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

#[derive(Parser)]
#[command(
    name = "coalg",
    version,
    about = "Behaviour queries for automata with side effects",
    long_about = "Loads automata, weighted grammars, stack machines and recursive program \
                  schemes from documents and answers membership, coefficient, equivalence, \
                  unfolding and enumeration queries.\n\nExit status: 0 for positive answers, \
                  1 for negative answers (reject / distinguished / out of budget), 2 for \
                  input errors."
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Decide whether a word is accepted (automata, machines) or has a
    /// non-zero coefficient (grammars).
    Member {
        file: PathBuf,
        /// Start configuration: a comma-separated state set (nfa), a
        /// polynomial (grammar), or a state name (stackmachine).
        #[arg(long)]
        start: String,
        /// The input word, dot-separated; `eps` for the empty word.
        #[arg(long)]
        word: String,
        /// Initial stack for machine queries, top first (e.g. `Z`).
        #[arg(long)]
        stack: Option<String>,
    },
    /// Print the series coefficient of a word (grammar documents).
    Coeff {
        file: PathBuf,
        /// Start polynomial, e.g. `1*D`.
        #[arg(long)]
        start: String,
        #[arg(long)]
        word: String,
    },
    /// Compare the behaviours of two systems of the same kind.
    Equiv {
        file_a: PathBuf,
        file_b: PathBuf,
        #[arg(long = "start-a")]
        start_a: String,
        #[arg(long = "start-b")]
        start_b: String,
        /// Compare on all words up to this depth (default 8).
        #[arg(long, conflicts_with = "exact")]
        depth: Option<usize>,
        /// Decide exactly by bisimulation (always terminates for automata;
        /// budgeted for grammars and machines).
        #[arg(long)]
        exact: bool,
        /// Canonical state-pair budget for --exact on grammars and machines.
        #[arg(long, default_value_t = 10_000)]
        budget: usize,
    },
    /// Unfold a scheme to the tree prefix of the given depth.
    Unfold {
        file: PathBuf,
        /// Root term, e.g. `φ(z)`.
        #[arg(long)]
        root: String,
        #[arg(long, default_value_t = 8)]
        depth: usize,
        /// Also print the number of distinct complete subtrees.
        #[arg(long)]
        census: bool,
    },
    /// List accepted words (or words with non-zero coefficients) up to a
    /// length bound.
    Enumerate {
        file: PathBuf,
        #[arg(long)]
        start: String,
        #[arg(long = "max-len", default_value_t = 8)]
        max_len: usize,
        #[arg(long)]
        stack: Option<String>,
    },
}

fn load(path: &Path) -> Result<doc::Document, String> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| format!("cannot read {}: {e}", path.display()))?;
    doc::parse_document(&text).map_err(|e| format!("{}: {e}", path.display()))
}

fn run(cli: Cli) -> commands::CommandResult {
    match cli.command {
        Command::Member {
            file,
            start,
            word,
            stack,
        } => commands::member(&load(&file)?, &start, &word, &stack),
        Command::Coeff { file, start, word } => commands::coeff(&load(&file)?, &start, &word),
        Command::Equiv {
            file_a,
            file_b,
            start_a,
            start_b,
            depth,
            exact,
            budget,
        } => {
            let mode = if exact {
                EquivMode::Exact { budget }
            } else {
                EquivMode::Bounded(depth.unwrap_or(8))
            };
            commands::equiv(&load(&file_a)?, &load(&file_b)?, &start_a, &start_b, mode)
        }
        Command::Unfold {
            file,
            root,
            depth,
            census,
        } => commands::unfold(&load(&file)?, &root, depth, census),
        Command::Enumerate {
            file,
            start,
            max_len,
            stack,
        } => commands::enumerate(&load(&file)?, &start, max_len, &stack),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(report) => {
            if !report.text.is_empty() {
                println!("{}", report.text);
            }
            if report.positive {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(message) => {
            eprintln!("error: {message}");
            ExitCode::from(2)
        }
    }
}
