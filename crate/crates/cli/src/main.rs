use std::process::ExitCode;

use absent_core::oracle::DEFAULT_BUDGET;
use absent_core::DEFAULT_DAG_CAP;
use clap::{Args, Parser, Subcommand, ValueEnum};

mod commands;
mod input;
mod output;

use input::InputArgs;

#[derive(Parser, Debug)]
#[command(name = "absent", version, about = "Shortest and minimal absent subsequences of a word")]
struct Cli {
    /// Print a single JSON record instead of text
    #[arg(long, global = true)]
    json: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Universality index, arches, and representative SAS and MAS
    Analyze {
        #[command(flatten)]
        input: InputArgs,
    },
    /// Test whether QUERY is an SAS, a MAS, or a subsequence of the word
    Check {
        kind: CheckKind,
        query: String,
        #[command(flatten)]
        input: InputArgs,
    },
    /// List or count all SAS or all MAS, in lexicographic order of codes
    Enum(EnumArgs),
    /// An SAS of the factor from position I to position J (1-based, inclusive)
    Range {
        i: usize,
        j: usize,
        #[command(flatten)]
        input: InputArgs,
    },
    /// Shortest extension of QUERY to a MAS (QUERY may be empty)
    Extend {
        query: String,
        #[command(flatten)]
        input: InputArgs,
    },
    /// Compare the index answers with brute force; for small words
    Verify(VerifyArgs),
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum CheckKind {
    Sas,
    Mas,
    Subseq,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum Family {
    Sas,
    Mas,
}

#[derive(Args, Debug)]
pub struct EnumArgs {
    pub kind: Family,

    /// Stop after this many words
    #[arg(long)]
    pub limit: Option<usize>,

    /// Print only the exact number of words
    #[arg(long)]
    pub count_only: bool,

    /// Longest word for which the quadratic MAS DAG is built
    #[arg(long, default_value_t = DEFAULT_DAG_CAP)]
    pub dag_cap: usize,

    #[command(flatten)]
    pub input: InputArgs,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum VerifyCheck {
    Sas,
    Mas,
    Range,
    Extend,
    Family,
}

#[derive(Args, Debug)]
pub struct VerifyArgs {
    /// Checks to run (default: all)
    #[arg(long = "check", value_delimiter = ',')]
    pub checks: Vec<VerifyCheck>,

    /// Cap on the candidate words one brute-force computation may examine
    #[arg(long, default_value_t = DEFAULT_BUDGET)]
    pub budget: u64,

    /// Longest word for which the quadratic MAS DAG is built
    #[arg(long, default_value_t = DEFAULT_DAG_CAP)]
    pub dag_cap: usize,

    #[command(flatten)]
    pub input: InputArgs,
}

/// How a successful run ended.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Verdict {
    Positive,
    Negative,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = match cli.command {
        Command::Analyze { input } => commands::analyze(&input, cli.json),
        Command::Check { kind, query, input } => commands::check(&input, kind, &query, cli.json),
        Command::Enum(args) => commands::enumerate(&args, cli.json),
        Command::Range { i, j, input } => commands::range(&input, i, j, cli.json),
        Command::Extend { query, input } => commands::extend(&input, &query, cli.json),
        Command::Verify(args) => commands::verify(&args, cli.json),
    };
    match outcome {
        Ok(Verdict::Positive) => ExitCode::SUCCESS,
        Ok(Verdict::Negative) => ExitCode::from(1),
        // a closed downstream pipe ends the output early but is not a failure
        Err(e) if is_broken_pipe(&e) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

fn is_broken_pipe(e: &anyhow::Error) -> bool {
    e.chain()
        .filter_map(|c| c.downcast_ref::<std::io::Error>())
        .any(|io| io.kind() == std::io::ErrorKind::BrokenPipe)
}
