mod commands;
mod input;
mod output;

use std::process::ExitCode;

use clap::{Parser, Subcommand};

use input::{WordOpts, WordSource};
use output::OutputOpts;

/// Divisibility, selective heights, Dilworth colorings, counting graphs,
/// Rauzy graphs, extremal words, class encodings and bound tables.
#[derive(Debug, Parser)]
#[command(name = "shirshov", version)]
struct Cli {
    #[command(flatten)]
    words: WordOpts,
    #[command(flatten)]
    output: OutputOpts,
    /// Seed for randomized suites; recorded in every report that uses it.
    #[arg(long, global = true, default_value_t = shirshov::verify::DEFAULT_SEED)]
    seed: u64,
    /// Node budget for exhaustive searches.
    #[arg(long, global = true, value_parser = clap::value_parser!(u64).range(1..))]
    budget: Option<u64>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Decide n-divisibility, or strong n-divisibility with --strong.
    Divide {
        #[command(flatten)]
        source: WordSource,
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        n: u64,
        #[arg(long)]
        strong: bool,
        /// Length of the candidate periods for --strong.
        #[arg(long, requires = "strong", default_value_t = 2)]
        periods: usize,
        /// Exponent of the leading powers for --strong (default 2n).
        #[arg(long, requires = "strong")]
        exp: Option<usize>,
    },
    /// Small (or, with --large, large) selective height.
    Height {
        #[command(flatten)]
        source: WordSource,
        #[arg(long = "period-len", value_parser = clap::value_parser!(u64).range(1..))]
        period_len: u64,
        /// Powers z^m count when m > exp.
        #[arg(long)]
        exp: usize,
        #[arg(long)]
        large: bool,
    },
    /// Representative set, Dilworth coloring and the matching counting-graph audit.
    Omega {
        #[command(flatten)]
        source: WordSource,
        #[arg(long = "period-len", value_parser = clap::value_parser!(u64).range(1..))]
        period_len: u64,
        #[arg(long, value_parser = clap::value_parser!(u64).range(2..))]
        n: u64,
        /// Powers z^m count when m > exp (default 2n).
        #[arg(long)]
        exp: Option<usize>,
    },
    /// Rauzy graph of order r and the trajectory's short cycles.
    Rauzy {
        #[command(flatten)]
        source: WordSource,
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        order: u64,
        /// Cycles with fewer edges than this are listed.
        #[arg(long = "max-cycle", default_value_t = 4)]
        max_cycle: usize,
        /// Cycles traversed more often than this are flagged.
        #[arg(long, default_value_t = 1)]
        threshold: usize,
        /// Also write the graph in DOT form to this file.
        #[arg(long)]
        dot: Option<std::path::PathBuf>,
    },
    /// Generate the big-step extremal word and certify it.
    Extremal {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        l: u32,
        /// Block exponent (default 2n + 1).
        #[arg(long)]
        exp: Option<usize>,
        /// Write the word to this file and leave it out of the report.
        #[arg(long = "word-out")]
        word_out: Option<std::path::PathBuf>,
    },
    /// Encode a family of cycle classes and compare goodness before and after.
    Encode {
        #[command(subcommand)]
        kind: commands::EncodeKind,
    },
    /// Largest n-good family of t-cycles over l letters found by search.
    BethSearch {
        #[arg(long)]
        t: usize,
        #[arg(long)]
        l: u32,
        #[arg(long)]
        n: usize,
        /// Largest family size to try.
        #[arg(long, default_value_t = 8)]
        cap: usize,
    },
    /// Exact values of the closed-form bounds.
    Bounds {
        #[arg(long)]
        l: u64,
        #[arg(long)]
        n: u64,
        /// Exponent parameter of the lower height bound.
        #[arg(long, default_value_t = 4)]
        m: u64,
        /// Degree parameter of the nilpotency-based bound.
        #[arg(long, default_value_t = 3)]
        d: u64,
        /// Tabulate every 2 <= l' <= l and 2 <= n' <= n.
        #[arg(long)]
        grid: bool,
    },
    /// Run verification suites over seeded corpora.
    Verify {
        /// Suite name, or "all".
        #[arg(long, default_value = "all")]
        suite: String,
        #[arg(long, default_value = "tiny")]
        scale: String,
    },
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    match commands::run(&cli) {
        Ok(report) => match report.emit(&cli.output) {
            Ok(()) => ExitCode::from(report.status.code()),
            Err(e) => {
                eprintln!("error: {e:#}");
                ExitCode::from(2)
            }
        },
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
