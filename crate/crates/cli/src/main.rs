use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::Context;
use clap::{Parser, Subcommand};
use palcomb_cli::cache::Cache;
use palcomb_cli::commands::{self, CensusArgs, CompareArgs, Outcome};
use palcomb_cli::output::Format;
use palcomb_cli::sequences::{CensusRequest, Sequence};

#[derive(Parser)]
#[command(name = "palcomb", version, about = "Palindromes, antipalindromes and rich words: counts, checks and censuses")]
struct Cli {
    /// Worker threads for censuses and exhaustive checks.
    #[arg(long, global = true, default_value_t = 1)]
    threads: usize,

    /// Census cache file (default: $PALCOMB_CACHE_DIR/census-cache.txt).
    #[arg(long, global = true)]
    cache: Option<PathBuf>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Tabulate a sequence: rich, language-i, even-pairs, odd-pairs, creaky, pal-pairs, rho, conj-pal.
    Census {
        sequence: String,
        #[arg(long)]
        n_max: u64,
        #[arg(long, default_value_t = 2)]
        k: u64,
        #[arg(long, default_value = "csv")]
        format: Format,
        /// Allow rich censuses beyond length 32.
        #[arg(long)]
        override_budget: bool,
        /// Include the length-0 row.
        #[arg(long)]
        with_zero_row: bool,
    },
    /// Classify a word.
    Check {
        word: String,
        #[arg(long, default_value_t = 2)]
        k: u32,
        /// Number arbitrary letters by first appearance.
        #[arg(long)]
        remap: bool,
    },
    /// Run an exhaustive verification suite.
    Verify {
        suite: String,
        #[arg(long)]
        max_n: Option<usize>,
    },
    /// Rich-word counts against n^sqrt(n).
    Table1 {
        #[arg(long, default_value_t = 26)]
        n_max: u64,
        #[arg(long, default_value = "csv")]
        format: Format,
        #[arg(long)]
        override_budget: bool,
    },
    /// The exact partition lower-bound chain for even lengths.
    Bounds {
        #[arg(long, default_value_t = 30)]
        n_max: u64,
        #[arg(long, default_value = "csv")]
        format: Format,
    },
    /// Compare a computed sequence with an OEIS b-file.
    OeisCompare {
        sequence: String,
        bfile: PathBuf,
        #[arg(long)]
        n_max: Option<u64>,
    },
}

fn run(cli: Cli) -> anyhow::Result<Outcome> {
    if cli.threads == 0 {
        anyhow::bail!("--threads must be at least 1");
    }
    rayon::ThreadPoolBuilder::new()
        .num_threads(cli.threads)
        .build_global()
        .context("starting worker pool")?;
    let cache = Cache::resolve(cli.cache.as_deref());
    let outcome = match cli.command {
        Command::Census {
            sequence,
            n_max,
            k,
            format,
            override_budget,
            with_zero_row,
        } => commands::census(&CensusArgs {
            request: CensusRequest {
                sequence: Sequence::from_name(&sequence)?,
                n_max,
                k,
                threads: cli.threads,
                override_budget,
            },
            format,
            cache,
            with_zero_row,
        })?,
        Command::Check { word, k, remap } => commands::check(&word, k, remap)?,
        Command::Verify { suite, max_n } => commands::verify(&suite, max_n)?,
        Command::Table1 {
            n_max,
            format,
            override_budget,
        } => commands::table1(n_max, cli.threads, override_budget, cache.as_deref(), format)?,
        Command::Bounds { n_max, format } => commands::bounds(n_max, format)?,
        Command::OeisCompare { sequence, bfile, n_max } => commands::oeis_compare(&CompareArgs {
            sequence: Sequence::from_name(&sequence)?,
            bfile,
            n_max,
            threads: cli.threads,
            cache,
        })?,
    };
    Ok(outcome)
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(outcome) => {
            print!("{}", outcome.text);
            if outcome.ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::FAILURE
            }
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
