//! `mec`: lower and upper bounds on minimum-entropy couplings from the
//! command line.

mod commands;
mod grid;
mod input;

use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{Context, Result};
use clap::{Parser, Subcommand};

use crate::grid::{parse_alpha_grid, parse_grid};

#[derive(Parser)]
#[command(name = "mec", version, about = "Minimum-entropy coupling bounds")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(clap::Args)]
struct OutputArg {
    /// Output file; standard output when absent.
    #[arg(long, short)]
    output: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Command {
    /// Bound table over a range of Rényi orders.
    Bounds {
        /// JSON input file (`-` for standard input).
        #[arg(long, short)]
        input: PathBuf,
        /// Orders as `start:stop:step` or a comma list.
        #[arg(long, short, default_value = "1")]
        alpha: String,
        /// Add the greedy-coupling upper bound column.
        #[arg(long)]
        with_upper: bool,
        /// Add the exact minimum from exhaustive search (two small marginals only).
        #[arg(long)]
        oracle: bool,
        #[command(flatten)]
        output: OutputArg,
    },
    /// Built-in examples: 1 (three conditionals on six values) or 2 (binary sweep over p).
    Example {
        #[arg(value_parser = clap::value_parser!(u8).range(1..=2))]
        which: u8,
        /// Values of p for example 2.
        #[arg(long, default_value = "0:0.5:0.01")]
        p_grid: String,
        /// Orders; defaults to 0:5:0.05 for example 1 and 1 for example 2.
        #[arg(long, short)]
        alpha: Option<String>,
        /// Add the greedy-coupling upper bound column (example 1).
        #[arg(long)]
        with_upper: bool,
        #[command(flatten)]
        output: OutputArg,
    },
    /// Breakpoints of the envelope spectrum C and its complement G.
    Spectrum {
        #[arg(long, short)]
        input: PathBuf,
        #[command(flatten)]
        output: OutputArg,
    },
    /// Functional representation report for a joint distribution.
    Frl {
        #[arg(long, short)]
        input: PathBuf,
        #[command(flatten)]
        output: OutputArg,
    },
}

/// Failures reading or validating what the user supplied exit with 2.
enum Failure {
    Input(anyhow::Error),
    Output(anyhow::Error),
}

fn open_output(arg: &OutputArg) -> Result<Box<dyn Write>> {
    Ok(match &arg.output {
        Some(path) => Box::new(BufWriter::new(
            File::create(path).with_context(|| format!("creating {}", path.display()))?,
        )),
        None => Box::new(BufWriter::new(io::stdout().lock())),
    })
}

/// Computes into memory first so that a bad input never leaves a partial
/// output file behind.
fn run(cli: Cli) -> Result<(), Failure> {
    let mut buf = Vec::new();
    let output = match &cli.command {
        Command::Bounds {
            input,
            alpha,
            with_upper,
            oracle,
            output,
        } => {
            let input = input::load(input).map_err(Failure::Input)?;
            let alphas = parse_alpha_grid(alpha).map_err(Failure::Input)?;
            commands::bounds(&input, &alphas, *with_upper, *oracle, &mut buf)
                .map_err(Failure::Input)?;
            output
        }
        Command::Example {
            which,
            p_grid,
            alpha,
            with_upper,
            output,
        } => {
            let default = if *which == 1 { "0:5:0.05" } else { "1" };
            let alphas =
                parse_alpha_grid(alpha.as_deref().unwrap_or(default)).map_err(Failure::Input)?;
            if *which == 1 {
                commands::example1(&alphas, *with_upper, &mut buf).map_err(Failure::Input)?;
            } else {
                let ps = parse_grid(p_grid)
                    .with_context(|| format!("invalid p grid {p_grid:?}"))
                    .map_err(Failure::Input)?;
                commands::example2(&ps, &alphas, &mut buf).map_err(Failure::Input)?;
            }
            output
        }
        Command::Spectrum { input, output } => {
            let input = input::load(input).map_err(Failure::Input)?;
            commands::spectrum(&input, &mut buf).map_err(Failure::Input)?;
            output
        }
        Command::Frl { input, output } => {
            let input = input::load(input).map_err(Failure::Input)?;
            commands::frl(&input, &mut buf).map_err(Failure::Input)?;
            output
        }
    };
    let mut out = open_output(output).map_err(Failure::Output)?;
    out.write_all(&buf)
        .and_then(|_| out.flush())
        .context("writing output")
        .map_err(Failure::Output)
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Input(e)) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
        Err(Failure::Output(e)) => {
            eprintln!("error: {e:#}");
            ExitCode::from(1)
        }
    }
}
