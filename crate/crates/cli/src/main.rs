use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{Context, Result};
use clap::{Parser, Subcommand};
use netbound::oracles::{DEFAULT_NET_LIMIT, DEFAULT_TREEWIDTH_LIMIT};
use netbound_cli::commands::{self, FrameSpec, GenFamily, Report};
use netbound_cli::formats::parse_td;

/// Treewidth bounds for plane graphs from three-sided brambles.
#[derive(Parser)]
#[command(name = "netbound", version)]
struct Cli {
    /// Print reports as JSON.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Write an embedded graph from a built-in family.
    Gen {
        #[arg(value_enum)]
        family: GenFamily,
        size: Option<usize>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Minimum cover of the net on the peripheral walk.
    NetOrder {
        graph: PathBuf,
        /// `thirds` or `j,k` walk indices.
        #[arg(long, default_value = "thirds")]
        frame: FrameSpec,
    },
    /// KB and the treewidth, bramble-number and lambda intervals it certifies.
    Bounds {
        graph: PathBuf,
        #[arg(long)]
        frame: Option<FrameSpec>,
    },
    /// Tree decomposition of width at most 4 KB - 1.
    Decompose {
        graph: PathBuf,
        #[arg(long)]
        frame: Option<FrameSpec>,
        /// Write the decomposition here and print a summary instead.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Check a tree decomposition; exit status 1 if it is invalid.
    Verify { graph: PathBuf, decomposition: PathBuf },
    /// Exhaustive reference computations for small graphs.
    Oracle {
        #[command(subcommand)]
        which: Oracle,
    },
}

#[derive(Subcommand)]
enum Oracle {
    NetOrder {
        graph: PathBuf,
        #[arg(long, default_value = "thirds")]
        frame: FrameSpec,
        #[arg(long, default_value_t = DEFAULT_NET_LIMIT)]
        limit: usize,
    },
    Treewidth {
        graph: PathBuf,
        #[arg(long, default_value_t = DEFAULT_TREEWIDTH_LIMIT)]
        limit: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

fn emit(report: &impl Report, json: bool) {
    print!("{}", if json { report.json() } else { report.text() });
}

fn write_or_print(out: Option<&Path>, text: &str) -> Result<bool> {
    match out {
        Some(p) => {
            std::fs::write(p, text).with_context(|| format!("writing {}", p.display()))?;
            Ok(true)
        }
        None => {
            print!("{text}");
            Ok(false)
        }
    }
}

fn run(cli: Cli) -> Result<ExitCode> {
    let json = cli.json;
    match cli.command {
        Command::Gen { family, size, seed, out } => {
            let text = commands::cmd_gen(commands::family(family, size, seed)?)?;
            write_or_print(out.as_deref(), &text)?;
        }
        Command::NetOrder { graph, frame } => {
            emit(&commands::cmd_net_order(&commands::load_graph(&graph)?, frame)?, json);
        }
        Command::Bounds { graph, frame } => {
            emit(&commands::cmd_bounds(&commands::load_graph(&graph)?, frame)?, json);
        }
        Command::Decompose { graph, frame, out } => {
            let file = commands::load_graph(&graph)?;
            let (td, report) = commands::cmd_decompose(&file, frame)?;
            if write_or_print(out.as_deref(), &commands::td_text(&file, &td))? {
                emit(&report, json);
            }
        }
        Command::Verify { graph, decomposition } => {
            let file = commands::load_graph(&graph)?;
            let text = std::fs::read_to_string(&decomposition)
                .with_context(|| format!("reading {}", decomposition.display()))?;
            let (td, n) = parse_td(&text).with_context(|| format!("parsing {}", decomposition.display()))?;
            let report = commands::cmd_verify(&file, &td, n)?;
            emit(&report, json);
            if !report.valid {
                return Ok(ExitCode::from(1));
            }
        }
        Command::Oracle { which: Oracle::NetOrder { graph, frame, limit } } => {
            let file = commands::load_graph(&graph)?;
            emit(&commands::cmd_oracle_net_order(&file, frame, limit)?, json);
        }
        Command::Oracle { which: Oracle::Treewidth { graph, limit, out } } => {
            let file = commands::load_graph(&graph)?;
            let (td, report) = commands::cmd_oracle_treewidth(&file, limit)?;
            emit(&report, json);
            if let Some(p) = out {
                std::fs::write(&p, commands::td_text(&file, &td))
                    .with_context(|| format!("writing {}", p.display()))?;
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
