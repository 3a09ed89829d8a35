use std::path::Path;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use cutideal::graph::{parse_graph, Graph, MAX_EDGES};
use cutideal::homology::Prime;
use cutideal::report::{self, DecomposeMode, Format};
use cutideal::verify::{run_verification, VerifyOptions};
use cutideal::Error;

#[derive(Parser)]
#[command(name = "cutideal", version, about = "Monomial cut ideals of small graphs")]
struct Cli {
    /// Prime characteristic for Betti computations.
    #[arg(long = "char", global = true, default_value_t = 2)]
    characteristic: u32,
    /// Output format: json, csv or text.
    #[arg(long, global = true, default_value = "text")]
    format: Format,
    /// Rejects graphs with more edges than this.
    #[arg(long, global = true, default_value_t = 12)]
    max_edges: usize,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// List the generators of I(G).
    Show { graph: String },
    /// Minimal primes of I(G), structurally and by brute force.
    Decompose {
        graph: String,
        /// structural, oracle or both.
        #[arg(long, default_value = "both")]
        mode: DecomposeMode,
    },
    /// Betti table and invariants of S/I(G).
    Betti { graph: String },
    /// Runs the full check suite over the catalog of connected graphs.
    Verify {
        /// Largest vertex count in the catalog.
        #[arg(long, default_value_t = 3)]
        n_max: usize,
        /// Corrupts the structural decompositions.
        #[arg(long, hide = true)]
        fault_inject: bool,
    },
}

/// A path to an existing file is read; anything else is parsed inline.
fn load_graph(arg: &str, max_edges: usize) -> Result<Graph, Error> {
    let path = Path::new(arg);
    let text = if path.is_file() {
        std::fs::read_to_string(path).map_err(|e| Error::Parse(format!("{arg}: {e}")))?
    } else {
        arg.to_string()
    };
    let g = parse_graph(&text)?;
    if g.n_edges() > max_edges {
        return Err(Error::Guard {
            what: "edges",
            actual: g.n_edges(),
            limit: max_edges,
        });
    }
    Ok(g)
}

fn run(cli: Cli) -> Result<u8, Error> {
    if cli.max_edges > MAX_EDGES {
        return Err(Error::InvalidSize {
            value: cli.max_edges,
            reason: "--max-edges exceeds the graph edge cap",
        });
    }
    let p = Prime::new(cli.characteristic)?;
    match cli.command {
        Command::Show { graph } => {
            print!("{}", report::show(&load_graph(&graph, cli.max_edges)?, cli.format)?);
            Ok(0)
        }
        Command::Decompose { graph, mode } => {
            let out = report::decompose(&load_graph(&graph, cli.max_edges)?, mode, cli.format)?;
            print!("{}", out.text);
            Ok(if out.agree { 0 } else { 1 })
        }
        Command::Betti { graph } => {
            print!("{}", report::betti(&load_graph(&graph, cli.max_edges)?, p, cli.format)?);
            Ok(0)
        }
        Command::Verify { n_max, fault_inject } => {
            let report = run_verification(VerifyOptions { n_max, p, fault_inject })?;
            println!("{report}");
            Ok(if report.passed() { 0 } else { 1 })
        }
    }
}

fn main() -> ExitCode {
    if let Some(threads) = std::env::var("CUTIDEAL_THREADS")
        .ok()
        .and_then(|v| v.parse::<usize>().ok())
    {
        // Fails only if a pool already exists.
        let _ = rayon::ThreadPoolBuilder::new().num_threads(threads).build_global();
    }
    match run(Cli::parse()) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
