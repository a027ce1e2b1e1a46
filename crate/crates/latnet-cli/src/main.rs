//! `latnet` — directed-network analysis from the command line.
//!
//! Subcommands: `centrality` (per-arc LBC/DBC CSV), `compare` (empirical
//! cdf vs a degree-preserving randomized ensemble + KS test), `evolve`
//! (hill-climbing runs over a λ grid), `stats` (undirected statistics
//! battery as JSON), and `presheaf` (exact fibers / stability / gluing /
//! standard-representation demos).
//!
//! Every command writes a manifest (flags, seed, input digests) next to its
//! outputs; rerunning with the same manifest reproduces the outputs
//! byte-for-byte, timestamps aside.

mod commands;
mod manifest;

use clap::{Parser, Subcommand, ValueEnum};
use std::path::PathBuf;
use std::process::ExitCode;

/// Environment variable consulted when `--seed` is absent.
pub const SEED_ENV: &str = "LATNET_SEED";

#[derive(Parser)]
#[command(name = "latnet", version, about = "Directed-network analysis: arc centralities, evolution, statistics, presheaf checks")]
struct Cli {
    /// Cap the number of worker threads for parallel sections.
    #[arg(long, global = true)]
    jobs: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum MeasureArg {
    Lbc,
    Dbc,
    Both,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SingleMeasure {
    Lbc,
    Dbc,
}

#[derive(Subcommand)]
enum Command {
    /// Per-arc lateral/directed betweenness centralities as CSV.
    Centrality {
        /// Edge-list file (one `source target` pair per line, `#` comments).
        input: PathBuf,
        #[arg(long, value_enum, default_value_t = MeasureArg::Both)]
        measure: MeasureArg,
        /// Output CSV path.
        #[arg(long)]
        out: PathBuf,
        /// Optional scatter CSV (`dbc,lbc` per arc); needs --measure both.
        #[arg(long)]
        scatter: Option<PathBuf>,
        /// Node names to drop (with their incident arcs) before analysis.
        #[arg(long)]
        exclude: Vec<String>,
    },
    /// Empirical centrality cdf vs a rewired-ensemble reference, with a KS test.
    Compare {
        input: PathBuf,
        #[arg(long, value_enum, default_value_t = SingleMeasure::Lbc)]
        measure: SingleMeasure,
        /// Number of degree-preserving randomized replicas.
        #[arg(long, default_value_t = 1000)]
        replicas: usize,
        /// RNG seed (default: $LATNET_SEED, then 0).
        #[arg(long)]
        seed: Option<u64>,
        /// Output directory (created if missing).
        #[arg(long)]
        out_dir: PathBuf,
        /// Debug: use the input's own cdf as the reference (D must be 0).
        #[arg(long)]
        self_reference: bool,
    },
    /// Evolve random initial networks under Q(λ) over a λ grid.
    Evolve {
        /// Number of nodes of each initial Erdős–Rényi network.
        #[arg(long)]
        n: usize,
        /// Arc probability of each initial network.
        #[arg(long)]
        p: f64,
        /// λ values: comma list (`0,0.5,1`) or range (`0:0.05:1`).
        #[arg(long, default_value = "0:0.05:1")]
        lambda_grid: String,
        #[arg(long, default_value_t = 100)]
        replicas: usize,
        #[arg(long)]
        seed: Option<u64>,
        /// Output directory; finished runs found there are reused.
        #[arg(long)]
        out: PathBuf,
        /// Cap on proposals per run.
        #[arg(long)]
        max_steps: Option<u64>,
    },
    /// Undirected statistics battery as JSON.
    Stats {
        input: PathBuf,
        /// Treat the input as an undirected edge list (skips directed
        /// degree histograms).
        #[arg(long)]
        undirected: bool,
        /// Write JSON here instead of stdout (also writes a manifest).
        #[arg(long)]
        out: Option<PathBuf>,
        /// Node names to drop before analysis.
        #[arg(long)]
        exclude: Vec<String>,
    },
    /// Exact presheaf-engine demos over the two-parallel-arrow base.
    Presheaf {
        #[command(subcommand)]
        command: PresheafCommand,
    },
}

#[derive(Subcommand)]
enum PresheafCommand {
    /// Fibers of the interface transformation of a network.
    Fibers {
        input: PathBuf,
        /// Representation name: y, m0, mu, m1..m8, m1p.
        #[arg(long)]
        rep: String,
        /// Base object: 0 (nodes) or 1 (arcs).
        #[arg(long, default_value_t = 1)]
        object: usize,
    },
    /// Whether the unit of the interface adjunction is an isomorphism.
    Stability {
        input: PathBuf,
        #[arg(long)]
        rep: String,
    },
    /// Whether a representation satisfies the gluing condition.
    Gluing {
        #[arg(long)]
        rep: String,
    },
    /// Build the standard representation of a dual structure (JSON input).
    StandardRep { input: PathBuf },
}

/// Errors carrying the documented exit codes: 2 input, 3 resource bound,
/// 4 when every requested statistic is undefined.
pub enum CliError {
    Input(String),
    Resource(String),
    UndefinedOnly,
}

impl CliError {
    fn exit_code(&self) -> u8 {
        match self {
            CliError::Input(_) => 2,
            CliError::Resource(_) => 3,
            CliError::UndefinedOnly => 4,
        }
    }
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        CliError::Input(format!("io error: {e}"))
    }
}

pub fn resolve_seed(flag: Option<u64>) -> u64 {
    flag.or_else(|| std::env::var(SEED_ENV).ok().and_then(|s| s.parse().ok()))
        .unwrap_or(0)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(jobs) = cli.jobs {
        if jobs == 0 {
            eprintln!("error: --jobs must be >= 1");
            return ExitCode::from(2);
        }
        latnet::configure_threads(jobs);
    }
    let result = match cli.command {
        Command::Centrality {
            input,
            measure,
            out,
            scatter,
            exclude,
        } => commands::centrality(&input, measure, &out, scatter.as_deref(), &exclude),
        Command::Compare {
            input,
            measure,
            replicas,
            seed,
            out_dir,
            self_reference,
        } => commands::compare(
            &input,
            measure,
            replicas,
            resolve_seed(seed),
            &out_dir,
            self_reference,
        ),
        Command::Evolve {
            n,
            p,
            lambda_grid,
            replicas,
            seed,
            out,
            max_steps,
        } => commands::evolve(
            n,
            p,
            &lambda_grid,
            replicas,
            resolve_seed(seed),
            &out,
            max_steps,
        ),
        Command::Stats {
            input,
            undirected,
            out,
            exclude,
        } => commands::stats(&input, undirected, out.as_deref(), &exclude),
        Command::Presheaf { command } => match command {
            PresheafCommand::Fibers { input, rep, object } => {
                commands::presheaf_fibers(&input, &rep, object)
            }
            PresheafCommand::Stability { input, rep } => {
                commands::presheaf_stability(&input, &rep)
            }
            PresheafCommand::Gluing { rep } => commands::presheaf_gluing(&rep),
            PresheafCommand::StandardRep { input } => commands::presheaf_standard_rep(&input),
        },
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            match &e {
                CliError::Input(msg) => eprintln!("error: {msg}"),
                CliError::Resource(msg) => eprintln!("error: {msg}"),
                CliError::UndefinedOnly => {
                    eprintln!("error: every requested statistic is undefined for this input")
                }
            }
            ExitCode::from(e.exit_code())
        }
    }
}
