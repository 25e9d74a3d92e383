use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

#[derive(Debug, Parser, Serialize)]
#[command(name = "specyc", version, about = "Spectral extremal graph toolkit")]
#[serde(rename_all = "camelCase")]
pub struct Cli {
    #[command(flatten)]
    pub global: Global,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct Global {
    /// Convergence tolerance for spectral radius computations.
    #[arg(long, global = true, env = "SPECYC_TOL", default_value_t = specyc::spectral::DEFAULT_TOL)]
    pub tol: f64,
    /// Worker threads (default: available parallelism).
    #[arg(long, global = true, env = "SPECYC_WORKERS")]
    #[serde(skip)]
    pub workers: Option<usize>,
    /// Read graph6 input from this file instead of standard input.
    #[arg(long = "in", global = true, value_name = "FILE")]
    pub input: Option<PathBuf>,
    /// Write the JSON report here instead of standard output.
    #[arg(long, global = true, value_name = "FILE")]
    pub out: Option<PathBuf>,
    /// Also write a CSV summary to this file.
    #[arg(long, global = true, value_name = "FILE")]
    pub csv: Option<PathBuf>,
    /// Progress messages on standard error.
    #[arg(short, long, global = true)]
    #[serde(skip)]
    pub verbose: bool,
}

#[derive(Debug, Subcommand, Serialize)]
#[serde(rename_all = "camelCase")]
pub enum Command {
    /// Build a named graph family member and print its graph6 line.
    Construct(ConstructArgs),
    /// Spectral radius and Perron vector of each input graph.
    Rho,
    /// Run a structure detector on each input graph.
    Detect(DetectArgs),
    /// List all graphs of an order up to isomorphism.
    Enumerate(EnumerateArgs),
    /// Largest spectral radius among connected graphs with a property.
    Spex(SpexArgs),
    /// Largest edge count among graphs with a property.
    Turan(TuranArgs),
    /// Run a named theorem verifier.
    Verify(VerifyArgs),
}

#[derive(Debug, Args, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct ConstructArgs {
    /// Family name, e.g. star-plus or k33-star.
    #[arg(long, required_unless_present = "catalog")]
    pub family: Option<String>,
    #[arg(long)]
    pub n: Option<usize>,
    #[arg(long)]
    pub k: Option<usize>,
    #[arg(long)]
    pub a: Option<usize>,
    #[arg(long)]
    pub b: Option<usize>,
    /// graph6 of the graph embedded by bipartite-embed.
    #[arg(long)]
    pub embed: Option<String>,
    /// Emit a JSON report with the partition instead of a bare graph6 line.
    #[arg(long)]
    pub json: bool,
    /// Print the family catalog.
    #[arg(long, conflicts_with = "family")]
    pub catalog: bool,
}

#[derive(Debug, Clone, Copy, ValueEnum, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum What {
    RepeatedLength,
    EdgeDisjointCycles,
    TrianglePacking,
    Fan,
}

#[derive(Debug, Args, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct DetectArgs {
    #[arg(long, value_enum)]
    pub what: What,
    /// Number of structures to look for. Required semantics differ per
    /// detector: edge-disjoint-cycles defaults to 2, packing and fan report
    /// the maximum when omitted.
    #[arg(long)]
    pub k: Option<usize>,
    /// Search-node budget for the backtracking detectors.
    #[arg(long)]
    pub budget: Option<u64>,
}

#[derive(Debug, Args, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct EnumerateArgs {
    #[arg(long)]
    pub n: usize,
    #[arg(long)]
    pub connected: bool,
    /// Print a JSON count report instead of the graphs.
    #[arg(long)]
    pub count: bool,
}

#[derive(Debug, Clone, Copy, ValueEnum, Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Mode {
    Exhaustive,
    Hillclimb,
}

#[derive(Debug, Args, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct SpexArgs {
    #[arg(long)]
    pub n: usize,
    /// no-repeated-cycle-length, no-2-edge-disjoint-cycles, gamma-k-free or fan-k-free.
    #[arg(long)]
    pub predicate: String,
    #[arg(long)]
    pub k: Option<usize>,
    #[arg(long, value_enum, default_value = "exhaustive")]
    pub mode: Mode,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Candidate evaluations per restart.
    #[arg(long, default_value_t = specyc::search::DEFAULT_BUDGET)]
    pub budget: u64,
    #[arg(long, default_value_t = specyc::search::DEFAULT_RESTARTS)]
    pub restarts: usize,
}

#[derive(Debug, Args, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct TuranArgs {
    #[arg(long)]
    pub n: usize,
    #[arg(long)]
    pub predicate: String,
    #[arg(long)]
    pub k: Option<usize>,
}

#[derive(Debug, Args, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct VerifyArgs {
    /// Theorem id, e.g. T1 or L_QUOTIENT_CONSISTENCY.
    #[arg(long)]
    pub theorem: String,
    #[arg(long)]
    pub n_min: usize,
    #[arg(long)]
    pub n_max: usize,
    #[arg(long)]
    pub k: Option<usize>,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[arg(long)]
    pub budget: Option<u64>,
    #[arg(long, default_value_t = specyc::search::DEFAULT_RESTARTS)]
    pub restarts: usize,
    #[arg(long, default_value_t = 1)]
    pub n_step: usize,
    #[arg(long, default_value_t = 60)]
    pub random_n_max: usize,
}
