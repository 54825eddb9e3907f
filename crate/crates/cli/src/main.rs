// Licensed under the Apache License, Version 2.0 (the "License"); you may
// not use this file except in compliance with the License. You may obtain
// a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS, WITHOUT
// WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied. See the
// License for the specific language governing permissions and limitations
// under the License.

//! `degsep` command-line tool.
//!
//! Exit status: 0 on success, 1 on I/O failure, 2 on usage or validation
//! errors.

mod format;

use std::fs;
use std::io::{self, Read, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use degsep::experiments::{self, Normalization, SweepConfig};
use degsep::generators::{self, Mode, WsParams};
use degsep::graph::parse_edge_list;
use degsep::paths::{matrix_apsp, summarize};
use degsep::tree::{self, ReachabilityTable, TreeSpec};

use crate::format::sig6;

#[derive(Debug, Parser)]
#[command(
    name = "degsep",
    version,
    about = "Average degree of separation toolkit"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Generate a graph and write it as an edge list.
    Gen(GenArgs),
    /// Compute shortest-path statistics for an edge-list file.
    Analyze(AnalyzeArgs),
    /// Print the reachability table of a complete r-ary tree as CSV.
    Table(TreeArgs),
    /// Print the level-weighted average separation of a complete r-ary tree.
    TreeAvg(TreeArgs),
    /// Run a seeded probability sweep over small-world graphs.
    Sweep(SweepArgs),
    /// Compare the structured graph's diameter with its bound.
    CheckBound {
        #[arg(long)]
        n: usize,
    },
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Model {
    Tree,
    Ws,
    Structured,
}

#[derive(Debug, Args)]
struct GenArgs {
    #[arg(long, value_enum)]
    model: Model,
    /// Branching factor (tree).
    #[arg(long)]
    r: Option<u64>,
    /// Number of levels (tree).
    #[arg(long)]
    k: Option<u32>,
    /// Node count (ws, structured).
    #[arg(long)]
    n: Option<usize>,
    /// Ring lattice degree (ws).
    #[arg(long, default_value_t = 4)]
    kdeg: usize,
    /// Rewiring or addition probability (ws).
    #[arg(long, default_value_t = 0.0)]
    p: f64,
    /// rewire | add (ws).
    #[arg(long, default_value = "rewire")]
    mode: Mode,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Output file; standard output when omitted.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Debug, Args)]
struct AnalyzeArgs {
    #[arg(
        long = "in",
        conflicts_with = "stdin",
        required_unless_present = "stdin"
    )]
    input: Option<PathBuf>,
    #[arg(long)]
    stdin: bool,
    /// Also write the distance matrix as CSV.
    #[arg(long)]
    emit_matrix: Option<PathBuf>,
}

#[derive(Debug, Args)]
struct TreeArgs {
    #[arg(long)]
    r: u64,
    #[arg(long)]
    k: u32,
}

#[derive(Debug, Args)]
struct SweepArgs {
    #[arg(long, default_value_t = 20)]
    n: usize,
    #[arg(long, default_value_t = 4)]
    kdeg: usize,
    /// Explicit probabilities, comma separated. Overrides the range flags.
    #[arg(long, value_delimiter = ',')]
    p_values: Option<Vec<f64>>,
    #[arg(long, default_value_t = 0.0)]
    p_start: f64,
    #[arg(long, default_value_t = 0.5)]
    p_stop: f64,
    #[arg(long, default_value_t = 0.05)]
    p_step: f64,
    #[arg(long, default_value_t = 100)]
    trials: usize,
    #[arg(long, default_value_t = 1)]
    seed: u64,
    #[arg(long, default_value = "rewire")]
    mode: Mode,
    /// Redraw disconnected samples instead of keeping them flagged.
    #[arg(long)]
    resample_disconnected: bool,
    /// Worker threads for trials; output does not depend on it.
    #[arg(long, default_value_t = 1)]
    jobs: usize,
    /// Per-trial records CSV.
    #[arg(long)]
    out: Option<PathBuf>,
    /// Per-p summary CSV of the ordered-pair mean.
    #[arg(long)]
    summary_ordered: Option<PathBuf>,
    /// Per-p summary CSV of the (N-1)^2 normalized mean.
    #[arg(long)]
    summary_paper: Option<PathBuf>,
}

#[derive(Debug)]
enum CliError {
    Io(String),
    Usage(String),
}

impl From<degsep::Error> for CliError {
    fn from(e: degsep::Error) -> Self {
        CliError::Usage(e.to_string())
    }
}

type CliResult<T> = Result<T, CliError>;

fn write_file(path: &Path, contents: &str) -> CliResult<()> {
    fs::write(path, contents).map_err(|e| CliError::Io(format!("{}: {e}", path.display())))
}

fn emit(out: Option<&Path>, contents: &str) -> CliResult<()> {
    match out {
        Some(path) => write_file(path, contents),
        None => io::stdout()
            .write_all(contents.as_bytes())
            .map_err(|e| CliError::Io(e.to_string())),
    }
}

fn require<T>(value: Option<T>, flag: &str, model: &str) -> CliResult<T> {
    value.ok_or_else(|| CliError::Usage(format!("--model {model} requires --{flag}")))
}

fn gen(args: &GenArgs) -> CliResult<()> {
    let (graph, comments) = match args.model {
        Model::Tree => {
            let r = require(args.r, "r", "tree")?;
            let k = require(args.k, "k", "tree")?;
            let spec = TreeSpec::new(r, k)?;
            (
                tree::tree_graph(&spec)?,
                vec![format!("model tree r {r} k {k}")],
            )
        }
        Model::Ws => {
            let params = WsParams {
                n: require(args.n, "n", "ws")?,
                kdeg: args.kdeg,
                p: args.p,
                seed: args.seed,
                mode: args.mode,
            };
            let generated = generators::generate(&params)?;
            let comment = format!("{} resamples {}", params.provenance(), generated.resamples);
            (generated.graph, vec![comment])
        }
        Model::Structured => {
            let n = require(args.n, "n", "structured")?;
            (
                generators::structured_graph(n)?,
                vec![format!("model structured n {n}")],
            )
        }
    };
    emit(args.out.as_deref(), &graph.to_edge_list(&comments))
}

fn analyze(args: &AnalyzeArgs) -> CliResult<()> {
    let text = match &args.input {
        Some(path) => fs::read_to_string(path)
            .map_err(|e| CliError::Io(format!("{}: {e}", path.display())))?,
        None => {
            let mut buf = String::new();
            io::stdin()
                .read_to_string(&mut buf)
                .map_err(|e| CliError::Io(e.to_string()))?;
            buf
        }
    };
    let graph = parse_edge_list(&text)?;
    let dm = matrix_apsp(&graph);
    let s = summarize(&dm)?;
    if let Some(path) = &args.emit_matrix {
        write_file(path, &dm.to_csv())?;
    }
    let report = format!(
        "nodes {}\nedges {}\nconnected {}\nreachable_pairs {}\nsum {}\npaper_norm {}\nordered {}\ndiameter {}\n",
        graph.node_count(),
        graph.edge_count(),
        s.is_connected(),
        s.reachable_ordered_pairs,
        s.distance_sum,
        sig6(s.mean_paper_norm),
        sig6(s.mean_ordered_pairs),
        s.diameter
    );
    emit(None, &report)
}

fn sweep(args: &SweepArgs) -> CliResult<()> {
    let p_grid = match &args.p_values {
        Some(values) => values.clone(),
        None => experiments::p_grid(args.p_start, args.p_stop, args.p_step)?,
    };
    if args.jobs < 1 {
        return Err(CliError::Usage("--jobs must be at least 1".into()));
    }
    let config = SweepConfig {
        n: args.n,
        kdeg: args.kdeg,
        p_grid,
        trials: args.trials,
        base_seed: args.seed,
        mode: args.mode,
        resample_disconnected: args.resample_disconnected,
        parallel: args.jobs > 1,
    };
    let outcome = if config.parallel {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(args.jobs)
            .build()
            .map_err(|e| CliError::Usage(e.to_string()))?;
        pool.install(|| experiments::run_sweep(&config))?
    } else {
        experiments::run_sweep(&config)?
    };

    if let Some(path) = &args.out {
        write_file(path, &experiments::records_csv(&outcome.records))?;
    }
    if let Some(path) = &args.summary_ordered {
        write_file(
            path,
            &experiments::summary_csv(&outcome.summary, Normalization::OrderedPairs),
        )?;
    }
    if let Some(path) = &args.summary_paper {
        write_file(
            path,
            &experiments::summary_csv(&outcome.summary, Normalization::SquaredNMinusOne),
        )?;
    }

    let disconnected = outcome.records.iter().filter(|r| !r.connected).count();
    let mut report = String::from("p trials ordered_mean ordered_sd paper_mean paper_sd\n");
    for pt in &outcome.summary.points {
        report.push_str(&format!(
            "{} {} {} {} {} {}\n",
            pt.p,
            pt.trials,
            sig6(pt.ordered_pairs.mean),
            sig6(pt.ordered_pairs.stddev),
            sig6(pt.paper_norm.mean),
            sig6(pt.paper_norm.stddev)
        ));
    }
    report.push_str(&format!("disconnected_records {disconnected}\n"));
    if outcome.summary.points.len() >= 2 {
        let rho = outcome
            .summary
            .rank_correlation(Normalization::OrderedPairs);
        report.push_str(&format!("spearman {}\n", sig6(rho)));
    }
    emit(None, &report)
}

fn run(cli: Cli) -> CliResult<()> {
    match cli.command {
        Command::Gen(args) => gen(&args),
        Command::Analyze(args) => analyze(&args),
        Command::Table(args) => {
            let spec = TreeSpec::new(args.r, args.k)?;
            emit(None, &ReachabilityTable::generate(&spec).to_csv())
        }
        Command::TreeAvg(args) => {
            let spec = TreeSpec::new(args.r, args.k)?;
            let value = tree::tree_average_separation(&spec)?;
            emit(None, &format!("{}\n", sig6(value)))
        }
        Command::Sweep(args) => sweep(&args),
        Command::CheckBound { n } => {
            let report = experiments::check_bound(n)?;
            emit(
                None,
                &format!(
                    "n {} diameter {} bound {} {}\n",
                    report.n,
                    report.diameter,
                    report.bound,
                    if report.pass { "PASS" } else { "FAIL" }
                ),
            )
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(CliError::Io(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(CliError::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
