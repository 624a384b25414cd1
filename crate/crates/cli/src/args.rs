use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Debug, Parser)]
#[command(name = "pxgraph", version, about = "Proper-tree connectivity of edge-coloured graphs")]
pub struct Cli {
    /// Worker threads for parallel verification and experiments.
    #[arg(long, global = true)]
    pub jobs: Option<usize>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Write a graph file.
    Generate {
        #[command(subcommand)]
        kind: GenerateKind,
        /// Output file; stdout when omitted.
        #[arg(long, global = true)]
        out: Option<PathBuf>,
    },
    /// Colour a complete graph or an input graph.
    Color(ColorArgs),
    /// Check that every k-subset has l internally disjoint proper trees.
    Verify(VerifyArgs),
    /// Hamiltonian decomposition of K_n.
    Decompose {
        #[arg(long)]
        n: usize,
    },
    /// Evaluate the closed-form bounds for k and l.
    Bounds {
        #[arg(long, value_parser = clap::value_parser!(u64).range(3..))]
        k: u64,
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        l: u64,
    },
    /// Seeded experiments.
    Experiment {
        #[command(subcommand)]
        kind: ExperimentKind,
    },
}

#[derive(Debug, Subcommand)]
pub enum GenerateKind {
    Complete {
        #[arg(long)]
        n: usize,
    },
    Bipartite {
        #[arg(long)]
        m: usize,
        #[arg(long)]
        n: usize,
    },
    Gnp {
        #[arg(long)]
        n: usize,
        #[arg(long, value_parser = probability)]
        p: f64,
        #[arg(long)]
        seed: Option<u64>,
    },
    /// Girth at least 5 and minimum degree at least delta.
    Girth5 {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        delta: usize,
        #[arg(long)]
        seed: Option<u64>,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Scheme {
    K3l2,
    Kn1l2,
    Spanning,
    Random,
    Redblue,
}

#[derive(Debug, Args)]
pub struct ColorArgs {
    #[arg(long, value_enum)]
    pub scheme: Scheme,
    /// Order of the complete graph to colour when no input is given.
    #[arg(long)]
    pub n: Option<usize>,
    /// Palette size for `random`.
    #[arg(long, default_value_t = 2)]
    pub colors: u8,
    #[arg(long)]
    pub seed: Option<u64>,
    /// Input graph file; for `redblue` the red subgraph.
    pub input: Option<PathBuf>,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

/// `exhaustive` or `sample:N`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Mode {
    Exhaustive,
    Sample(usize),
}

fn mode(s: &str) -> Result<Mode, String> {
    if s == "exhaustive" {
        return Ok(Mode::Exhaustive);
    }
    match s.strip_prefix("sample:").map(str::parse::<usize>) {
        Some(Ok(n)) if n > 0 => Ok(Mode::Sample(n)),
        _ => Err(format!("expected `exhaustive` or `sample:N` with N >= 1, got {s:?}")),
    }
}

fn probability(s: &str) -> Result<f64, String> {
    let p: f64 = s.parse().map_err(|_| format!("not a number: {s:?}"))?;
    if (0.0..=1.0).contains(&p) {
        Ok(p)
    } else {
        Err(format!("probability must lie in [0, 1], got {p}"))
    }
}

fn n_list(s: &str) -> Result<usize, String> {
    s.trim().parse().map_err(|_| format!("not an integer: {s:?}"))
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    /// Coloured graph file.
    pub input: PathBuf,
    #[arg(long)]
    pub k: usize,
    #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
    pub l: u64,
    #[arg(long, value_parser = mode, default_value = "exhaustive")]
    pub mode: Mode,
    /// Required with `sample:N`.
    #[arg(long)]
    pub seed: Option<u64>,
    /// Search nodes per subset query.
    #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
    pub node_limit: Option<u64>,
    /// Wall-clock limit per subset, in milliseconds.
    #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
    pub time_limit_ms: Option<u64>,
    /// Largest order accepted in exhaustive mode.
    #[arg(long, default_value_t = 16)]
    pub max_exhaustive: usize,
    /// Include the tree families found for every subset.
    #[arg(long)]
    pub witnesses: bool,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Family {
    Complete,
    Bipartite,
    Gnp,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum McScheme {
    K3l2,
    Kn1l2,
    Spanning,
    Random,
}

#[derive(Debug, Subcommand)]
pub enum ExperimentKind {
    /// Fraction of coloured graphs that pass verification.
    Mc(McArgs),
    /// How often a path of a given length is proper under a random 2-colouring.
    PathRate {
        #[arg(long)]
        k: usize,
        /// Path length in edges; defaults to 2k - 2.
        #[arg(long)]
        len: Option<usize>,
        #[arg(long)]
        trials: usize,
        #[arg(long)]
        seed: Option<u64>,
    },
    /// Random 2-colourings of G(n, p(n)) across several n, as CSV.
    Sweep {
        #[arg(long)]
        k: usize,
        #[arg(long, default_value_t = 1)]
        l: usize,
        #[arg(long)]
        c: f64,
        /// Comma-separated orders.
        #[arg(long, value_delimiter = ',', value_parser = n_list, required = true)]
        n: Vec<usize>,
        #[arg(long)]
        trials: usize,
        #[arg(long)]
        seed: Option<u64>,
        /// Subsets sampled per graph.
        #[arg(long, default_value_t = 20)]
        subsets: usize,
        /// Also run every n at half the threshold probability.
        #[arg(long)]
        contrast: bool,
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        node_limit: Option<u64>,
        /// Write the full results as JSON here.
        #[arg(long)]
        json: Option<PathBuf>,
    },
    /// Common-neighbour counts of random k-subsets of one G(n, p).
    CommonNeighbors {
        #[arg(long)]
        n: usize,
        #[arg(long, value_parser = probability)]
        p: f64,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        samples: usize,
        #[arg(long)]
        seed: Option<u64>,
    },
    /// p(n) = min(1, c (log_a n / n)^(1/k)) for several n.
    Threshold {
        #[arg(long)]
        k: usize,
        #[arg(long)]
        c: f64,
        #[arg(long, value_delimiter = ',', value_parser = n_list, required = true)]
        n: Vec<usize>,
    },
    /// Smallest n satisfying the complete-bipartite counting inequality.
    N2 {
        #[arg(long)]
        k: usize,
        #[arg(long)]
        l: usize,
    },
}

#[derive(Debug, Args)]
pub struct McArgs {
    #[arg(long, value_enum)]
    pub family: Family,
    /// Order, or the second class size for `bipartite`.
    #[arg(long)]
    pub n: usize,
    /// First class size for `bipartite`.
    #[arg(long)]
    pub m: Option<usize>,
    #[arg(long, value_parser = probability)]
    pub p: Option<f64>,
    #[arg(long)]
    pub k: usize,
    #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
    pub l: u64,
    #[arg(long, value_enum)]
    pub scheme: McScheme,
    #[arg(long, default_value_t = 2)]
    pub colors: u8,
    #[arg(long)]
    pub trials: usize,
    /// Required whenever anything is sampled.
    #[arg(long)]
    pub seed: Option<u64>,
    #[arg(long, value_parser = mode, default_value = "exhaustive")]
    pub subsets: Mode,
    #[arg(long, default_value_t = 24)]
    pub max_exhaustive: usize,
    #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
    pub node_limit: Option<u64>,
    /// Keep the per-trial verdicts in the output.
    #[arg(long)]
    pub verdicts: bool,
}
