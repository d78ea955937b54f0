use clap::{Args, Parser, Subcommand, ValueEnum};
use dhp_core::Budget;
use serde::Serialize;
use std::path::PathBuf;

#[derive(Debug, Parser, Serialize)]
#[command(name = "dhp", version, about = "Double Hall property toolkit for bipartite graphs")]
#[command(after_help = "Exit codes: 0 holds / found, 1 fails / none, 2 bad input or unmet precondition, 3 budget exceeded.")]
pub struct Cli {
    #[command(flatten)]
    pub global: Global,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args, Serialize)]
pub struct Global {
    /// Input graph file [default: stdin].
    #[arg(short, long, global = true)]
    pub input: Option<PathBuf>,
    /// Output file [default: stdout].
    #[arg(short, long, global = true)]
    pub output: Option<PathBuf>,
    /// Graph output format.
    #[arg(long, value_enum, default_value = "edge-list", global = true)]
    pub format: GraphFormat,
    #[arg(long, default_value_t = 0, global = true)]
    pub seed: u64,
    /// Subsets a checker may examine.
    #[arg(long, default_value_t = Budget::DEFAULT_SUBSETS, global = true)]
    pub budget_subsets: u64,
    /// Backtracking nodes a solver may expand.
    #[arg(long, default_value_t = Budget::DEFAULT_NODES, global = true)]
    pub budget_nodes: u64,
    /// Worker threads for sweeps; results do not depend on it.
    #[arg(long, global = true)]
    #[serde(skip)]
    pub jobs: Option<usize>,
    /// Reject duplicate edges instead of merging them.
    #[arg(long, global = true)]
    pub strict: bool,
}

impl Global {
    pub fn budget(&self) -> Budget {
        Budget {
            subsets: self.budget_subsets,
            nodes: self.budget_nodes,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum GraphFormat {
    EdgeList,
    Json,
}

#[derive(Debug, Subcommand, Serialize)]
#[serde(tag = "command", rename_all = "kebab-case")]
pub enum Command {
    /// Decide a property of the input graph and print a verdict.
    Check(CheckArgs),
    /// Run a cycle solver on the input graph.
    Solve(SolveArgs),
    /// Generate a graph.
    Construct(ConstructArgs),
    /// Random G(n, n, p) experiments.
    Random(RandomArgs),
    /// Rewrite the input graph in canonical form.
    Fmt,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum CheckProperty {
    Dhp,
    Snp,
    Supercyclic,
    Critical,
    SaturatedCritical,
    SnpMinimal,
    Design,
    DegreeBound,
    Obstacle,
}

#[derive(Debug, Args, Serialize)]
pub struct CheckArgs {
    #[arg(value_enum)]
    pub property: CheckProperty,
    /// Largest |S| searched by `obstacle` [default: |X|].
    #[arg(long)]
    pub s_max: Option<usize>,
    /// For `degree-bound`: skip confirming dHp first.
    #[arg(long)]
    pub no_verify: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum SolveMode {
    CoverCycle,
    CycleCover,
    DegreeSplit,
    HighDegree,
    Hamiltonian,
}

#[derive(Debug, Args, Serialize)]
pub struct SolveArgs {
    #[arg(value_enum)]
    pub mode: SolveMode,
    /// X-vertices to cover: `all` or a comma list.
    #[arg(long, default_value = "all")]
    pub xs: String,
    /// Use no X-vertices outside `--xs`.
    #[arg(long)]
    pub exact: bool,
    /// Degree slack for `high-degree`.
    #[arg(long, default_value_t = 0)]
    pub k: usize,
    /// Largest side for `hamiltonian`.
    #[arg(long, default_value_t = dhp_core::random::SMALL_N_LIMIT)]
    pub limit: usize,
}

#[derive(Debug, Args, Serialize)]
pub struct ConstructArgs {
    #[command(subcommand)]
    pub what: Construct,
}

#[derive(Debug, Subcommand, Serialize)]
#[serde(tag = "construction", rename_all = "kebab-case")]
pub enum Construct {
    /// Two private y's for every pair of x's.
    PairGadget {
        #[arg(long)]
        n: usize,
    },
    /// Incidence graph of a builtin biplane (order 0-3).
    Biplane {
        #[arg(long)]
        order: usize,
    },
    /// Incidence graph of the design developed from a difference set mod v.
    DifferenceSet {
        #[arg(long)]
        v: usize,
        /// Comma list of residues.
        #[arg(long)]
        set: String,
        #[arg(long, default_value_t = 2)]
        lambda: usize,
    },
    /// Incidence graph of a design file (`design v k lambda` then one block per line).
    Design { file: PathBuf },
    /// Bipartite tensor product of two graph files.
    Product { left: PathBuf, right: PathBuf },
    /// k-fold product of the input graph with itself.
    Power {
        #[arg(long)]
        k: usize,
    },
    /// Pad the input with universal x's (and as many new y's) up to n x's.
    Pad {
        #[arg(long)]
        n: usize,
    },
    Complete {
        #[arg(long)]
        nx: usize,
        #[arg(long)]
        ny: usize,
    },
    /// Bipartite complement of the input.
    Complement,
}

#[derive(Debug, Args, Serialize)]
pub struct RandomArgs {
    #[command(subcommand)]
    pub what: Random,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Kind {
    Dhp,
    Hamiltonian,
}

impl From<Kind> for dhp_core::random::ThresholdKind {
    fn from(k: Kind) -> Self {
        match k {
            Kind::Dhp => Self::Dhp,
            Kind::Hamiltonian => Self::Hamiltonian,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum ReportFormat {
    Csv,
    Json,
}

#[derive(Debug, Subcommand, Serialize)]
#[serde(tag = "action", rename_all = "kebab-case")]
pub enum Random {
    /// Trials over an (n, c) grid.
    Sweep {
        #[arg(long, value_delimiter = ',', required = true)]
        n_list: Vec<usize>,
        #[arg(long, value_delimiter = ',', required = true, allow_hyphen_values = true)]
        c_list: Vec<f64>,
        #[arg(long)]
        trials: usize,
        /// Comma list over pair, obstacle3, exact, hamiltonian, maxdeg.
        #[arg(long, default_value = "pair,obstacle3,maxdeg")]
        measure: String,
        #[arg(long, value_enum, default_value = "dhp")]
        kind: Kind,
        #[arg(long, default_value_t = dhp_core::random::SMALL_N_LIMIT)]
        small_n_limit: usize,
        /// Draw fresh seeds for every c instead of sharing them.
        #[arg(long)]
        independent_seeds: bool,
        /// Include every trial record (JSON only).
        #[arg(long)]
        keep_trials: bool,
        /// Report file; `.json` selects JSON, anything else CSV.
        #[arg(long)]
        out: Option<PathBuf>,
        /// Report format, overriding the `--out` extension [default: csv].
        #[arg(long, value_enum)]
        report: Option<ReportFormat>,
    },
    /// One G(n, n, p) sample; give `--p` or `--c`.
    Sample {
        #[arg(long)]
        n: usize,
        #[arg(long, conflicts_with = "c")]
        p: Option<f64>,
        #[arg(long, allow_negative_numbers = true)]
        c: Option<f64>,
        #[arg(long, value_enum, default_value = "dhp")]
        kind: Kind,
    },
    /// The edge probability for (n, c).
    Threshold {
        #[arg(long)]
        n: usize,
        #[arg(long, allow_negative_numbers = true)]
        c: f64,
        #[arg(long, value_enum, default_value = "dhp")]
        kind: Kind,
    },
    /// Bad pairs, size-3 obstacles and the degree check for the input graph.
    Stats {
        /// Edge probability the graph was sampled with, for the degree check.
        #[arg(long)]
        p: Option<f64>,
    },
}
