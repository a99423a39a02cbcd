use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use uep_core::bounds::{PackingCount, SplitRule, TsGv};

#[derive(Debug, Parser)]
#[command(
    name = "uep",
    version,
    about = "Bounds, sweeps and explicit constructions for two-level UEP codes"
)]
pub struct Cli {
    #[command(flatten)]
    pub common: Common,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args)]
pub struct Common {
    /// Emit JSON instead of a table.
    #[arg(long, global = true)]
    pub json: bool,
    /// Also write the table as CSV to this path.
    #[arg(long, global = true, value_name = "PATH")]
    pub csv: Option<PathBuf>,
    /// RNG seed; required by randomized commands.
    #[arg(long, global = true)]
    pub seed: Option<u64>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Evaluate bounds on the class-A size at one parameter point.
    Bound(BoundArgs),
    /// Rates of the UEP, time-sharing, EEP and Hamming bounds along a range.
    Sweep(SweepArgs),
    /// Shortest blocklengths for time-sharing and UEP codes.
    Minlen(MinlenArgs),
    /// Build a code and write its codebook.
    Construct(ConstructArgs),
    /// Compute the distance profile of a codebook file.
    Verify(VerifyArgs),
    /// Asymptotic gain conditions.
    Asym(AsymArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Split {
    Strict,
    NonStrict,
}

impl From<Split> for SplitRule {
    fn from(s: Split) -> Self {
        match s {
            Split::Strict => SplitRule::Strict,
            Split::NonStrict => SplitRule::NonStrict,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Packing {
    /// `⌈2ⁿ/V(n, 2r_S)⌉`.
    Certified,
    /// `⌊2ⁿ/V(n, r_S)⌋`, not a proven packing size.
    Optimistic,
}

impl From<Packing> for PackingCount {
    fn from(p: Packing) -> Self {
        match p {
            Packing::Certified => PackingCount::Certified,
            Packing::Optimistic => PackingCount::Optimistic,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum GvKind {
    Classic,
    Improved,
}

impl From<GvKind> for TsGv {
    fn from(g: GvKind) -> Self {
        match g {
            GvKind::Classic => TsGv::Classic,
            GvKind::Improved => TsGv::Improved,
        }
    }
}

#[derive(Debug, Clone, Args)]
pub struct BoundOptions {
    /// Time-sharing length split rule.
    #[arg(long, value_enum, default_value_t = Split::NonStrict)]
    pub split: Split,
    /// Packing count for ball-region bounds.
    #[arg(long = "ms", value_enum, default_value_t = Packing::Certified)]
    pub ms: Packing,
}

#[derive(Debug, Clone, Args)]
pub struct PointArgs {
    #[arg(long)]
    pub n: u32,
    /// log₂ of the class-B size.
    #[arg(long = "log2B", conflicts_with = "b", required_unless_present = "b")]
    pub log2_b: Option<u32>,
    /// Class-B size, when not a power of two.
    #[arg(long = "B")]
    pub b: Option<u64>,
    #[arg(long = "dA")]
    pub d_a: u32,
    #[arg(long = "dB")]
    pub d_b: u32,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, ValueEnum)]
pub enum Which {
    All,
    /// `2ⁿ/V(n, d_A−1)`.
    Classic,
    /// Intersection-refined GV at distance d_A.
    Improved,
    Union,
    Cube,
    Ball,
    Enlargement,
    Hamming,
    Eep,
    /// Class-A size of the time-sharing code.
    Ts,
}

#[derive(Debug, Args)]
pub struct BoundArgs {
    #[command(flatten)]
    pub point: PointArgs,
    #[arg(long, value_enum, value_delimiter = ',', default_value = "all")]
    pub which: Vec<Which>,
    #[command(flatten)]
    pub options: BoundOptions,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Param {
    N,
    #[value(name = "dA")]
    DA,
    #[value(name = "dB")]
    DB,
    #[value(name = "log2B")]
    Log2B,
}

#[derive(Debug, Args)]
pub struct SweepArgs {
    #[arg(long, value_enum)]
    pub vary: Param,
    #[arg(long)]
    pub start: u32,
    #[arg(long)]
    pub stop: u32,
    #[arg(long, default_value_t = 1)]
    pub step: u32,
    #[arg(long)]
    pub n: Option<u32>,
    #[arg(long = "log2B")]
    pub log2_b: Option<u32>,
    #[arg(long = "dA")]
    pub d_a: Option<u32>,
    #[arg(long = "dB")]
    pub d_b: Option<u32>,
    #[command(flatten)]
    pub options: BoundOptions,
}

#[derive(Debug, Args)]
pub struct MinlenArgs {
    /// Reproduce the eight reference rows.
    #[arg(long, conflicts_with_all = ["log2_a", "log2_b", "d_a", "d_b"])]
    pub table1: bool,
    #[arg(long = "log2A", required_unless_present = "table1")]
    pub log2_a: Option<u32>,
    #[arg(long = "log2B", required_unless_present = "table1")]
    pub log2_b: Option<u32>,
    #[arg(long = "dA", required_unless_present = "table1")]
    pub d_a: Option<u32>,
    #[arg(long = "dB", required_unless_present = "table1")]
    pub d_b: Option<u32>,
    /// GV count used for the time-sharing components.
    #[arg(long = "ts-gv", value_enum, default_value_t = GvKind::Classic)]
    pub ts_gv: GvKind,
    #[arg(long, value_enum, default_value_t = Split::NonStrict)]
    pub split: Split,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Mode {
    Greedy,
    Luep,
    Cube,
    Ball,
}

#[derive(Debug, Args)]
pub struct ConstructArgs {
    #[arg(long, value_enum)]
    pub mode: Mode,
    #[arg(long)]
    pub n: u32,
    /// Level sizes for greedy mode, e.g. `2,4`.
    #[arg(long, value_delimiter = ',')]
    pub shape: Vec<u64>,
    /// Level distances for greedy mode, e.g. `3,2`.
    #[arg(long, value_delimiter = ',')]
    pub profile: Vec<u32>,
    #[arg(long = "kA")]
    pub k_a: Option<u32>,
    #[arg(long = "kB")]
    pub k_b: Option<u32>,
    #[arg(long = "log2B")]
    pub log2_b: Option<u32>,
    #[arg(long = "B")]
    pub b: Option<u64>,
    #[arg(long = "dA")]
    pub d_a: Option<u32>,
    #[arg(long = "dB")]
    pub d_b: Option<u32>,
    #[arg(long = "max-trials", default_value_t = 1000)]
    pub max_trials: u64,
    /// Codebook output path; printed to stdout when absent.
    #[arg(long, value_name = "PATH")]
    pub out: Option<PathBuf>,
    #[command(flatten)]
    pub options: BoundOptions,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    #[arg(long, value_name = "PATH")]
    pub file: PathBuf,
    /// Minimum distances per level; failing them exits with status 4.
    #[arg(long, value_delimiter = ',')]
    pub require: Vec<u32>,
}

#[derive(Debug, Args)]
pub struct AsymArgs {
    #[arg(long = "betaA")]
    pub beta_a: f64,
    #[arg(long = "betaB")]
    pub beta_b: f64,
    #[arg(long = "RB")]
    pub rate_b: f64,
    /// Blocklength used to evaluate the finite-length split.
    #[arg(long, default_value_t = 1000)]
    pub n: u32,
}
