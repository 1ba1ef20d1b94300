//! Command-line grammar.

use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

use super::output::Format;
use crate::arith::SumMethod;

#[derive(Debug, Parser)]
#[command(name = "circlelab", version, about = "Numerical laboratory for the Gauss circle problem")]
#[command(args_override_self = true)]
pub struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Table)]
    pub format: Format,
    /// Significant digits for real-valued output.
    #[arg(long, global = true, default_value_t = 12, value_parser = clap::value_parser!(u8).range(1..=17))]
    pub precision: u8,
    /// Write results here instead of standard output.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    /// TOML file with default flag values; flags on the command line win.
    #[arg(long, global = true)]
    pub config: Option<PathBuf>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// r₂(n) by enumeration, divisor sum and residue count.
    R2 { n: u64 },
    /// Lattice count Σ_{n ≤ x} r₂(n) and Δ(x).
    Sum {
        x: f64,
        #[arg(long, default_value = "floor_identity", value_parser = parse_method)]
        method: SumMethod,
    },
    /// Δ(x) and Δ(x)/x^{1/4}.
    Delta { x: f64 },
    /// Truncated Hardy–Voronoi series against the exact count.
    Voronoi {
        x: f64,
        #[arg(long)]
        terms: u64,
    },
    /// Truncated trigonometric series.
    #[command(subcommand)]
    Series(SeriesCmd),
    /// A partial sum next to its closed-form right side.
    #[command(subcommand, name = "closed-form")]
    ClosedForm(ClosedFormCmd),
    /// Lattice records over a range of x.
    Sweep(SweepArgs),
    /// Partial values of a series along a ladder of truncations.
    Convergence(ConvergenceArgs),
    /// Consolidated reports.
    #[command(subcommand)]
    Report(ReportCmd),
    /// Runs the r₂ and lattice-count oracle agreement checks.
    Verify {
        /// Largest n for the r₂ three-way comparison.
        #[arg(long, default_value_t = 100_000)]
        limit: u64,
    },
}

fn parse_method(s: &str) -> Result<SumMethod, String> {
    s.parse().map_err(|e: crate::Error| e.to_string())
}

#[derive(Debug, Subcommand)]
pub enum SeriesCmd {
    /// S_M(x) = Σ r₂(n) cos(2π√(nx) + π/4)/n^{3/4}.
    S {
        x: f64,
        #[arg(long)]
        terms: u64,
    },
    /// D_M(x) = Σ cos(2π√(nx) + π/4)/n^{3/4−δ}.
    D {
        x: f64,
        #[arg(long)]
        delta: f64,
        #[arg(long)]
        terms: u64,
    },
    /// G(h, x, M) and its h-derivative.
    G {
        x: f64,
        #[arg(long)]
        h: f64,
        #[arg(long)]
        terms: u64,
    },
    /// M_s(a, b) and N_s(a, b).
    M {
        #[arg(long, allow_hyphen_values = true)]
        a: f64,
        #[arg(long, allow_hyphen_values = true)]
        b: f64,
        #[arg(long)]
        s: f64,
        #[arg(long)]
        k_terms: u64,
    },
    /// P_s(a, b) and Q_s(a, b).
    P {
        #[arg(long, allow_hyphen_values = true)]
        a: f64,
        #[arg(long, allow_hyphen_values = true)]
        b: f64,
        #[arg(long)]
        s: f64,
        #[arg(long)]
        n_terms: u64,
        #[arg(long)]
        k_terms: u64,
    },
}

#[derive(Debug, Subcommand)]
pub enum ClosedFormCmd {
    /// n^{−3/4} cosine sum against its Fresnel form.
    Fresnel {
        #[arg(long)]
        a: f64,
        #[arg(long)]
        m: u64,
    },
    /// n^{−1/2−ε/2} cosine sum against its exponential-integral form.
    Expint {
        #[arg(long)]
        eps: f64,
        #[arg(long)]
        x: f64,
        #[arg(long)]
        y: f64,
    },
    /// n^{−1/2} cosine sum against its elementary form.
    Sqrt {
        #[arg(long)]
        x: f64,
        #[arg(long)]
        m: u64,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SamplingKind {
    Integers,
    HalfIntegers,
    Grid,
}

#[derive(Debug, Args)]
pub struct SweepArgs {
    #[arg(long)]
    pub from: f64,
    #[arg(long)]
    pub to: f64,
    #[arg(long, value_enum, default_value_t = SamplingKind::Integers)]
    pub sampling: SamplingKind,
    /// Grid spacing for `--sampling grid`.
    #[arg(long)]
    pub step: Option<f64>,
    #[arg(long, default_value_t = 1)]
    pub workers: usize,
    /// Print only the summary and per-block maxima, not every record.
    #[arg(long)]
    pub summary: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum TargetKind {
    Voronoi,
    S,
    D,
    P,
    Q,
}

#[derive(Debug, Args)]
pub struct ConvergenceArgs {
    #[arg(value_enum)]
    pub target: TargetKind,
    #[arg(long)]
    pub x: Option<f64>,
    #[arg(long)]
    pub delta: Option<f64>,
    #[arg(long, allow_hyphen_values = true)]
    pub a: Option<f64>,
    #[arg(long, allow_hyphen_values = true)]
    pub b: Option<f64>,
    #[arg(long)]
    pub s: Option<f64>,
    #[arg(long)]
    pub k_terms: Option<u64>,
    /// Comma-separated truncations; defaults to 1, 2, 5, 10, … up to `--top`.
    #[arg(long, value_delimiter = ',')]
    pub ladder: Vec<u64>,
    #[arg(long, default_value_t = 100_000)]
    pub top: u64,
    #[arg(long, default_value_t = 100)]
    pub window: u64,
}

#[derive(Debug, Subcommand)]
pub enum ReportCmd {
    /// Each claim with its measured statistic and verdict.
    Claims {
        #[arg(long, default_value_t = 1)]
        workers: usize,
        /// Directory holding the golden files.
        #[arg(long)]
        goldens: Option<PathBuf>,
    },
    /// Re-reads a sweep CSV and summarizes it.
    Sweep {
        #[arg(long)]
        input: PathBuf,
    },
}
