use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use lchaos_core::bifurcation::{BifurcationParam, DEFAULT_CLUSTER_TOL, DEFAULT_SAMPLES_PER_PARAM};
use lchaos_core::maps::{Family, MapSpec, DEFAULT_ESCAPE_BOUND};
use lchaos_core::orbit::{DEFAULT_ITERATIONS, DEFAULT_TRANSIENT, DEFAULT_X0};
use lchaos_core::roots::{DEFAULT_MARGINAL_BAND, DEFAULT_MAX_ITER, DEFAULT_TOLERANCE};
use lchaos_core::ParamRange;

use crate::output::Format;

#[derive(Debug, Parser)]
#[command(
    name = "lchaos",
    version,
    about = "Orbits, Lyapunov sweeps, fixed points and bifurcations of L(1, chi) maps",
    after_help = "Every subcommand also accepts --config FILE with `key = value` lines \
                  named after its long flags; flags given on the command line win."
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Cmd,
}

#[derive(Debug, Subcommand)]
pub enum Cmd {
    /// Closed-form L(1, chi) and the log-space lower / zero-free bounds.
    ///
    /// CSV columns: quantity, value.
    #[command(args_override_self = true, allow_negative_numbers = true)]
    Lfunction(LfunctionArgs),
    /// Iterate a map and write the post-transient trajectory.
    ///
    /// CSV columns: n (iterate index), x.
    #[command(args_override_self = true, allow_negative_numbers = true)]
    Orbit(OrbitArgs),
    /// Largest Lyapunov exponent along one orbit.
    ///
    /// CSV columns: lambda, n_used, status.
    #[command(args_override_self = true, allow_negative_numbers = true)]
    Lyapunov(LyapunovArgs),
    /// Lyapunov exponents on a (c, alpha) grid.
    ///
    /// CSV columns: c, alpha, lambda, status. lambda is empty when no term
    /// was accumulated; status is converged, clamped or escaped@STEP.
    #[command(args_override_self = true, allow_negative_numbers = true)]
    Sweep(SweepArgs),
    /// Newton-Raphson fixed points of the map from a range of guesses.
    ///
    /// CSV columns: guess, root, derivative, stability, status.
    #[command(args_override_self = true, allow_negative_numbers = true)]
    Roots(RootsArgs),
    /// Bifurcation-diagram scatter data over one swept parameter.
    ///
    /// CSV columns: param, x. With --branches, a second CSV with columns
    /// param, branches.
    #[command(args_override_self = true, allow_negative_numbers = true)]
    Bifurcate(BifurcateArgs),
    /// Pesin and Shannon entropies of a list of Lyapunov exponents.
    ///
    /// Input: one real per line. CSV columns: quantity, value.
    #[command(args_override_self = true, allow_negative_numbers = true)]
    Entropy(EntropyArgs),
    /// Equal-width histogram of a list of values, with entropy and
    /// unimodality summary on stderr.
    ///
    /// CSV columns: bin_lo, bin_hi, count.
    #[command(args_override_self = true, allow_negative_numbers = true)]
    Histogram(HistogramArgs),
}

#[derive(Debug, Clone, Args)]
pub struct OutputArgs {
    /// Data file to write (stdout if omitted).
    #[arg(long)]
    pub out: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = Format::Csv)]
    pub format: Format,
    /// Also write an SVG chart to this path.
    #[arg(long)]
    pub plot: Option<PathBuf>,
}

#[derive(Debug, Clone, Args)]
pub struct WorkerArgs {
    /// Worker threads (default: available parallelism). Never changes the data.
    #[arg(long)]
    pub workers: Option<usize>,
}

/// Map parameters other than c and alpha.
#[derive(Debug, Clone, Args)]
pub struct BaseMapArgs {
    /// Map family: odd, even or logistic.
    #[arg(long, default_value = "odd")]
    pub family: Family,
    /// Class number h (beta = 2 pi h / w).
    #[arg(long = "h", default_value_t = 1)]
    pub h: u64,
    /// Roots of unity w.
    #[arg(long = "w", default_value_t = 2)]
    pub w: u64,
    /// Fundamental unit for the even family (default: golden ratio).
    #[arg(long)]
    pub epsilon: Option<f64>,
    /// Use this beta instead of 2 pi h / w.
    #[arg(long)]
    pub beta: Option<f64>,
    /// Logistic rate.
    #[arg(long, default_value_t = 4.0)]
    pub r: f64,
    #[arg(long, default_value_t = DEFAULT_ESCAPE_BOUND)]
    pub escape_bound: f64,
}

impl BaseMapArgs {
    pub fn spec(&self, c: f64, alpha: f64) -> MapSpec {
        let mut spec = MapSpec {
            family: self.family,
            h: self.h,
            w: self.w,
            c,
            alpha,
            r: self.r,
            beta_override: self.beta,
            escape_bound: self.escape_bound,
            ..MapSpec::default()
        };
        if let Some(e) = self.epsilon {
            spec.epsilon = e;
        }
        spec
    }
}

#[derive(Debug, Clone, Args)]
pub struct MapArgs {
    #[command(flatten)]
    pub base: BaseMapArgs,
    /// Coefficient of the power-of-log term.
    #[arg(long, default_value_t = 0.0)]
    pub c: f64,
    /// Exponent of the power-of-log term.
    #[arg(long, default_value_t = 0.0)]
    pub alpha: f64,
}

impl MapArgs {
    pub fn spec(&self) -> MapSpec {
        self.base.spec(self.c, self.alpha)
    }
}

#[derive(Debug, Clone, Args)]
pub struct OrbitLengthArgs {
    #[arg(long, default_value_t = DEFAULT_X0)]
    pub x0: f64,
    /// Total iterations.
    #[arg(long, default_value_t = DEFAULT_ITERATIONS)]
    pub n: usize,
    /// Leading iterations discarded.
    #[arg(long, default_value_t = DEFAULT_TRANSIENT)]
    pub transient: usize,
}

#[derive(Debug, Clone, Args)]
pub struct LfunctionArgs {
    /// chi(-1): -1 or 1.
    #[arg(long)]
    pub parity: i64,
    #[arg(long = "h")]
    pub h: u64,
    #[arg(long = "w")]
    pub w: u64,
    /// Modulus m >= 3.
    #[arg(long = "m")]
    pub m: u64,
    /// Fundamental unit (required for parity 1).
    #[arg(long)]
    pub epsilon: Option<f64>,
    /// Also report the log bounds for this modulus (> 1).
    #[arg(long)]
    pub bound_modulus: Option<f64>,
    #[arg(long, default_value_t = 1.0)]
    pub bound_constant: f64,
    #[arg(long, default_value_t = 2022.0)]
    pub bound_exponent: f64,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Debug, Clone, Args)]
pub struct OrbitArgs {
    #[command(flatten)]
    pub map: MapArgs,
    #[command(flatten)]
    pub length: OrbitLengthArgs,
    /// Report the smallest period up to this bound on stderr.
    #[arg(long)]
    pub detect_cycle: Option<usize>,
    #[arg(long, default_value_t = 1e-6)]
    pub cycle_tol: f64,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Debug, Clone, Args)]
pub struct LyapunovArgs {
    #[command(flatten)]
    pub map: MapArgs,
    #[command(flatten)]
    pub length: OrbitLengthArgs,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Debug, Clone, Args)]
pub struct SweepArgs {
    #[command(flatten)]
    pub base: BaseMapArgs,
    /// c axis as lo:hi:count.
    #[arg(long, default_value = "0.0005:0.007:20")]
    pub c: ParamRange,
    /// alpha axis as lo:hi:count.
    #[arg(long, default_value = "0:10:20")]
    pub alpha: ParamRange,
    #[command(flatten)]
    pub length: OrbitLengthArgs,
    #[command(flatten)]
    pub workers: WorkerArgs,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Debug, Clone, Args)]
pub struct RootsArgs {
    #[command(flatten)]
    pub map: MapArgs,
    /// Initial guesses as lo:hi:count.
    #[arg(long, default_value = "2:30:15")]
    pub guesses: ParamRange,
    #[arg(long, default_value_t = DEFAULT_TOLERANCE)]
    pub tol: f64,
    #[arg(long, default_value_t = DEFAULT_MAX_ITER)]
    pub max_iter: usize,
    /// Half-width of the marginal band around |f'| = 1.
    #[arg(long, default_value_t = DEFAULT_MARGINAL_BAND)]
    pub band: f64,
    #[command(flatten)]
    pub workers: WorkerArgs,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Debug, Clone, Args)]
pub struct BifurcateArgs {
    #[command(flatten)]
    pub map: MapArgs,
    /// Parameter to sweep: c, alpha or r.
    #[arg(long)]
    pub param: BifurcationParam,
    /// Sweep as lo:hi:count.
    #[arg(long)]
    pub range: ParamRange,
    #[command(flatten)]
    pub length: OrbitLengthArgs,
    /// Attractor samples kept per parameter value.
    #[arg(long, default_value_t = DEFAULT_SAMPLES_PER_PARAM)]
    pub samples: usize,
    #[arg(long, default_value_t = DEFAULT_CLUSTER_TOL)]
    pub cluster_tol: f64,
    /// Write per-parameter branch counts to this CSV.
    #[arg(long)]
    pub branches: Option<PathBuf>,
    #[command(flatten)]
    pub workers: WorkerArgs,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Debug, Clone, Args)]
pub struct EntropyArgs {
    /// Lyapunov exponents, one per line.
    #[arg(long)]
    pub lyapunov: PathBuf,
    /// Bins for the Shannon entropy of the exponent distribution.
    #[arg(long, default_value_t = 10)]
    pub bins: usize,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Debug, Clone, Args)]
pub struct HistogramArgs {
    /// Values, one per line, or a CSV with a header when --column is set.
    #[arg(long)]
    pub input: PathBuf,
    /// Column to read from a CSV input (e.g. `root` from `roots` output).
    #[arg(long)]
    pub column: Option<String>,
    #[arg(long, default_value_t = 10)]
    pub bins: usize,
    /// Explicit range as lo:hi.
    #[arg(long)]
    pub range: Option<String>,
    /// Odd moving-average window for the unimodality test.
    #[arg(long, default_value_t = 1)]
    pub window: usize,
    #[command(flatten)]
    pub output: OutputArgs,
}
