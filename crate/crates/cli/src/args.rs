use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use hxdft::{AlgebraTag, ScaleConvention};

#[derive(Debug, Parser)]
#[command(
    name = "hxdft",
    version,
    about = "Hypercomplex DFTs via matrix roots of -1"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Build and validate a root of -1, written as a root file.
    Roots(RootsArgs),
    /// Forward 1D transform.
    Fwd(Transform1dArgs),
    /// Inverse 1D transform.
    Inv(Transform1dArgs),
    /// Forward two-sided 2D transform.
    Fwd2d(Transform2dArgs),
    /// Inverse two-sided 2D transform.
    Inv2d(Transform2dArgs),
    /// Run the property suite; exits nonzero if any property fails.
    Verify(VerifyArgs),
    /// Emit a phasor path as CSV, followed by its fitted conic.
    Ellipse(EllipseArgs),
    /// Time the table-driven transform against the reference loop.
    Bench(BenchArgs),
}

#[derive(Debug, Args)]
pub struct RootsArgs {
    /// complex, quaternion, biquaternion, cl11, cl20, param-ab or param-bc.
    #[arg(required_unless_present = "list")]
    pub kind: Option<String>,
    /// Kind-specific parameters, e.g. `x y z` for quaternion or `b c +` for param-bc.
    #[arg(allow_negative_numbers = true, num_args = 0..)]
    pub params: Vec<String>,
    /// Print the built-in catalogue instead.
    #[arg(long, conflicts_with = "kind")]
    pub list: bool,
    /// Write the explicit matrix instead of algebra coefficients.
    #[arg(long)]
    pub matrix: bool,
    #[arg(short, long)]
    pub output: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Scale {
    /// S = 1/M on the forward transform.
    Forward,
    /// S = 1, T = 1/M.
    Inverse,
    /// S = T = 1/sqrt(M).
    Unitary,
}

impl From<Scale> for ScaleConvention {
    fn from(s: Scale) -> Self {
        match s {
            Scale::Forward => ScaleConvention::ForwardScaled,
            Scale::Inverse => ScaleConvention::InverseScaled,
            Scale::Unitary => ScaleConvention::Unitary,
        }
    }
}

#[derive(Debug, Args)]
pub struct Transform1dArgs {
    #[arg(short, long)]
    pub signal: PathBuf,
    #[arg(short, long)]
    pub root: PathBuf,
    #[arg(long, value_enum, default_value_t = Scale::Inverse)]
    pub scale: Scale,
    #[arg(short, long)]
    pub output: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct Transform2dArgs {
    #[arg(short, long)]
    pub signal: PathBuf,
    /// Root applied on the left (rows).
    #[arg(long)]
    pub left: PathBuf,
    /// Root applied on the right (columns).
    #[arg(long)]
    pub right: PathBuf,
    #[arg(long, value_enum, default_value_t = Scale::Inverse)]
    pub scale: Scale,
    #[arg(short, long)]
    pub output: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    /// Restrict to one or more algebras.
    #[arg(long, value_parser = parse_algebra, conflicts_with = "all")]
    pub algebra: Vec<AlgebraTag>,
    /// Every algebra plus the algebra-independent properties (default).
    #[arg(long)]
    pub all: bool,
    #[arg(long, env = crate::SEED_ENV)]
    pub seed: Option<u64>,
}

#[derive(Debug, Args)]
pub struct EllipseArgs {
    #[arg(short, long)]
    pub root: PathBuf,
    #[arg(long = "m", default_value_t = 64)]
    pub m_len: usize,
    #[arg(long, default_value_t = 1, allow_hyphen_values = true)]
    pub u0: i64,
    /// Starting coefficient vector `x,y`.
    #[arg(long, value_parser = parse_pair, default_value = "1,0", allow_hyphen_values = true)]
    pub coeff: [f64; 2],
}

#[derive(Debug, Args)]
pub struct BenchArgs {
    #[arg(long, value_parser = parse_algebra, default_value = "quaternion")]
    pub algebra: AlgebraTag,
    #[arg(long, value_delimiter = ',', default_value = "16,64,256")]
    pub sizes: Vec<usize>,
    #[arg(long, env = crate::SEED_ENV)]
    pub seed: Option<u64>,
}

fn parse_algebra(s: &str) -> Result<AlgebraTag, String> {
    s.parse::<AlgebraTag>().map_err(|e| e.to_string())
}

fn parse_pair(s: &str) -> Result<[f64; 2], String> {
    let (x, y) = s
        .split_once(',')
        .ok_or_else(|| format!("expected x,y, got {s:?}"))?;
    let num = |t: &str| t.trim().parse::<f64>().map_err(|e| format!("{t:?}: {e}"));
    Ok([num(x)?, num(y)?])
}
