use std::ops::RangeInclusive;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Debug, Parser)]
#[command(
    name = "qwalk",
    version,
    about = "Exact Q-walk determinants, rooted-product identities and DGQS certificates"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    #[command(flatten)]
    pub run: RunConfig,
}

#[derive(Debug, Clone, Args)]
pub struct RunConfig {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Json, global = true)]
    pub format: Format,

    /// Worker threads; output is identical for every value.
    #[arg(long, env = "QWALK_JOBS", default_value_t = 1, value_parser = clap::value_parser!(u32).range(1..), global = true)]
    pub jobs: u32,

    /// Pollard rho iterations per composite before a factorization is left incomplete.
    #[arg(long, default_value_t = 10_000_000, value_parser = clap::value_parser!(u64).range(1..), global = true)]
    pub budget: u64,

    /// Largest graph whose walk determinant is computed directly.
    #[arg(long, default_value_t = 64, value_parser = clap::value_parser!(u64).range(1..=512), global = true)]
    pub direct_cap: u64,

    /// Largest tower built for constant-term checks.
    #[arg(long, default_value_t = 512, value_parser = clap::value_parser!(u64).range(1..=10_000), global = true)]
    pub tower_cap: u64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Table,
}

#[derive(Debug, Clone, Args)]
pub struct InputArgs {
    /// Inline graph6 word (repeatable).
    #[arg(short = 'g', long = "graph")]
    pub graphs: Vec<String>,

    /// File of graph6 lines or "n m / i j" edge lists; "-" reads stdin (repeatable).
    #[arg(short = 'f', long = "file")]
    pub files: Vec<PathBuf>,

    /// All graphs on this many vertices, one per isomorphism class.
    #[arg(long)]
    pub exhaustive_n: Option<usize>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Walk-matrix determinants, 2-adic valuation and constant term.
    Walk {
        #[command(flatten)]
        input: InputArgs,
    },
    /// Arithmetic certificates.
    Certify {
        #[arg(long, value_parser = parse_theorem)]
        theorem: TheoremChoice,
        /// Path length for rooted products and towers.
        #[arg(short = 'k', default_value_t = 2)]
        k: usize,
        /// Tower depth.
        #[arg(short = 't', default_value_t = 1)]
        t: u32,
        /// With the tower selector: test each tower level for family
        /// membership for every path length in the range, e.g. 4..6.
        #[arg(long, value_parser = parse_k_range)]
        probe_k: Option<RangeInclusive<usize>>,
        #[command(flatten)]
        input: InputArgs,
    },
    /// Exact identity checks; assertion modes exit 1 on a violation.
    Verify {
        #[arg(long, value_enum, default_value_t = Identity::Det)]
        identity: Identity,
        #[arg(short = 'k', default_value_t = 2)]
        k: usize,
        /// Tower depth for the constant-term check.
        #[arg(short = 't', default_value_t = 1)]
        t: u32,
        /// Relative tolerance of the spectral check.
        #[arg(long, default_value_t = 1e-6)]
        tol: f64,
        /// Report the measured exponent of |a0| for each k in the range, e.g. 4..6.
        #[arg(long, value_parser = parse_k_range)]
        probe_k: Option<RangeInclusive<usize>>,
        #[command(flatten)]
        input: InputArgs,
    },
    /// Generalized Q-cospectral mates, oracle verdicts and cross-validation.
    Mates {
        /// Search all graphs on this many vertices.
        #[arg(long, conflicts_with = "cross_validate")]
        enumerate: Option<usize>,
        /// Check every certificate against the oracle on this many vertices.
        #[arg(long)]
        cross_validate: Option<usize>,
        /// Brute-force verdict for each input graph instead of grouping.
        #[arg(long)]
        oracle: bool,
        /// Allow --enumerate 8.
        #[arg(long)]
        allow_order_8: bool,
        #[command(flatten)]
        input: InputArgs,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Identity {
    /// det W_Q of the rooted product against a0 and det W_Q of the seed.
    Det,
    /// Characteristic polynomial of the rooted product by substitution.
    Charpoly,
    /// Spectral product formula for det W_Q.
    Spectral,
    /// Constant term along a tower.
    A0,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TheoremChoice {
    Family,
    Rooted,
    Tower,
    P2,
}

fn parse_theorem(s: &str) -> Result<TheoremChoice, String> {
    match s {
        "4.1" | "family" => Ok(TheoremChoice::Family),
        "4.4" | "rooted" => Ok(TheoremChoice::Rooted),
        "4.6" | "tower" => Ok(TheoremChoice::Tower),
        "5.5" | "5.6" | "p2" => Ok(TheoremChoice::P2),
        _ => Err(format!(
            "unknown selector {s:?}; expected 4.1, 4.4, 4.6 or 5.5"
        )),
    }
}

/// `a..b` or `a..=b`, both inclusive, or a single `k`.
pub fn parse_k_range(s: &str) -> Result<RangeInclusive<usize>, String> {
    let num = |x: &str| x.trim().parse::<usize>().map_err(|e| format!("{x:?}: {e}"));
    let (lo, hi) = match s.split_once("..") {
        Some((a, b)) => (num(a)?, num(b.strip_prefix('=').unwrap_or(b))?),
        None => {
            let k = num(s)?;
            (k, k)
        }
    };
    if lo < 2 || hi < lo || hi > 64 {
        return Err(format!("range {s:?} must satisfy 2 <= lo <= hi <= 64"));
    }
    Ok(lo..=hi)
}
