use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Debug, Parser)]
#[command(name = "squarelab", version, about = "Extremal square-center constructions, finders and checks")]
pub struct Cli {
    /// Worker threads for parallel scans; defaults to the logical core count.
    #[arg(long, global = true)]
    pub jobs: Option<usize>,

    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,

    /// Write data here instead of standard output.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,

    /// Seed for sampled verification.
    #[arg(long, global = true)]
    pub seed: Option<u64>,

    /// Multiplies every size guard; overrides SQUARELAB_BUDGET.
    #[arg(long, global = true)]
    pub budget: Option<u64>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Csv,
    Json,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Generate a construction as a plain-text set file.
    #[command(subcommand)]
    Gen(GenCmd),
    /// Recover square centers from a set file.
    #[command(subcommand)]
    Find(FindCmd),
    /// Replay the defining property of a construction.
    #[command(subcommand)]
    Verify(VerifyCmd),
    /// Greedy interval covering number of a 1D set.
    Cover {
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long = "len")]
        length: i64,
    },
    /// Dyadic box counts of a 2D set.
    Boxcount {
        #[arg(long = "in")]
        input: PathBuf,
        /// Cell side `2^-m`; repeat or comma-separate for several scales.
        #[arg(long, value_delimiter = ',', required = true, allow_hyphen_values = true)]
        m: Vec<i32>,
        /// Coordinates are real values times `2^frame-bits`.
        #[arg(long, default_value_t = 0)]
        frame_bits: u32,
    },
    /// Finite dimension ratios of the sum sets.
    Ratios {
        /// Rational `num/den` in (0, 2].
        #[arg(long)]
        s: String,
        #[arg(long)]
        jmax: u32,
        #[arg(long, value_enum, default_value_t = Which::Upper)]
        which: Which,
        #[arg(long, value_enum, default_value_t = SumFamily::T)]
        family: SumFamily,
    },
    /// Exact family sizes and finite-difference slopes.
    Exponents(ScanArgs),
    /// Same as `exponents`, reported in the verification report layout.
    Scan(ScanArgs),
}

#[derive(Debug, Args)]
pub struct ScanArgs {
    /// dk_vertex, dk_boundary, dk_size or an_cover.
    #[arg(long)]
    pub family: String,
    #[arg(long)]
    pub kmin: i64,
    #[arg(long)]
    pub kmax: i64,
    /// Fail unless the last slope lies within this distance of the target.
    #[arg(long)]
    pub band: Option<f64>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Which {
    Upper,
    Lower,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SumFamily {
    T,
    A,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Mode {
    Exact,
    Float,
    Auto,
}

#[derive(Debug, Subcommand)]
pub enum GenCmd {
    Dk {
        #[arg(long)]
        k: i64,
    },
    An {
        #[arg(long)]
        p: u32,
    },
    VertexExample {
        #[arg(long)]
        k: i64,
        /// Also write the center set here.
        #[arg(long)]
        centers: Option<PathBuf>,
    },
    BoundaryExample {
        #[arg(long)]
        k: i64,
        #[arg(long)]
        centers: Option<PathBuf>,
    },
    Cantor {
        #[arg(long)]
        s: String,
        #[arg(long)]
        p: u32,
        #[arg(long, value_enum, default_value_t = Mode::Auto)]
        mode: Mode,
        /// Emit the truncated `T_p` instead of `A_p`.
        #[arg(long)]
        t: bool,
    },
    Countable {
        #[arg(long)]
        alpha: u32,
        #[arg(long = "blocks", visible_alias = "K")]
        blocks: u32,
        #[arg(long)]
        centers: Option<PathBuf>,
    },
    Splice {
        /// Block boundaries `a_0,…,a_n`; defaults to `a_n = 2^(2^n) - 1`.
        #[arg(long, value_delimiter = ',')]
        a: Option<Vec<u64>>,
        #[arg(long)]
        n: usize,
        /// Cells of one level, comma-separated; `x:y` in two dimensions.
        /// Omitted levels are full.
        #[arg(long)]
        level: Vec<String>,
        #[arg(long, default_value_t = 1)]
        dim: u8,
    },
}

#[derive(Debug, Subcommand)]
pub enum FindCmd {
    Centers1d {
        #[arg(long = "in")]
        input: PathBuf,
        /// Print only the number of centers.
        #[arg(long)]
        count: bool,
    },
    Vertices {
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long)]
        count: bool,
    },
    Boundaries {
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long)]
        rmax: i64,
        #[arg(long)]
        count: bool,
    },
}

#[derive(Debug, Args)]
pub struct Coverage {
    /// Replay every center regardless of size.
    #[arg(long, conflicts_with = "samples")]
    pub exhaustive: bool,
    /// Replay this many seeded random centers.
    #[arg(long)]
    pub samples: Option<u64>,
}

#[derive(Debug, Subcommand)]
pub enum VerifyCmd {
    Dk {
        #[arg(long)]
        k: i64,
        #[command(flatten)]
        coverage: Coverage,
    },
    An {
        #[arg(long)]
        p: u32,
        #[command(flatten)]
        coverage: Coverage,
    },
    Boundary {
        #[arg(long)]
        k: i64,
    },
    Countable {
        #[arg(long)]
        alpha: u32,
        #[arg(long = "blocks", visible_alias = "K")]
        blocks: u32,
    },
}
