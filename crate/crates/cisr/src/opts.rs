//! Command-line surface.

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Debug, Parser)]
#[command(
    name = "cisr",
    about = "Resultants over commutative idempotent semirings",
    long_about = "Computes the product-form resultant and the Sylvester-matrix permanent \
                  over a chosen idempotent semiring, verifies that the two agree, and runs \
                  the boolean-matrix representation algorithms with reproducible traces."
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Debug, Args)]
pub struct InstanceOpts {
    /// Carrier to compute in.
    #[arg(long, value_name = "TAG")]
    pub instance: String,

    /// Power-set universe: an integer range `1..5` or labels `a,b,c`.
    #[arg(long, value_name = "SPEC", allow_hyphen_values = true)]
    pub universe: Option<String>,

    /// Inner carrier for sequences.
    #[arg(long, value_name = "TAG")]
    pub inner: Option<String>,

    /// Truncation length for sequences.
    #[arg(long, value_name = "L")]
    pub len: Option<usize>,

    /// Symbol dimensions for the term-set carrier, as `m,n`.
    #[arg(long, value_name = "M,N")]
    pub dims: Option<String>,

    /// Generic `key=value` parameter list; alternative to the flags above.
    #[arg(long, value_name = "K=V,...")]
    pub params: Option<String>,
}

#[derive(Debug, Args)]
pub struct RootOpts {
    /// Comma-separated alpha root literals (brackets nest).
    #[arg(long, value_name = "LIST", allow_hyphen_values = true)]
    pub alphas: String,

    /// Comma-separated beta root literals.
    #[arg(long, value_name = "LIST", allow_hyphen_values = true)]
    pub betas: String,
}

#[derive(Debug, Args)]
pub struct OutputOpts {
    /// Output format.
    #[arg(long, value_enum, default_value = "text")]
    pub format: Format,

    /// Emit computation traces (swap lines, matrix layouts).
    #[arg(long)]
    pub trace: bool,

    /// With --trace, also print the matrices after every swap.
    #[arg(long)]
    pub snapshots: bool,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Product of alpha_i + beta_j over all root pairs.
    Resultant {
        #[command(flatten)]
        instance: InstanceOpts,
        #[command(flatten)]
        roots: RootOpts,
        #[command(flatten)]
        output: OutputOpts,
    },
    /// Permanent of the Sylvester matrix of the two root polynomials.
    Sylvester {
        #[command(flatten)]
        instance: InstanceOpts,
        #[command(flatten)]
        roots: RootOpts,
        #[command(flatten)]
        output: OutputOpts,
    },
    /// Both routes; exits 0 when they agree, 1 when they differ.
    Verify {
        #[command(flatten)]
        instance: InstanceOpts,
        #[command(flatten)]
        roots: RootOpts,
        #[command(flatten)]
        output: OutputOpts,
    },
    /// Permanent of a matrix file of value literals.
    Permanent {
        #[command(flatten)]
        instance: InstanceOpts,
        /// Whitespace-separated rows; `#` starts a comment.
        file: String,
        #[command(flatten)]
        output: OutputOpts,
    },
    /// Boolean-matrix representation algorithms.
    #[command(subcommand)]
    Rep(RepCommand),
    /// Semiring law battery over sample values.
    Axioms {
        #[command(flatten)]
        instance: InstanceOpts,
        /// Comma-separated sample literals; defaults to the built-in pool.
        #[arg(long, value_name = "LIST", allow_hyphen_values = true)]
        samples: Option<String>,
        /// Cap on the number of triples examined per law.
        #[arg(long, default_value_t = 10_000)]
        budget: usize,
        #[command(flatten)]
        output: OutputOpts,
    },
    /// Randomized equality sweep across degrees and instances.
    Sweep {
        /// Restrict to one carrier; default sweeps all of them.
        #[arg(long, value_name = "TAG")]
        instance: Option<String>,
        #[arg(long, default_value_t = 4)]
        max_m: usize,
        #[arg(long, default_value_t = 4)]
        max_n: usize,
        #[arg(long, default_value_t = 20)]
        draws: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[command(flatten)]
        output: OutputOpts,
    },
}

#[derive(Debug, Subcommand)]
pub enum RepCommand {
    /// Pair a res-representation file with its flushed companion.
    SylFromRes {
        /// 0/1 matrix file.
        file: String,
        #[command(flatten)]
        output: OutputOpts,
    },
    /// Recover a res-representation from a syl-representation pair.
    ResFromSyl {
        s1_file: String,
        s2_file: String,
        #[command(flatten)]
        output: OutputOpts,
    },
    /// Sort the adjusted sums of a syl-representation pair.
    Sort {
        s1_file: String,
        s2_file: String,
        #[command(flatten)]
        output: OutputOpts,
    },
    /// Flush a sorted syl-representation pair.
    Flush {
        s1_file: String,
        s2_file: String,
        #[command(flatten)]
        output: OutputOpts,
    },
    /// Count (and optionally list) all representations of a term.
    Enumerate {
        /// Alpha exponents, comma-separated.
        #[arg(long, value_name = "LIST")]
        mu: String,
        /// Beta exponents, comma-separated.
        #[arg(long, value_name = "LIST")]
        nu: String,
        /// Print every representation, not just the counts.
        #[arg(long)]
        list: bool,
        #[command(flatten)]
        output: OutputOpts,
    },
}
