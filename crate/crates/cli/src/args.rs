use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

/// Exact enumeration of adjacent-consecutive-interchange classes, their
/// generating functions, and multiplicity-free flag h-vectors.
#[derive(Parser, Debug)]
#[command(name = "salient", version, about)]
pub struct Cli {
    /// Output format. `dot` applies to `poset show` only.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,

    /// Override a size guard, e.g. `--limit brute_n=9`. Repeatable.
    #[arg(long = "limit", global = true, value_name = "NAME=VALUE")]
    pub limits: Vec<String>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Dot,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// List the classes of S_n.
    Classes {
        #[arg(long)]
        n: usize,
        /// `consecutive` or `geq:J`.
        #[arg(long, default_value = "consecutive")]
        relation: String,
        /// Omit member lists of classes larger than this.
        #[arg(long, default_value_t = 64)]
        members_up_to: usize,
    },
    /// Count the classes of S_n.
    Count {
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value_t = CountBy::Formula)]
        method: CountBy,
        /// `consecutive` or `geq:J`.
        #[arg(long, default_value = "consecutive")]
        relation: String,
        /// Print the counts for 0..=n.
        #[arg(long)]
        sequence: bool,
    },
    /// The class of one word.
    Class {
        #[arg(long)]
        word: String,
        #[arg(long, default_value = "consecutive")]
        relation: String,
        /// Print only the number of members.
        #[arg(long)]
        size_only: bool,
        /// Print the size from the run decomposition instead of the orbit.
        #[arg(long)]
        product: bool,
    },
    /// The salient member of a word's class.
    Salient {
        #[arg(long)]
        word: String,
        /// Only report whether the word itself is salient.
        #[arg(long)]
        check: bool,
    },
    /// Runs of consecutive integers whose Fibonacci numbers multiply to the class size.
    Segments {
        #[arg(long)]
        word: String,
    },
    /// Descent set of a word.
    Descents {
        #[arg(long)]
        word: String,
    },
    /// Words one move away.
    Moves {
        #[arg(long)]
        word: String,
        /// Swap letters differing by at least J instead of exactly one.
        #[arg(long)]
        geq: Option<u32>,
    },
    /// Subsets of [n-1] without two consecutive members.
    Sparse {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        count_only: bool,
    },
    /// Permutations forming one-element classes.
    Singletons {
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value_t = Method::Brute)]
        method: Method,
        /// Print the counts for 0..=n.
        #[arg(long)]
        sequence: bool,
    },
    /// Classes of the words with a given content, e.g. `--spec 1:2,2:1,3:2`.
    Multiset {
        #[arg(long)]
        spec: String,
        #[arg(long)]
        count_only: bool,
        #[arg(long, value_enum, default_value_t = Method::Brute)]
        method: Method,
    },
    /// Cartier-Foata series `1 / (1 - sum x_i + sum x_i x_(i+1))`.
    Cf {
        #[arg(long)]
        n: usize,
        /// Per-variable exponent caps, comma separated.
        #[arg(long)]
        caps: String,
        /// Print one coefficient, e.g. `--at 1,1,1`.
        #[arg(long)]
        at: Option<String>,
    },
    /// Closed form for a four-letter coefficient.
    F4 {
        /// `h,i,j,k`.
        #[arg(long)]
        exps: String,
        /// Coefficient in the t-th power of the series.
        #[arg(long)]
        t: Option<u64>,
        /// Read the coefficient off the series instead.
        #[arg(long)]
        series: bool,
    },
    /// Class counts of `{1^k, ..., n^k}` through the umbral series.
    Umbral {
        #[arg(long)]
        k: u32,
        #[arg(long)]
        upto: usize,
        /// Print the connected-graph polynomials c(m) instead.
        #[arg(long)]
        connected: bool,
    },
    /// Apply t^m -> m! to a polynomial given by its coefficients, lowest first.
    Phi {
        /// e.g. `0,0,1/2,-1`.
        #[arg(long, allow_hyphen_values = true)]
        coeffs: String,
    },
    /// Expand a rational function of x.
    Expand {
        /// Numerator coefficients, lowest degree first.
        #[arg(long, allow_hyphen_values = true)]
        num: String,
        /// Denominator factors; repeat to multiply several.
        #[arg(long, allow_hyphen_values = true, required = true)]
        den: Vec<String>,
        #[arg(long)]
        order: u32,
    },
    /// Graded and natural poset operations.
    Poset {
        #[command(subcommand)]
        command: PosetCommand,
    },
    /// Count multiplicity-free posets.
    Enumerate {
        #[arg(long, value_enum)]
        by: EnumerateBy,
        #[arg(long)]
        max: usize,
        /// Use the exhaustive level-structure search instead of block sums.
        #[arg(long)]
        exhaustive: bool,
    },
    /// Run a verification suite: `all`, a number 1-14, or a check name.
    Verify {
        #[arg(long, default_value = "all")]
        suite: String,
    },
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum CountBy {
    Bfs,
    Salient,
    Formula,
    Series,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Method {
    Brute,
    Series,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum EnumerateBy {
    Rank,
    Elements,
    /// Posets whose ideal lattice is multiplicity-free, by size.
    Distributive,
}

/// Where a poset comes from.
#[derive(Args, Debug, Clone)]
#[group(required = true, multiple = false)]
pub struct Source {
    /// `L(gamma)`, or `Q(gamma)` where a natural poset is needed.
    #[arg(long)]
    pub gamma: Option<String>,
    /// `J(Q_n)`, or `Q_n` where a natural poset is needed.
    #[arg(long)]
    pub qn: Option<usize>,
    /// A JSON file: `{"elements","ranks","covers"}` or `{"n","relations"}`.
    #[arg(long)]
    pub file: Option<PathBuf>,
    /// The chain with n + 1 elements, or n elements where natural.
    #[arg(long)]
    pub chain: Option<usize>,
    /// The boolean algebra B_n, or the n-element antichain where natural.
    #[arg(long)]
    pub boolean: Option<usize>,
    /// A natural poset `n:a<b,c<d`; graded commands use its ideal lattice.
    #[arg(long)]
    pub relations: Option<String>,
}

#[derive(Subcommand, Debug)]
pub enum PosetCommand {
    /// Number of chains meeting exactly the ranks in a set.
    Alpha {
        #[command(flatten)]
        source: Source,
        /// e.g. `1,2`; empty string for the empty set.
        #[arg(long)]
        set: String,
    },
    /// Flag f- and h-vectors.
    Beta {
        #[command(flatten)]
        source: Source,
        /// One rank set, e.g. `1,2`; empty string for the empty set.
        #[arg(long)]
        set: Option<String>,
    },
    /// Linear extensions.
    Extensions {
        #[command(flatten)]
        source: Source,
        #[arg(long)]
        count_only: bool,
    },
    /// Print the poset (text, json or dot).
    Show {
        #[command(flatten)]
        source: Source,
        /// Show the natural poset (Q) rather than the graded one.
        #[arg(long)]
        natural: bool,
    },
    /// Whether the flag h-vector only takes the values 0 and +-1.
    Mf {
        #[command(flatten)]
        source: Source,
    },
    /// Structure checks on a natural poset: forbidden subposets and ideal counts.
    Classify {
        #[command(flatten)]
        source: Source,
    },
    /// Stretch or proliferate at a rank.
    Transform {
        #[command(flatten)]
        source: Source,
        #[arg(long, value_enum)]
        op: Transform,
        #[arg(long)]
        rank: usize,
    },
    /// Whether two posets are isomorphic. Each is `KIND:VALUE` with KIND one
    /// of gamma, qn, chain, boolean, relations, file (or a bare file path).
    Iso {
        a: String,
        b: String,
        /// Compare the natural readings instead of the graded ones.
        #[arg(long)]
        natural: bool,
    },
    /// Ordinal sum of two posets, given as for `iso`.
    Sum {
        a: String,
        b: String,
        #[arg(long)]
        natural: bool,
    },
    /// Number of indecomposable blocks of size n.
    Blocks {
        #[arg(long)]
        n: usize,
    },
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Transform {
    Stretch,
    Proliferate,
}
