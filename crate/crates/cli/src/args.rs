use clap::{Parser, Subcommand, ValueEnum};
use std::path::PathBuf;

/// Quantum cluster characters of quiver representations over GF(p), and
/// exact checks of their multiplication formulas.
#[derive(Debug, Parser)]
#[command(name = "qcchar", version)]
pub struct Cli {
    /// Prime field size.
    #[arg(long, global = true)]
    pub p: Option<u32>,
    /// Catalog quiver name (a2, a3, k2, preproj-a2) or path to a quiver JSON file.
    #[arg(long, global = true)]
    pub quiver: Option<String>,
    /// `auto`, or an inline JSON matrix such as `[[0,1],[-1,0]]`.
    #[arg(long, global = true)]
    pub lambda: Option<String>,
    /// Maximal flag-type length for δ-based checks.
    #[arg(long, global = true)]
    pub depth: Option<usize>,
    /// Enumeration cap for exhaustive searches.
    #[arg(long, global = true)]
    pub cap: Option<u64>,
    /// Emit one JSON object per result instead of text.
    #[arg(long, global = true)]
    pub json: bool,
    #[command(subcommand)]
    pub cmd: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Style {
    Plain,
    Tilde,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Suite {
    FiberLaw,
    Maintheorem1,
    OnedimDelta,
    Exchange,
    Balance,
    ExponentId,
    Scaling,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Counts submodules of a given dimension vector.
    Gr {
        /// Catalog object name or representation JSON file.
        #[arg(long)]
        rep: String,
        /// Dimension vector such as `0,1`.
        #[arg(long)]
        dim: String,
        /// Also print the submodules, one per line.
        #[arg(long)]
        list: bool,
    },
    /// Prints the character of a cluster-category object.
    Character {
        #[arg(long)]
        object: String,
        #[arg(long, value_enum, default_value_t = Style::Plain)]
        style: Style,
    },
    /// Counts flags of a type `i1,…,im;a1,…,am`.
    Delta {
        #[arg(long)]
        rep: String,
        #[arg(long = "type")]
        flag_type: String,
    },
    /// Lists flags of a type `i1,…,im;a1,…,am`.
    Flags {
        #[arg(long)]
        rep: String,
        #[arg(long = "type")]
        flag_type: String,
        #[arg(long)]
        list: bool,
    },
    /// Hom and Ext¹ dimensions in both directions.
    Ext {
        #[arg(long)]
        m: String,
        #[arg(long)]
        n: String,
    },
    /// Runs a verification suite over catalog cases.
    Verify {
        #[arg(value_enum)]
        suite: Suite,
        /// Case name; all cases of the suite when omitted.
        #[arg(long)]
        case: Option<String>,
        /// Seed for randomized fiber instances.
        #[arg(long, default_value_t = 1)]
        seed: u64,
        /// Number of randomized fiber instances.
        #[arg(long, default_value_t = 200)]
        count: usize,
        /// Base weights `w1;w2` for the multiplication theorem.
        #[arg(long)]
        weights: Option<String>,
    },
    /// Lists, shows or self-checks the example catalog.
    Catalog {
        #[command(subcommand)]
        action: Option<CatalogAction>,
    },
    /// Runs the tasks of a job file.
    Run { job: PathBuf },
}

#[derive(Debug, Subcommand)]
pub enum CatalogAction {
    List,
    /// Prints a catalog quiver, or an object of `--quiver`, as JSON.
    Show { name: String },
    /// Builds every entry and checks the exchange preconditions.
    Check,
}
