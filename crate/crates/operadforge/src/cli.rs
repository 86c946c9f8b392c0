//! Command-line grammar.

use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Debug, Parser)]
#[command(name = "operadforge", version, about = "Trees, links and cell models of manifold operads")]
pub struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Table, global = true)]
    pub format: Format,
    /// Seed for sampled sweeps.
    #[arg(long, default_value_t = 0, global = true)]
    pub seed: u64,
    /// Worker threads (defaults to the available parallelism).
    #[arg(long, global = true)]
    pub workers: Option<usize>,
    /// Write the failing certificates of a verification run to this file.
    #[arg(long, global = true, value_name = "PATH")]
    pub dump_counterexample: Option<PathBuf>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Table,
    Dot,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum SchemeArg {
    /// Uncolored trees.
    Plain,
    Rbw,
    Five,
    Rwlocal,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Enumerate trees on the labels 1..=n.
    Enumerate {
        #[arg(long)]
        labels: usize,
        #[arg(long, value_enum, default_value_t = SchemeArg::Plain)]
        scheme: SchemeArg,
        /// Print only the number of trees.
        #[arg(long)]
        count: bool,
    },
    /// Run a certificate sweep over all trees up to a label bound.
    Verify {
        #[arg(value_enum)]
        suite: Suite,
        /// Largest label set (default 4, or 3 for five-colored links).
        #[arg(long)]
        labels_max: Option<usize>,
        /// Also check this many trees sampled (with --seed) on one more label.
        #[arg(long, default_value_t = 0)]
        sample: usize,
    },
    /// Reproduce a worked example and compare with the stated values.
    Example {
        #[arg(value_enum)]
        name: ExampleName,
    },
    /// Cell-model computations.
    Stratlab {
        #[command(subcommand)]
        command: StratCommand,
    },
    /// Euler characteristic of a boundary colimit, by cells and by strata.
    Euler(BoundaryArgs),
    /// Mod-2 Betti numbers of the order complex of a poset or boundary colimit.
    Betti {
        /// A poset file in the posetkit JSON schema.
        #[arg(long, conflicts_with = "model")]
        poset: Option<PathBuf>,
        #[arg(long, requires = "arity")]
        model: Option<String>,
        #[arg(long)]
        arity: Option<usize>,
        #[arg(long, default_value = "operad")]
        flavor: String,
    },
    /// Dimension ledger entries.
    Ledger {
        #[arg(long)]
        d: usize,
        #[arg(long)]
        m: usize,
        /// operad, bimodule, operad-obstruction or bimodule-obstruction.
        #[arg(long)]
        kind: String,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Suite {
    /// Link balls of all nontrivial RBW contractions.
    Links,
    /// Join decomposition of contraction-system links.
    JoinDecomp,
    /// Contraction posets against contraction-system posets.
    SysIso,
    /// Elementary decomposition of every contraction.
    Elementary,
    /// Five-colored links as joins of three blocks.
    Five,
    /// Red/white local links.
    Rwlocal,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum ExampleName {
    Hexagons,
    Chi48,
    #[value(name = "fm1-pentagons", alias = "fm1")]
    Fm1Pentagons,
    NullChain,
}

#[derive(Debug, Args)]
pub struct ModelArg {
    /// A built-in model (fm1, fm1-2 … fm1-5, interval, interval-w3, null,
    /// trivial) or a model JSON file.
    #[arg(long)]
    pub model: String,
}

#[derive(Debug, Args)]
pub struct BoundaryArgs {
    #[command(flatten)]
    pub model: ModelArg,
    #[arg(long)]
    pub arity: usize,
    /// operad, left-operad, bimodule-boundary, left-part or right-part.
    #[arg(long, default_value = "operad")]
    pub flavor: String,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum SideArg {
    Left,
    Right,
}

#[derive(Debug, Subcommand)]
pub enum StratCommand {
    /// The boundary colimit of a model in one arity.
    Boundary(BoundaryArgs),
    /// One arity of surgery.
    Extend {
        #[command(flatten)]
        model: ModelArg,
        #[arg(long, value_enum)]
        side: SideArg,
        /// Write the extended model as JSON to this file.
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Validate a model.
    Validate {
        #[command(flatten)]
        model: ModelArg,
    },
    /// Recognize one space of a model.
    Space {
        #[command(flatten)]
        model: ModelArg,
        /// R, B or W.
        #[arg(long)]
        color: char,
        #[arg(long)]
        arity: usize,
    },
    /// Print a model as JSON.
    Export {
        #[command(flatten)]
        model: ModelArg,
    },
    /// Reproduce a worked example.
    Example {
        #[arg(value_enum)]
        name: ExampleName,
    },
}
