use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use kneserlab_core::buildings::{parse_types, BuildingSpec, Family};

use crate::CliError;

#[derive(Debug, Parser)]
#[command(name = "kneserlab", version, about = "Kneser graphs of spherical buildings over F_p")]
pub struct Cli {
    /// Worker threads for the parallel kernels (default: all cores).
    #[arg(long, global = true)]
    pub jobs: Option<usize>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Build a Kneser graph and write its vertices, edges and apartment.
    Build(BuildArgs),
    /// Decide the unique coclique extension property.
    CheckUcep(CheckArgs),
    /// Certify the counterexample fixtures from their literal witnesses.
    VerifyFixtures(FixtureArgs),
    /// Compare geometric apartments with the coset graphs of the Weyl group.
    CrossValidate(CrossArgs),
    /// Export a graph for external solvers.
    Export(ExportArgs),
}

#[derive(Debug, Clone, Args)]
pub struct SpecArgs {
    /// Building family: A, B, C, D or G.
    #[arg(long)]
    pub family: Option<Family>,
    /// Rank n of the diagram.
    #[arg(long)]
    pub rank: Option<usize>,
    /// Type set J, comma separated (for example 2 or 1,3).
    #[arg(long = "type", value_name = "J")]
    pub types: Option<String>,
    /// Characteristic of the field: 2, 3, 5 or 7.
    #[arg(long)]
    pub p: Option<u32>,
}

impl SpecArgs {
    pub fn is_empty(&self) -> bool {
        self.family.is_none() && self.rank.is_none() && self.types.is_none()
    }

    pub fn spec(&self) -> Result<BuildingSpec, CliError> {
        let missing = |flag: &str| CliError::Usage(format!("missing --{flag}"));
        let family = self.family.ok_or_else(|| missing("family"))?;
        let rank = self.rank.ok_or_else(|| missing("rank"))?;
        let types = parse_types(self.types.as_deref().ok_or_else(|| missing("type"))?)?;
        Ok(BuildingSpec::new(family, rank, self.p.unwrap_or(2), &types)?)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Dimacs,
    Text,
}

#[derive(Debug, Clone, Args)]
pub struct OutputArgs {
    /// Output file (default: standard output).
    #[arg(long, short)]
    pub output: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct BuildArgs {
    #[command(flatten)]
    pub spec: SpecArgs,
    #[arg(long, value_enum, default_value = "json")]
    pub format: Format,
    #[command(flatten)]
    pub out: OutputArgs,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Mode {
    All,
    Sample,
}

#[derive(Debug, Args)]
pub struct CheckArgs {
    #[command(flatten)]
    pub spec: SpecArgs,
    /// Check the graph of a counterexample fixture instead of --family/--rank/--type.
    #[arg(long, value_name = "CASE")]
    pub case_from_fixture: Option<String>,
    #[arg(long, value_enum, default_value = "all")]
    pub mode: Mode,
    /// Number of random maximal cocliques in sample mode.
    #[arg(long, default_value_t = 1000)]
    pub samples: usize,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Record wall-clock time in the report (makes output nondeterministic).
    #[arg(long)]
    pub timing: bool,
    #[arg(long, value_enum, default_value = "json")]
    pub format: Format,
    #[command(flatten)]
    pub out: OutputArgs,
}

#[derive(Debug, Args)]
pub struct FixtureArgs {
    /// Only these cases (repeatable): B3_2, C3_3, D4_34, A_flags(n,i).
    #[arg(long = "case", value_name = "CASE")]
    pub cases: Vec<String>,
    /// Characteristic override (default: each case's own).
    #[arg(long)]
    pub p: Option<u32>,
    /// Golden witness file (default: the built-in one).
    #[arg(long)]
    pub golden: Option<PathBuf>,
    #[arg(long, value_enum, default_value = "json")]
    pub format: Format,
    #[command(flatten)]
    pub out: OutputArgs,
}

#[derive(Debug, Args)]
pub struct CrossArgs {
    #[command(flatten)]
    pub spec: SpecArgs,
    /// Run every implemented cell with rank at most 4 and p in {2, 3}.
    #[arg(long)]
    pub grid: bool,
    #[arg(long, value_enum, default_value = "json")]
    pub format: Format,
    #[command(flatten)]
    pub out: OutputArgs,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum GraphChoice {
    /// The whole Kneser graph.
    Gamma,
    /// The apartment subgraph.
    Sigma,
    /// The complement of the Kneser graph (cliques there are cocliques here).
    Complement,
}

#[derive(Debug, Args)]
pub struct ExportArgs {
    #[command(flatten)]
    pub spec: SpecArgs,
    #[arg(long, value_enum, default_value = "gamma")]
    pub graph: GraphChoice,
    #[arg(long, value_enum, default_value = "dimacs")]
    pub format: Format,
    #[command(flatten)]
    pub out: OutputArgs,
}
