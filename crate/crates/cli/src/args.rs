use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Debug, Parser)]
#[command(name = "motivic-cc", version, about = "Exact generating series for Hilbert schemes, symmetric products and their characteristic classes")]
pub struct Cli {
    /// Print a text table instead of JSON.
    #[arg(long, global = true)]
    pub pretty: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Kapranov zeta function of a model under a chosen specialization.
    Zeta(ZetaArgs),
    /// Euler exponents of a punctual Hilbert series or of a supplied series.
    Exponents(ExponentsArgs),
    /// Class-level generating series in the free Pontrjagin ring.
    Classes(ClassesArgs),
    /// Randomized identity suites.
    Verify(VerifyArgs),
    /// Emit a builtin model as a model file.
    Model(ModelArgs),
}

#[derive(Debug, Clone, Args)]
#[group(required = true, multiple = false)]
pub struct ModelSource {
    /// Model file (JSON).
    #[arg(long)]
    pub model: Option<PathBuf>,
    /// Builtin model: point, P0..P4 or a product such as P1xP1.
    #[arg(long)]
    pub builtin: Option<String>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Spec {
    Uv,
    ChiY,
    Chi,
}

#[derive(Debug, Args)]
pub struct ZetaArgs {
    #[command(flatten)]
    pub source: ModelSource,
    #[arg(long, default_value_t = 6)]
    pub order: usize,
    #[arg(long, value_enum, default_value = "uv")]
    pub spec: Spec,
}

#[derive(Debug, Args)]
pub struct ExponentsArgs {
    /// Dimension d of the punctual Hilbert scheme of C^d.
    #[arg(long, required_unless_present = "series", conflicts_with = "series")]
    pub dim: Option<u32>,
    /// Normalized motivic series file.
    #[arg(long)]
    pub series: Option<PathBuf>,
    #[arg(long, default_value_t = 3)]
    pub order: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Kind {
    Hilb,
    Sym,
    Config,
    Chern,
    Virtual,
    Aluffi,
}

#[derive(Debug, Args)]
pub struct ClassesArgs {
    #[command(flatten)]
    pub source: ModelSource,
    /// Local dimension d of the Hilbert scheme (hilb, chern; virtual and aluffi need 3).
    #[arg(long)]
    pub dim: Option<u32>,
    #[arg(long, default_value_t = 3)]
    pub order: usize,
    #[arg(long, value_enum)]
    pub kind: Kind,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Suite {
    Lambda,
    Motives,
    Hirzebruch,
    Pontrjagin,
    All,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    #[arg(long, value_enum, default_value = "all")]
    pub suite: Suite,
    #[arg(long, default_value_t = 6)]
    pub order: usize,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Random instances per randomized check.
    #[arg(long, default_value_t = 100)]
    pub cases: usize,
}

#[derive(Debug, Args)]
pub struct ModelArgs {
    #[arg(long)]
    pub builtin: String,
}
