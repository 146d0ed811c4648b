use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Parser, Debug)]
#[command(name = "hypid", version, about = "Evaluate hypergeometric series and verify identities between them")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Sum a single series.
    Eval(EvalArgs),
    /// List the catalog.
    List(OutputArgs),
    /// Check selected identities on seeded bindings.
    Verify(VerifyArgs),
    /// Check every identity in the catalog.
    VerifyAll(RunArgs),
    /// Decide the sign convention of lambda for the signed entries.
    Probe(ProbeArgs),
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum ModeArg {
    Exact,
    Float,
    /// Exact when the input allows it, float otherwise.
    Auto,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Human,
}

#[derive(Args, Debug, Clone)]
pub struct OutputArgs {
    /// Write the report here instead of standard output.
    #[arg(long)]
    pub out: Option<PathBuf>,
    /// Report format; defaults to json with --out and human otherwise.
    #[arg(long, value_enum)]
    pub format: Option<Format>,
}

impl OutputArgs {
    pub fn format(&self) -> Format {
        self.format.unwrap_or(if self.out.is_some() { Format::Json } else { Format::Human })
    }
}

#[derive(Args, Debug, Clone)]
pub struct PrecisionArgs {
    /// Target decimal digits.
    #[arg(long, env = "HYPID_DIGITS", default_value_t = 30)]
    pub digits: u32,
    #[arg(long, value_enum, default_value_t = ModeArg::Auto)]
    pub mode: ModeArg,
}

#[derive(Args, Debug, Clone)]
pub struct RunArgs {
    #[arg(long, default_value_t = 25)]
    pub trials: u64,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[command(flatten)]
    pub precision: PrecisionArgs,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Args, Debug, Clone)]
pub struct VerifyArgs {
    /// Identity ids; repeat the flag or separate with commas.
    #[arg(long = "id", required = true, value_delimiter = ',')]
    pub ids: Vec<String>,
    #[command(flatten)]
    pub run: RunArgs,
}

#[derive(Args, Debug, Clone)]
pub struct ProbeArgs {
    /// Entries to probe; all signed entries when omitted.
    #[arg(long = "id", value_delimiter = ',')]
    pub ids: Vec<String>,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Args, Debug, Clone)]
pub struct EvalArgs {
    /// Upper parameters as comma-separated rationals, e.g. "3/2,-1,5".
    #[arg(long, value_delimiter = ',', allow_hyphen_values = true, num_args = 0..=1)]
    pub upper: Vec<String>,
    /// Lower parameters as comma-separated rationals.
    #[arg(long, value_delimiter = ',', allow_hyphen_values = true, num_args = 0..=1)]
    pub lower: Vec<String>,
    #[arg(long, allow_hyphen_values = true)]
    pub arg: String,
    #[command(flatten)]
    pub precision: PrecisionArgs,
}
