mod eval;
mod run;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

/// Exit codes shared by every subcommand.
pub const EXIT_FAIL: u8 = 1;
pub const EXIT_USAGE: u8 = 2;
pub const EXIT_IO: u8 = 3;

#[derive(Parser)]
#[command(
    name = "burge",
    version,
    about = "Evaluate and verify doubly bounded q-series identities"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate a single object and print its exponent:coefficient pairs.
    Eval(EvalArgs),
    /// Run verification campaigns and write a report.
    Verify(VerifyArgs),
    /// List the identity catalogue.
    ListIdentities {
        /// Only list cases of this suite.
        #[arg(long)]
        suite: Option<String>,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Object {
    Qbin,
    #[value(name = "B")]
    B,
    #[value(name = "G")]
    G,
    #[value(name = "D")]
    D,
    #[value(name = "F")]
    BigF,
    #[value(name = "f")]
    LittleF,
    #[value(name = "H")]
    H,
    #[value(name = "I")]
    I,
    #[value(name = "Ftilde")]
    Ftilde,
    Series,
}

#[derive(Args)]
pub struct EvalArgs {
    pub object: Object,
    /// Positional parameters; rationals are written as p/q.
    #[arg(allow_negative_numbers = true)]
    pub params: Vec<String>,
    #[arg(long = "L")]
    pub l: Option<i64>,
    #[arg(long = "M")]
    pub m: Option<i64>,
    /// Truncation order for series.
    #[arg(long)]
    pub order: Option<i64>,
    /// Family summed by `series`.
    #[arg(long, default_value = "F")]
    pub family: String,
    /// Base exponent for `qbin`.
    #[arg(long, default_value_t = 1)]
    pub base: i64,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum, serde::Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    Json,
    Csv,
    Plain,
}

#[derive(Args)]
pub struct VerifyArgs {
    /// Suite to run; repeat for several, or use `all`.
    #[arg(long)]
    pub suite: Vec<String>,
    #[arg(long)]
    pub a_max: Option<i64>,
    /// Sets both L and M bounds.
    #[arg(long)]
    pub lm_max: Option<i64>,
    #[arg(long)]
    pub l_max: Option<i64>,
    #[arg(long)]
    pub m_max: Option<i64>,
    #[arg(long)]
    pub n_max: Option<i64>,
    #[arg(long)]
    pub order: Option<u32>,
    #[arg(long)]
    pub hook_max: Option<i64>,
    #[arg(long, value_enum)]
    pub format: Option<Format>,
    #[arg(long)]
    pub out: Option<PathBuf>,
    /// Include per-instance timings in the report.
    #[arg(long)]
    pub timing: bool,
    #[arg(long)]
    pub threads: Option<usize>,
    /// TOML file with the same keys as the flags; flags take precedence.
    #[arg(long)]
    pub config: Option<PathBuf>,
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    let code = match cli.command {
        Command::Eval(args) => eval::run(&args),
        Command::Verify(args) => run::verify(&args),
        Command::ListIdentities { suite } => run::list(suite.as_deref()),
    };
    ExitCode::from(code)
}
