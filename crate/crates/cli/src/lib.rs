//! The `starbrace` command-line front end.
//!
//! Every subcommand produces a [`RunReport`](report::RunReport) written to
//! stdout as JSON lines, with a short human summary on stderr.
//!
//! Exit codes: 0 when every check passes, 2 when a check fails, 3 on an
//! input error (unreadable or malformed file, invalid arguments, a
//! structure below the level a command needs).

use std::ffi::OsString;
use std::path::PathBuf;

use clap::{ArgGroup, Parser, Subcommand, ValueEnum};

mod commands;
pub mod report;

pub const EXIT_PASS: i32 = 0;
pub const EXIT_CHECK_FAILED: i32 = 2;
pub const EXIT_INPUT_ERROR: i32 = 3;

#[derive(Debug, Parser)]
#[command(name = "starbrace", version, about = "Build, decompose, deform and verify finite dual weak left star-braces")]
pub struct Cli {
    /// Record per-check wall times in the report.
    #[arg(long, global = true)]
    pub timing: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Run the axiom stack up to a level, plus the class report of each reduct.
    Check {
        path: PathBuf,
        #[arg(long, value_enum, default_value_t = Level::Dual)]
        level: Level,
    },
    /// Build a square brace or a strong semilattice and write it out.
    #[command(group(ArgGroup::new("source").required(true).args(["square", "semilattice"])))]
    Build {
        /// Index-set size and skew-brace file.
        #[arg(long, num_args = 2, value_names = ["SIZE", "BRACE"])]
        square: Option<Vec<String>>,
        /// Semilattice spec file.
        #[arg(long)]
        semilattice: Option<PathBuf>,
        #[arg(short, long)]
        out: PathBuf,
    },
    /// Split a structure into a strong semilattice of square braces.
    Decompose {
        path: PathBuf,
        /// Spec file to write; component files are written next to it.
        #[arg(short, long)]
        out: PathBuf,
    },
    /// Write one deformed map and report whether it solves the equation.
    Deform {
        path: PathBuf,
        #[arg(long)]
        z: usize,
        #[arg(long, value_enum)]
        variant: VariantArg,
        #[arg(short, long)]
        out: PathBuf,
    },
    /// Run a verifier over every applicable parameter.
    Verify {
        path: PathBuf,
        #[arg(long, value_enum)]
        theorem: Theorem,
    },
    /// Write one skew-brace file per isomorphism class of an order.
    Enumerate {
        #[arg(long)]
        order: usize,
        #[arg(long, value_enum, default_value_t = Kind::Skewbrace)]
        kind: Kind,
        /// Directory for the structure files.
        #[arg(short, long, default_value = ".")]
        out: PathBuf,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, ValueEnum)]
pub enum Level {
    Semigroup,
    Weakstar,
    Dual,
    Square,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum VariantArg {
    R,
    Rcheck,
    Barhat,
    Barcheck,
}

/// The verifiers. The numeric aliases are the names used in the command
/// reference.
#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Theorem {
    /// `r_z` solves the equation iff `z` is a right distributor.
    #[value(name = "solution-iff-distributor", alias = "4.6")]
    SolutionIffDistributor,
    /// The `r_z`/`ř_{z⋆}` absorption and commutation relations.
    #[value(name = "relations", alias = "4.7")]
    Relations,
    /// Sandwich and (anti-)homomorphism identities of the `σ`/`τ` actions.
    #[value(name = "sigma-tau", alias = "4.9")]
    SigmaTau,
    /// Deformations of a skew brace.
    #[value(name = "group-deformations", alias = "2.9")]
    GroupDeformations,
    /// The barred variants and their relation search.
    #[value(name = "bar-variants", alias = "remark4.8")]
    BarVariants,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Kind {
    Skewbrace,
}

/// Everything a run produced.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INPUT_ERROR } else { EXIT_PASS };
            let text = e.render().to_string();
            let (stdout, stderr) = if e.use_stderr() { (String::new(), text) } else { (text, String::new()) };
            return Outcome { code, stdout, stderr };
        }
    };
    commands::execute(&cli)
}

/// Sizes the global thread pool from `STARBRACE_THREADS` (0 or unset =
/// one thread per core).
pub fn configure_threads() -> Result<(), String> {
    let Ok(value) = std::env::var("STARBRACE_THREADS") else {
        return Ok(());
    };
    let n: usize = value
        .trim()
        .parse()
        .map_err(|_| format!("STARBRACE_THREADS must be a number, got `{value}`"))?;
    rayon::ThreadPoolBuilder::new()
        .num_threads(n)
        .build_global()
        .map_err(|e| e.to_string())
}
