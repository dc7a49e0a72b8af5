//! Command-line entry point. Exit codes: 0 = all checks pass, 1 = a
//! mathematical check failed, 2 = input or usage error.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use liecs_cli::commands;
use liecs_cli::report::{Format, Report};
use liecs_cli::EXIT_INPUT;

#[derive(Parser)]
#[command(
    name = "liecs",
    about = "Exact verifier and classifier for Lie algebras with abelian complex structures",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = FormatArg::Text)]
    format: FormatArg,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum FormatArg {
    Text,
    Json,
}

impl From<FormatArg> for Format {
    fn from(f: FormatArg) -> Format {
        match f {
            FormatArg::Text => Format::Text,
            FormatArg::Json => Format::Json,
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Run the catalog invariant suite.
    VerifyCatalog {
        /// Restrict to one entry id or algebra id.
        #[arg(long)]
        id: Option<String>,
        /// Parameter grid size per entry.
        #[arg(long, default_value_t = 100)]
        grid: usize,
    },
    /// Check a structure-constant file (and optionally a structure file).
    Check {
        algebra: PathBuf,
        /// Structure matrix to check against the algebra.
        #[arg(long)]
        j: Option<PathBuf>,
    },
    /// Classify an abelian structure against the catalog fingerprints.
    Classify {
        algebra: PathBuf,
        #[arg(long)]
        j: PathBuf,
    },
    /// Print a basis of the derivation algebra (or of the derivation pairs).
    Derivations {
        algebra: PathBuf,
        /// Also require D J to be a derivation for this structure.
        #[arg(long)]
        with_j: Option<PathBuf>,
    },
    /// Print lower central and derived series dimensions.
    Series { algebra: PathBuf },
    /// Check a commutative associative table and build its doubling.
    Affalg { assoc: PathBuf },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = match &cli.command {
        Command::VerifyCatalog { id, grid } => commands::verify_catalog(id.as_deref(), *grid),
        Command::Check { algebra, j } => commands::check(algebra, j.as_deref()),
        Command::Classify { algebra, j } => commands::classify_cmd(algebra, j),
        Command::Derivations { algebra, with_j } => {
            commands::derivations(algebra, with_j.as_deref())
        }
        Command::Series { algebra } => commands::series(algebra),
        Command::Affalg { assoc } => commands::affalg_cmd(assoc),
    };
    let (report, code) = match outcome {
        Ok(pair) => pair,
        Err(message) => (
            Report {
                lines: vec![format!("error: {message}")],
                json: serde_json::json!({ "error": message }),
            },
            EXIT_INPUT,
        ),
    };
    println!("{}", report.render(cli.format.into()));
    ExitCode::from(code)
}
