//! `engel`: batch front end for the engel-core library.

mod commands;
mod select;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use engel_core::algebra::rank::{DEFAULT_RANGE, DEFAULT_SEED, DEFAULT_TRIALS};
use engel_core::Error;

#[derive(Parser)]
#[command(name = "engel", version, about = "Weighted super-homology of Engel-type Lie algebras")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// The six Engel-type families.
    Families {
        #[command(subcommand)]
        action: CatalogAction,
    },
    /// The twelve classification types.
    Types {
        #[command(subcommand)]
        action: CatalogAction,
        /// Type parameters, e.g. `a=2,b=1/2` (for `show` and `dump`).
        #[arg(long = "param", value_delimiter = ',', global = true)]
        params: Vec<String>,
    },
    /// Jacobi residuals of an algebra or of the Engel ansatz.
    Jacobi(JacobiArgs),
    /// Betti reports of weighted chain complexes.
    Betti(BettiArgs),
    /// Exact rank of one boundary map at a full specialization.
    Strata(StrataArgs),
    /// Engel-like coefficient of a classification type.
    Elc(ElcArgs),
    /// Characteristic foliation inside span(y1, y2).
    Foliation(FoliationArgs),
}

#[derive(Subcommand)]
enum CatalogAction {
    /// Ids with their parameter alphabets.
    List,
    /// Bracket table of one entry.
    Show { id: usize },
    /// One entry in the inline JSON format.
    Dump { id: usize },
}

#[derive(Clone, Copy, Default, ValueEnum)]
pub enum Format {
    #[default]
    Table,
    Json,
    Csv,
}

/// Exactly one algebra source.
#[derive(Args)]
#[group(required = true, multiple = false)]
pub struct Selector {
    /// Engel-type family ids (comma-separated for `betti`).
    #[arg(long, value_delimiter = ',')]
    pub family: Vec<usize>,
    /// Classification type ids (comma-separated for `betti`).
    #[arg(long = "type", value_delimiter = ',')]
    pub class_type: Vec<usize>,
    /// Structure-constant file in the inline JSON format.
    #[arg(long)]
    pub inline: Option<PathBuf>,
}

#[derive(Args)]
#[group(required = true, multiple = false)]
pub struct JacobiSelector {
    #[arg(long)]
    pub family: Option<usize>,
    #[arg(long = "type")]
    pub class_type: Option<usize>,
    #[arg(long)]
    pub inline: Option<PathBuf>,
    /// The ansatz with all sixteen free coefficients.
    #[arg(long)]
    pub ansatz: bool,
}

#[derive(Args)]
pub struct JacobiArgs {
    #[command(flatten)]
    pub selector: JacobiSelector,
    #[arg(long = "param", value_delimiter = ',')]
    pub params: Vec<String>,
    #[arg(long, value_enum, default_value_t)]
    pub format: Format,
}

#[derive(Args)]
pub struct BettiArgs {
    #[command(flatten)]
    pub selector: Selector,
    /// Type parameters, e.g. `a=2,b=1/2`.
    #[arg(long = "param", value_delimiter = ',')]
    pub params: Vec<String>,
    /// tangent, cotangent or extended.
    #[arg(long)]
    pub complex: String,
    /// Signed weights, comma-separated.
    #[arg(long, value_delimiter = ',', allow_hyphen_values = true, required = true)]
    pub weights: Vec<i32>,
    #[arg(long, default_value_t = DEFAULT_TRIALS)]
    pub trials: u32,
    #[arg(long, default_value_t = DEFAULT_SEED)]
    pub seed: u64,
    #[arg(long, default_value_t = DEFAULT_RANGE)]
    pub range: i64,
    /// Exact rank over the parameter field instead of random points.
    #[arg(long)]
    pub symbolic: bool,
    /// Fix some parameters first, e.g. `C244=0`.
    #[arg(long, value_delimiter = ',')]
    pub specialize: Vec<String>,
    #[arg(long, value_enum, default_value_t)]
    pub format: Format,
    /// Print |weight| in table headers.
    #[arg(long)]
    pub paper_table: bool,
    #[arg(long)]
    pub output: Option<PathBuf>,
}

#[derive(Args)]
pub struct StrataArgs {
    #[command(flatten)]
    pub selector: Selector,
    #[arg(long = "param", value_delimiter = ',')]
    pub params: Vec<String>,
    #[arg(long)]
    pub complex: String,
    #[arg(long, allow_hyphen_values = true)]
    pub weight: i32,
    /// Source degree of the boundary map.
    #[arg(long)]
    pub m: usize,
    /// Values for every parameter, e.g. `C143=1,C144=0`.
    #[arg(long, value_delimiter = ',')]
    pub assign: Vec<String>,
    #[arg(long, value_enum, default_value_t)]
    pub format: Format,
}

#[derive(Args)]
pub struct ElcArgs {
    #[arg(long = "type")]
    pub class_type: usize,
    #[arg(long = "param", value_delimiter = ',')]
    pub params: Vec<String>,
    /// Print the closed form and check it against the computed polynomial.
    #[arg(long, conflicts_with = "witness")]
    pub symbolic: bool,
    /// A plane `p=..;q=..` to test for an Engel-like structure.
    #[arg(long)]
    pub witness: Option<String>,
    #[arg(long, value_enum, default_value_t)]
    pub format: Format,
}

#[derive(Args)]
pub struct FoliationArgs {
    #[command(flatten)]
    pub selector: Selector,
    #[arg(long = "param", value_delimiter = ',')]
    pub params: Vec<String>,
    #[arg(long, value_enum, default_value_t)]
    pub format: Format,
}

#[derive(Debug)]
pub enum CliError {
    Usage(String),
    Failed(String),
    Core(Error),
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        CliError::Core(e)
    }
}

impl CliError {
    fn code(&self) -> u8 {
        match self {
            CliError::Usage(_) => 1,
            CliError::Failed(_) => 2,
            CliError::Core(e) => match e {
                Error::Parse(_) | Error::InvalidId { .. } | Error::InvalidMode(_) | Error::MissingParameter(_) => 1,
                Error::ConstraintViolation(_) | Error::Degenerate(_) => 2,
                Error::SingularMatrix | Error::MixedKinds(_) | Error::DegreeUnderflow | Error::Arithmetic(_) => 3,
            },
        }
    }
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CliError::Usage(s) | CliError::Failed(s) => f.write_str(s),
            CliError::Core(e) => write!(f, "{e}"),
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 1 } else { 0 });
        }
    };
    let result = match cli.command {
        Command::Families { action } => commands::families(action),
        Command::Types { action, params } => commands::types(action, &params),
        Command::Jacobi(a) => commands::jacobi(&a),
        Command::Betti(a) => commands::betti(&a),
        Command::Strata(a) => commands::strata(&a),
        Command::Elc(a) => commands::elc(&a),
        Command::Foliation(a) => commands::foliation(&a),
    };
    match result {
        Ok(out) => {
            print!("{out}");
            ExitCode::SUCCESS
        }
        Err((out, e)) => {
            print!("{out}");
            eprintln!("error: {e}");
            ExitCode::from(e.code())
        }
    }
}
