mod commands;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use hopfsym::checkers::{DecideOptions, DEFAULT_BUDGET, DEFAULT_SEED};
use hopfsym::Field;

/// Exact computations with finite-dimensional Hopf algebras and comodule algebras.
#[derive(Parser, Debug)]
#[command(name = "hopfsym", version)]
struct Cli {
    #[command(flatten)]
    global: GlobalOpts,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug, Clone)]
pub struct GlobalOpts {
    /// Ground field, `q` or `fp:p`; defaults to the field declared by the input file.
    #[arg(long, global = true, value_parser = parse_field)]
    pub field: Option<Field>,
    #[arg(long, global = true, default_value_t = DEFAULT_SEED)]
    pub seed: u64,
    /// Largest exhaustive search over pencil coefficients.
    #[arg(long, global = true, default_value_t = DEFAULT_BUDGET)]
    pub budget: u64,
    #[arg(long, global = true, value_enum, default_value_t = ReportFormat::Text)]
    pub report: ReportFormat,
}

impl GlobalOpts {
    pub fn decide_options(&self) -> DecideOptions {
        DecideOptions {
            seed: self.seed,
            budget: self.budget,
        }
    }
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum ReportFormat {
    Text,
    Json,
}

fn parse_field(s: &str) -> Result<Field, String> {
    s.parse::<Field>().map_err(|e| e.to_string())
}

#[derive(Args, Debug)]
pub struct ObjectArgs {
    pub file: PathBuf,
    #[arg(long)]
    pub object: String,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Run every axiom validator on every object in the file.
    Validate { file: PathBuf },
    /// Emit the dual Hopf algebra.
    Dual(ObjectArgs),
    /// Integrals, distinguished grouplikes, structural flags and the integral identities.
    Structure(ObjectArgs),
    /// Check that a character is sovereign.
    Sovereign {
        #[command(flatten)]
        target: ObjectArgs,
        /// A character name from the file, or comma-separated coordinates.
        #[arg(long)]
        character: String,
    },
    /// Emit the smash product `A # H*` over `H*`.
    Smash(ObjectArgs),
    /// Emit the trivial extension `E(A)` and its canonical witness.
    Trivext {
        #[command(flatten)]
        target: ObjectArgs,
        #[arg(long)]
        character: String,
    },
    /// Emit the coinvariant subalgebra.
    Coinv(ObjectArgs),
    /// Decide Frobenius in `M^H` (or as a plain algebra with --plain).
    Frobenius {
        #[command(flatten)]
        target: ObjectArgs,
        #[arg(long)]
        plain: bool,
    },
    /// Decide `(H,u)`-symmetry (or plain symmetry with --plain).
    Symmetric {
        #[command(flatten)]
        target: ObjectArgs,
        #[arg(long, required_unless_present = "plain")]
        character: Option<String>,
        #[arg(long)]
        plain: bool,
    },
    /// The built-in catalog of worked examples.
    Catalog {
        #[command(subcommand)]
        action: CatalogAction,
    },
}

#[derive(Subcommand, Debug)]
enum CatalogAction {
    /// Run every entry and compare with the expected verdicts.
    RunAll,
    /// List the entries.
    List,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let g = &cli.global;
    let result = match &cli.command {
        Command::Validate { file } => commands::validate(file, g),
        Command::Dual(t) => commands::dual(t, g),
        Command::Structure(t) => commands::structure(t, g),
        Command::Sovereign { target, character } => commands::sovereign(target, character, g),
        Command::Smash(t) => commands::smash(t, g),
        Command::Trivext { target, character } => commands::trivext(target, character, g),
        Command::Coinv(t) => commands::coinv(t, g),
        Command::Frobenius { target, plain } => commands::frobenius(target, *plain, g),
        Command::Symmetric {
            target,
            character,
            plain,
        } => commands::symmetric(target, character.as_deref(), *plain, g),
        Command::Catalog { action } => match action {
            CatalogAction::RunAll => commands::catalog_run_all(g),
            CatalogAction::List => commands::catalog_list(g),
        },
    };
    match result {
        Ok(out) => {
            print!("{}", out.text);
            if out.ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(commands::exit_code(&e))
        }
    }
}
