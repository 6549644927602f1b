mod commands;
mod failure;
mod setup;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use tiltglue::format::AlgebraOptions;

use crate::setup::SetupArgs;

#[derive(Parser, Debug)]
#[command(
    name = "tiltglue",
    version,
    about = "Glue tilting and cotilting modules along recollements of bound quiver algebras"
)]
struct Cli {
    /// Seed for the randomized decomposition fast path
    #[arg(long, global = true, default_value = "0xC0FFEE", value_parser = parse_seed)]
    seed: u64,
    /// Field characteristic; overrides the `field` line of every algebra file
    #[arg(long, global = true)]
    prime: Option<u64>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Parse an algebra file and print its invariants
    CheckAlgebra { file: PathBuf },
    /// Dimensions of Ext^i(M, N) for i = 1..=max-degree
    Ext {
        #[arg(long)]
        algebra: PathBuf,
        m: PathBuf,
        n: PathBuf,
        #[arg(long, default_value_t = 4)]
        max_degree: usize,
    },
    /// Verify the n-tilting axioms; without --n the least n is searched
    CheckTilting {
        #[arg(long)]
        algebra: PathBuf,
        module: PathBuf,
        #[arg(long)]
        n: Option<usize>,
    },
    /// Verify the n-cotilting axioms; without --n the least n is searched
    CheckCotilting {
        #[arg(long)]
        algebra: PathBuf,
        module: PathBuf,
        #[arg(long)]
        n: Option<usize>,
    },
    /// The cotorsion pair of a tilting or cotilting module over a universe
    Cotorsion {
        #[arg(long)]
        algebra: PathBuf,
        #[arg(long)]
        universe: PathBuf,
        module: PathBuf,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        cotilting: bool,
    },
    /// Exactness of the recollement functors, functor tables and identity audit
    Recollement {
        #[command(flatten)]
        setup: SetupArgs,
    },
    /// Glue an n1-tilting module on the sub side with an n3-tilting module on the quotient side
    GlueTilting {
        #[command(flatten)]
        setup: SetupArgs,
        #[command(flatten)]
        inputs: commands::InputArgs,
    },
    /// Glue an n1-cotilting module on the sub side with an n3-cotilting module on the quotient side
    GlueCotilting {
        #[command(flatten)]
        setup: SetupArgs,
        #[command(flatten)]
        inputs: commands::InputArgs,
    },
    /// Run the full pipeline on the bundled example and compare with the expected answer
    Reproduce {
        #[arg(value_parser = ["5-1", "5-2"])]
        example: String,
        /// Directory laid out like the bundled example data
        #[arg(long)]
        data_dir: Option<PathBuf>,
    },
    /// Check that a universe is complete, indecomposable and irredundant
    VerifyUniverse {
        #[arg(long, requires = "universe", conflicts_with = "data_dir")]
        algebra: Option<PathBuf>,
        #[arg(long, requires = "algebra")]
        universe: Option<PathBuf>,
        #[arg(long)]
        data_dir: Option<PathBuf>,
    },
}

fn parse_seed(s: &str) -> Result<u64, String> {
    let parsed = match s.strip_prefix("0x").or_else(|| s.strip_prefix("0X")) {
        Some(hex) => u64::from_str_radix(hex, 16),
        None => s.parse(),
    };
    parsed.map_err(|e| format!("invalid seed `{s}`: {e}"))
}

fn run(cli: Cli) -> failure::Outcome {
    tiltglue::modcat::set_seed(cli.seed);
    let opts = AlgebraOptions {
        prime: cli.prime,
        length_cap: None,
    };
    match cli.command {
        Command::CheckAlgebra { file } => commands::check_algebra(&file, &opts),
        Command::Ext {
            algebra,
            m,
            n,
            max_degree,
        } => commands::ext(&algebra, &m, &n, max_degree, &opts),
        Command::CheckTilting { algebra, module, n } => {
            commands::check_tilting(&algebra, &module, n, false, &opts)
        }
        Command::CheckCotilting { algebra, module, n } => {
            commands::check_tilting(&algebra, &module, n, true, &opts)
        }
        Command::Cotorsion {
            algebra,
            universe,
            module,
            n,
            cotilting,
        } => commands::cotorsion(&algebra, &universe, &module, n, cotilting, &opts),
        Command::Recollement { setup } => commands::recollement(&setup, &opts),
        Command::GlueTilting { setup, inputs } => commands::glue(&setup, &inputs, false, &opts),
        Command::GlueCotilting { setup, inputs } => commands::glue(&setup, &inputs, true, &opts),
        Command::Reproduce { example, data_dir } => {
            commands::reproduce(&example, data_dir.as_deref(), &opts)
        }
        Command::VerifyUniverse {
            algebra,
            universe,
            data_dir,
        } => commands::verify_universe(
            algebra.as_deref(),
            universe.as_deref(),
            data_dir.as_deref(),
            &opts,
        ),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 3 } else { 0 });
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("{f}");
            ExitCode::from(f.exit_code() as u8)
        }
    }
}
