use std::path::{Path, PathBuf};
use std::sync::Arc;

use clap::Args;
use tiltglue::algebra::BoundQuiverAlgebra;
use tiltglue::bundled::ExampleData;
use tiltglue::format::{load_algebra, load_module, load_universe, AlgebraOptions};
use tiltglue::glue::Universes;
use tiltglue::modcat::QModule;
use tiltglue::recollement::Recollement;
use tiltglue::Error;

use crate::failure::Failure;

/// Where the recollement and its universes come from. Without `--total`
/// the bundled example (or a copy of it under `--data-dir`) is used.
#[derive(Args, Debug, Clone)]
pub struct SetupArgs {
    /// Directory laid out like the bundled example data
    #[arg(long, conflicts_with = "total")]
    pub data_dir: Option<PathBuf>,
    /// Algebra file of the total algebra
    #[arg(long, requires_all = ["sub", "quot", "a_side", "universe", "universe_sub", "universe_quot"])]
    pub total: Option<PathBuf>,
    /// Algebra file of the sub side, on the vertices given by --a-side
    #[arg(long)]
    pub sub: Option<PathBuf>,
    /// Algebra file of the quotient side, on the remaining vertices
    #[arg(long)]
    pub quot: Option<PathBuf>,
    /// Comma-separated vertex names of the sub side
    #[arg(long, value_delimiter = ',')]
    pub a_side: Vec<String>,
    /// Universe manifest over the total algebra
    #[arg(long)]
    pub universe: Option<PathBuf>,
    /// Universe manifest over the sub side
    #[arg(long)]
    pub universe_sub: Option<PathBuf>,
    /// Universe manifest over the quotient side
    #[arg(long)]
    pub universe_quot: Option<PathBuf>,
}

pub struct Setup {
    pub r: Recollement,
    pub universes: Universes,
    pub example: Option<ExampleData>,
}

pub fn example_data(dir: Option<&Path>, prime: Option<u64>) -> Result<ExampleData, Failure> {
    Ok(match dir {
        Some(d) => ExampleData::load_dir(d, prime)?,
        None => ExampleData::load(prime)?,
    })
}

pub fn from_example(d: ExampleData) -> Result<Setup, Failure> {
    let r = Recollement::with_algebras(&d.lambda, &[0, 1], &d.lambda_prime, &d.lambda_dprime)?;
    let universes = Universes {
        a: d.universe_prime.clone(),
        total: d.universe.clone(),
        c: d.universe_dprime.clone(),
    };
    Ok(Setup {
        r,
        universes,
        example: Some(d),
    })
}

fn required<'a>(p: &'a Option<PathBuf>, flag: &str) -> Result<&'a Path, Failure> {
    p.as_deref()
        .ok_or_else(|| Failure::Config(format!("{flag} is required with --total")))
}

pub fn load(args: &SetupArgs, opts: &AlgebraOptions) -> Result<Setup, Failure> {
    let Some(total) = &args.total else {
        return from_example(example_data(args.data_dir.as_deref(), opts.prime)?);
    };
    let lambda = load_algebra(total, opts)?;
    let sub = load_algebra(required(&args.sub, "--sub")?, opts)?;
    let quot = load_algebra(required(&args.quot, "--quot")?, opts)?;
    let a_side = args
        .a_side
        .iter()
        .map(|v| {
            lambda
                .quiver()
                .vertex_index(v)
                .ok_or_else(|| Error::UnknownName(v.clone()))
        })
        .collect::<Result<Vec<_>, _>>()?;
    let r = Recollement::with_algebras(&lambda, &a_side, &sub, &quot)?;
    let universes = Universes {
        a: load_universe(required(&args.universe_sub, "--universe-sub")?, &sub)?,
        total: load_universe(required(&args.universe, "--universe")?, &lambda)?,
        c: load_universe(required(&args.universe_quot, "--universe-quot")?, &quot)?,
    };
    Ok(Setup {
        r,
        universes,
        example: None,
    })
}

/// A module file if given, else the bundled input picked by `pick`.
pub fn input(
    path: &Option<PathBuf>,
    algebra: &Arc<BoundQuiverAlgebra>,
    example: &Option<ExampleData>,
    pick: fn(&ExampleData) -> &QModule,
    flag: &str,
) -> Result<QModule, Failure> {
    match (path, example) {
        (Some(p), _) => Ok(load_module(p, algebra)?.1),
        (None, Some(d)) => Ok(pick(d).clone()),
        (None, None) => Err(Failure::Config(format!("{flag} is required with --total"))),
    }
}
