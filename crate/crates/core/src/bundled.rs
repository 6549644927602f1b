//! The triangular example shipped with the crate: `Λ` on vertices 1..5,
//! `Λ'` on {1, 2}, `Λ''` on {3, 4, 5}, their universes of indecomposables
//! and the four input modules.

use std::path::Path as FsPath;
use std::sync::Arc;

use crate::algebra::BoundQuiverAlgebra;
use crate::error::{Error, Result};
use crate::format::{
    load_algebra, load_module, load_universe, parse_algebra, parse_manifest, parse_module,
    AlgebraOptions,
};
use crate::modcat::{QModule, Universe};

macro_rules! files {
    ($($p:literal),* $(,)?) => {
        &[$(($p, include_str!(concat!("../data/", $p)))),*]
    };
}

static FILES: &[(&str, &str)] = files![
    "lambda.alg",
    "lambda_prime.alg",
    "lambda_dprime.alg",
    "lambda.universe",
    "lambda_prime.universe",
    "lambda_dprime.universe",
    "lambda/0_p5.mod",
    "lambda/s2_0.mod",
    "lambda/s2_p4.mod",
    "lambda/p1_0.mod",
    "lambda/s2_s4.mod",
    "lambda/p1_p4.mod",
    "lambda/0_p4.mod",
    "lambda/p1_s4.mod",
    "lambda/s1_0.mod",
    "lambda/p1_p3.mod",
    "lambda/0_s4.mod",
    "lambda/s1_p3.mod",
    "lambda/s1_s3.mod",
    "lambda/0_p3.mod",
    "lambda/0_s3.mod",
    "lambda_prime/p1.mod",
    "lambda_prime/s1.mod",
    "lambda_prime/s2.mod",
    "lambda_dprime/p3.mod",
    "lambda_dprime/p4.mod",
    "lambda_dprime/p5.mod",
    "lambda_dprime/s3.mod",
    "lambda_dprime/s4.mod",
    "inputs/cotilting_t1.mod",
    "inputs/cotilting_t3.mod",
    "inputs/tilting_t1.mod",
    "inputs/tilting_t3.mod",
];

/// Contents of a bundled data file, by path relative to the data directory.
pub fn file(path: &str) -> Option<&'static str> {
    FILES.iter().find(|(p, _)| *p == path).map(|(_, t)| *t)
}

pub fn file_names() -> impl Iterator<Item = &'static str> {
    FILES.iter().map(|(p, _)| *p)
}

fn bundled(path: &str) -> Result<&'static str> {
    file(path).ok_or_else(|| Error::UnknownName(path.to_string()))
}

/// The bundled example: algebras, universes and inputs.
#[derive(Clone, Debug)]
pub struct ExampleData {
    pub lambda: Arc<BoundQuiverAlgebra>,
    pub lambda_prime: Arc<BoundQuiverAlgebra>,
    pub lambda_dprime: Arc<BoundQuiverAlgebra>,
    pub universe: Universe,
    pub universe_prime: Universe,
    pub universe_dprime: Universe,
    /// `P(1) ⊕ S(1)` over `Λ'`.
    pub cotilting_t1: QModule,
    /// `P(3) ⊕ P(4) ⊕ P(5)` over `Λ''`.
    pub cotilting_t3: QModule,
    /// `P(1) ⊕ S(2)` over `Λ'`.
    pub tilting_t1: QModule,
    /// `P(3) ⊕ P(4) ⊕ S(3)` over `Λ''`.
    pub tilting_t3: QModule,
}

fn universe_from_bundle(manifest: &str, a: &Arc<BoundQuiverAlgebra>) -> Result<Universe> {
    let mut members = Vec::new();
    for (name, path) in parse_manifest(bundled(manifest)?)? {
        let (_, m) = parse_module(bundled(&path)?, a)?;
        members.push((name, m));
    }
    Universe::new(a.clone(), members)
}

impl ExampleData {
    /// Built from the files compiled into the crate, over `F_p`.
    pub fn load(prime: Option<u64>) -> Result<Self> {
        let opts = AlgebraOptions {
            prime,
            length_cap: None,
        };
        let lambda = parse_algebra(bundled("lambda.alg")?, "lambda", &opts)?;
        let lambda_prime = parse_algebra(bundled("lambda_prime.alg")?, "lambda_prime", &opts)?;
        let lambda_dprime = parse_algebra(bundled("lambda_dprime.alg")?, "lambda_dprime", &opts)?;
        let input = |p: &str, a: &Arc<BoundQuiverAlgebra>| -> Result<QModule> {
            Ok(parse_module(bundled(p)?, a)?.1)
        };
        Ok(ExampleData {
            universe: universe_from_bundle("lambda.universe", &lambda)?,
            universe_prime: universe_from_bundle("lambda_prime.universe", &lambda_prime)?,
            universe_dprime: universe_from_bundle("lambda_dprime.universe", &lambda_dprime)?,
            cotilting_t1: input("inputs/cotilting_t1.mod", &lambda_prime)?,
            cotilting_t3: input("inputs/cotilting_t3.mod", &lambda_dprime)?,
            tilting_t1: input("inputs/tilting_t1.mod", &lambda_prime)?,
            tilting_t3: input("inputs/tilting_t3.mod", &lambda_dprime)?,
            lambda,
            lambda_prime,
            lambda_dprime,
        })
    }

    /// The same layout read from a directory on disk.
    pub fn load_dir(dir: &FsPath, prime: Option<u64>) -> Result<Self> {
        let opts = AlgebraOptions {
            prime,
            length_cap: None,
        };
        let lambda = load_algebra(&dir.join("lambda.alg"), &opts)?;
        let lambda_prime = load_algebra(&dir.join("lambda_prime.alg"), &opts)?;
        let lambda_dprime = load_algebra(&dir.join("lambda_dprime.alg"), &opts)?;
        let input = |p: &str, a: &Arc<BoundQuiverAlgebra>| -> Result<QModule> {
            Ok(load_module(&dir.join(p), a)?.1)
        };
        Ok(ExampleData {
            universe: load_universe(&dir.join("lambda.universe"), &lambda)?,
            universe_prime: load_universe(&dir.join("lambda_prime.universe"), &lambda_prime)?,
            universe_dprime: load_universe(&dir.join("lambda_dprime.universe"), &lambda_dprime)?,
            cotilting_t1: input("inputs/cotilting_t1.mod", &lambda_prime)?,
            cotilting_t3: input("inputs/cotilting_t3.mod", &lambda_dprime)?,
            tilting_t1: input("inputs/tilting_t1.mod", &lambda_prime)?,
            tilting_t3: input("inputs/tilting_t3.mod", &lambda_dprime)?,
            lambda,
            lambda_prime,
            lambda_dprime,
        })
    }

    /// Write the bundled files into `dir`, creating subdirectories.
    pub fn write_to(dir: &FsPath) -> std::io::Result<()> {
        for (p, t) in FILES {
            let target = dir.join(p);
            if let Some(parent) = target.parent() {
                std::fs::create_dir_all(parent)?;
            }
            std::fs::write(target, t)?;
        }
        Ok(())
    }
}
