use thiserror::Error;

use crate::algebra::AlgebraError;
use crate::linalg::LinalgError;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error(transparent)]
    Linalg(#[from] LinalgError),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error("modules live over different algebras: {0} vs {1}")]
    AlgebraMismatch(String, String),
    #[error("invalid module: {0}")]
    InvalidModule(String),
    #[error("not a module homomorphism: {0}")]
    NotMorphism(String),
    #[error("field too small: p = {p} but dimension is {dim}")]
    FieldTooSmall { p: u64, dim: usize },
    #[error("could not split a decomposable module of dimension {0}")]
    DecompositionFailed(usize),
    #[error("not tilting: {0}")]
    NotTilting(String),
    #[error("approximation is not surjective: {0}")]
    NotSurjective(String),
    #[error("approximation is not injective: {0}")]
    NotInjective(String),
    #[error("cokernel of the approximation is not in the left class: {0}")]
    CokernelNotInU(String),
    #[error("kernel of the approximation is not in the right class: {0}")]
    KernelNotInV(String),
    #[error("universe inconsistent: {0}")]
    UniverseInconsistent(String),
    #[error("not triangular: {0}")]
    NotTriangular(String),
    #[error("exactness certificate missing: {0}")]
    ExactnessMissing(String),
    #[error("precondition failed: {0}")]
    PreconditionFailed(String),
    #[error("line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("unknown name `{0}`")]
    UnknownName(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
