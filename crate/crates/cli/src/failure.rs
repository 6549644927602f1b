use std::fmt;

use tiltglue::Error;

/// A CLI failure with its exit status and reason code.
#[derive(Debug)]
pub enum Failure {
    /// A computed result disagrees with what was expected.
    Mismatch(String),
    /// Bad flags or unreadable input.
    Config(String),
    Library(Error),
}

impl Failure {
    pub fn exit_code(&self) -> i32 {
        match self {
            Failure::Mismatch(_) => 2,
            Failure::Config(_) => 3,
            Failure::Library(e) => match e {
                Error::Parse { .. }
                | Error::UnknownName(_)
                | Error::Algebra(_)
                | Error::InvalidModule(_)
                | Error::NotMorphism(_) => 3,
                Error::NotTilting(_)
                | Error::NotSurjective(_)
                | Error::NotInjective(_)
                | Error::KernelNotInV(_)
                | Error::CokernelNotInU(_)
                | Error::UniverseInconsistent(_) => 2,
                Error::Linalg(_)
                | Error::AlgebraMismatch(..)
                | Error::FieldTooSmall { .. }
                | Error::DecompositionFailed(_)
                | Error::NotTriangular(_)
                | Error::ExactnessMissing(_)
                | Error::PreconditionFailed(_) => 4,
            },
        }
    }

    pub fn reason(&self) -> &'static str {
        match self {
            Failure::Mismatch(_) => "mismatch",
            Failure::Config(_) => "config",
            Failure::Library(e) => match e {
                Error::Parse { .. } => "parse",
                Error::UnknownName(_) => "unknown-name",
                Error::Algebra(_) => "algebra",
                Error::InvalidModule(_) => "invalid-module",
                Error::NotMorphism(_) => "not-morphism",
                Error::NotTilting(_) => "not-tilting",
                Error::NotSurjective(_) => "not-surjective",
                Error::NotInjective(_) => "not-injective",
                Error::KernelNotInV(_) => "kernel-not-in-v",
                Error::CokernelNotInU(_) => "cokernel-not-in-u",
                Error::UniverseInconsistent(_) => "universe-inconsistent",
                Error::Linalg(_) => "linalg",
                Error::AlgebraMismatch(..) => "algebra-mismatch",
                Error::FieldTooSmall { .. } => "field-too-small",
                Error::DecompositionFailed(_) => "decomposition-failed",
                Error::NotTriangular(_) => "not-triangular",
                Error::ExactnessMissing(_) => "exactness-missing",
                Error::PreconditionFailed(_) => "precondition",
            },
        }
    }
}

impl fmt::Display for Failure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Failure::Mismatch(m) | Failure::Config(m) => write!(f, "error[{}]: {m}", self.reason()),
            Failure::Library(e) => write!(f, "error[{}]: {e}", self.reason()),
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Library(e)
    }
}

pub type Outcome = Result<(), Failure>;
