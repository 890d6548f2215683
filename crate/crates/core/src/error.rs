//! Error families of the engine. Each family maps to one process exit
//! code at the CLI boundary.

use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("level mismatch: {0}")]
    LevelMismatch(String),

    #[error("linear system has no solution")]
    NoSolution,

    #[error("splitting field failure: {0}")]
    SplittingFieldFailure(String),

    #[error("coherent system has a zero-mass vertex: {0}")]
    ZeroMassVertex(String),

    #[error("spectral coordinate is not real: {0}")]
    NonRealCoordinate(String),

    #[error("no eigenvalue coordinate available for edge {0}")]
    MissingEigenvalue(String),

    #[error("element violates centralizer assumption (a): {0}")]
    AssumptionAViolated(String),

    #[error("element violates constant-eigenvalue assumption (b): {0}")]
    AssumptionBViolated(String),

    #[error("structural invariant failed during construction: {0}")]
    InvariantFailure(String),

    #[error("invalid configuration: {0}")]
    Config(String),

    #[error("dimension ceiling exceeded: {0}")]
    DimensionCeiling(String),
}

impl Error {
    /// Process exit code family for the CLI: 2 configuration, 3 splitting
    /// field, 4 identity/invariant failure, 5 assumption violations.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Config(_) | Error::DimensionCeiling(_) => 2,
            Error::SplittingFieldFailure(_) => 3,
            Error::AssumptionAViolated(_) | Error::AssumptionBViolated(_) => 5,
            _ => 4,
        }
    }
}
