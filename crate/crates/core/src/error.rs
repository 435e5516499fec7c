use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

/// Failure taxonomy shared by every module. Domain and parameter problems are
/// caller mistakes; convergence, instability and wall-clock failures are
/// runtime diagnostics that carry enough context to reproduce the run.
#[derive(Debug, Error)]
pub enum Error {
    #[error("domain: {0}")]
    Domain(String),

    #[error("parameter: {0}")]
    Parameter(String),

    #[error("pole: {0}")]
    Pole(String),

    #[error("{op}: no convergence within {limit} terms")]
    Convergence { op: &'static str, limit: usize },

    #[error("singularity: {0}")]
    Singularity(String),

    #[error("instability at t = {t}, cell {cell}: {what}")]
    Instability { t: f64, cell: usize, what: String },

    #[error("insufficient data: {0}")]
    InsufficientData(String),

    #[error("wall-clock budget of {budget_secs} s exceeded at t = {t}")]
    WallClock { budget_secs: f64, t: f64 },

    #[error("family {family} does not define {what}")]
    NotDefined {
        family: &'static str,
        what: &'static str,
    },
}
