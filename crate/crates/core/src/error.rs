use thiserror::Error;

/// Coarse classification used by front ends to pick exit codes.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ErrorKind {
    Validation,
    Solver,
    Invariant,
}

#[derive(Debug, Clone, Error, PartialEq)]
pub enum Error {
    #[error("invalid {field}: {message}")]
    Validation { field: &'static str, message: String },

    #[error("degenerate spectrum at order {k}: eigenvalues {index} and {} are {gap:e} apart", index + 1)]
    DegenerateSpectrum { k: usize, index: usize, gap: f64 },

    #[error("bisection failed to bracket {expected} eigenvalues (found {found})")]
    NonConvergence { expected: usize, found: usize },

    #[error("{solver} did not converge in {iterations} iterations")]
    Stalled { solver: &'static str, iterations: usize },

    #[error("brackets of chain elements {index} and {} still overlap at the finest tolerance", index + 1)]
    Inconclusive { index: usize },

    #[error("matrix entry {entry} at row {row} is not positive ({value:e})")]
    NonPositiveEntry { entry: &'static str, row: usize, value: f64 },

    #[error("zero {index} = {re:e}{im:+e}i lies off every ray (angular offset {offset:e})")]
    ClassificationFailure { index: usize, re: f64, im: f64, offset: f64 },

    #[error("gamma class parity |gamma| = {gamma_weight} does not match n = {n}")]
    Parity { n: usize, gamma_weight: usize },

    #[error("{0}")]
    Domain(String),

    #[error("invariant violated: {0}")]
    Invariant(String),
}

impl Error {
    pub fn kind(&self) -> ErrorKind {
        match self {
            Error::Validation { .. } | Error::Parity { .. } | Error::Domain(_) => ErrorKind::Validation,
            Error::DegenerateSpectrum { .. }
            | Error::NonConvergence { .. }
            | Error::Stalled { .. }
            | Error::Inconclusive { .. }
            | Error::NonPositiveEntry { .. } => ErrorKind::Solver,
            Error::ClassificationFailure { .. } | Error::Invariant(_) => ErrorKind::Invariant,
        }
    }

    pub(crate) fn validation(field: &'static str, message: impl Into<String>) -> Self {
        Error::Validation { field, message: message.into() }
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
