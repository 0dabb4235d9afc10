use thiserror::Error;

use crate::betti::Violation;
use crate::dsl::ParseError;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error(transparent)]
    Parse(#[from] ParseError),

    #[error("invalid variety: {0}")]
    InvalidVariety(String),

    #[error("dimension mismatch: {left} vs {right}")]
    DimensionMismatch { left: usize, right: usize },

    #[error("Betti vector is not Lefschetz-admissible: {0}")]
    Inadmissible(Violation),

    #[error("zero-dimensional varieties have no Lyubeznik table here (r must be at least 1)")]
    ZeroDimension,

    #[error("invalid component graph: {0}")]
    Graph(String),

    /// A computed quantity contradicted an invariant that holds for every
    /// valid input. Always a bug.
    #[error("internal consistency failure: {0}")]
    Internal(String),
}

impl Error {
    pub fn is_internal(&self) -> bool {
        matches!(self, Error::Internal(_))
    }
}
