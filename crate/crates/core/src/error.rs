use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("quiver has an oriented cycle through vertex {0}")]
    CyclicQuiver(usize),
    #[error("arrow endpoint {index} out of range 1..={vertices}")]
    BadIndex { index: usize, vertices: usize },
    #[error("quiver is representation-infinite; finite enumeration is unavailable")]
    RepInfinite,
    #[error("module is not indecomposable")]
    NotIndecomposable,
    #[error("module is projective")]
    IsProjective,
    #[error("minimal approximation is neither mono nor epi")]
    ApproximationNeitherMonoNorEpi,
    #[error("no mono or epi witness found in a nonzero Hom space")]
    DecorationUndecidable,
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error("orbit normalization did not terminate within {0} steps")]
    NonTermination(usize),
    #[error("internal inconsistency: {0}")]
    InternalInconsistency(String),
    #[error("invariant {clause} violated: {detail}")]
    InvariantViolation { clause: String, detail: String },
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("parse error: {0}")]
    Parse(String),
}

impl Error {
    /// Errors that can only arise from a bug or a falsified mathematical claim.
    pub fn is_falsification(&self) -> bool {
        matches!(
            self,
            Error::InternalInconsistency(_)
                | Error::InvariantViolation { .. }
                | Error::ApproximationNeitherMonoNorEpi
                | Error::DecorationUndecidable
                | Error::NonTermination(_)
        )
    }

    pub(crate) fn inconsistent(msg: impl Into<String>) -> Self {
        Error::InternalInconsistency(msg.into())
    }
}
