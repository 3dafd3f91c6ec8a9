use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid input: {0}")]
    InvalidInput(String),
    #[error("quiver has an oriented cycle through vertex {0}")]
    OrientedCycle(u32),
    #[error("module {0} is not indecomposable")]
    Decomposable(String),
    #[error("endomorphism algebra is not split over the rationals: {0}")]
    NotSplit(String),
    #[error("idempotent splitting did not terminate for a module of dimension {0}")]
    DecompositionStalled(usize),
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("cap exceeded: {0}")]
    CapExceeded(String),
    /// A statement that should hold on the class of algebras in scope failed on an instance.
    #[error("falsification event: {0}")]
    Falsification(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
