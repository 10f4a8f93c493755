use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid size: {0}")]
    InvalidSize(String),

    #[error("degenerate family: {0}")]
    DegenerateFamily(String),

    #[error("invalid graph: {0}")]
    InvalidGraph(String),

    #[error("invalid subset: {0}")]
    InvalidSubset(String),

    #[error("too large: {0}")]
    TooLarge(String),

    #[error("operation is undefined on an empty reconfiguration graph")]
    EmptyGraph,

    #[error("node id {id} out of range for a graph of order {order}")]
    InvalidNode { id: usize, order: usize },

    #[error("invalid generating function: {0}")]
    InvalidGf(String),

    #[error("precision failure: {0}")]
    PrecisionFailure(String),

    #[error("formula violation: {0}")]
    FormulaViolation(String),
}
