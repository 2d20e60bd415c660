use hw_digraph::DigraphError;
use thiserror::Error;

/// Failures of building-block constructions.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BlockError {
    /// A parameter violates the operation's precondition.
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    /// The requested object cannot exist (e.g. a divisibility condition fails).
    #[error("infeasible: {0}")]
    Infeasible(String),
    /// The object may exist but this implementation does not construct it.
    #[error("unsupported: {0}")]
    Unsupported(String),
    /// An input or output failed independent verification.
    #[error("verification failed: {0}")]
    Verification(String),
    /// A complete search found no solution.
    #[error("search exhausted: {0}")]
    Exhausted(String),
    /// A search ran out of budget; nothing is concluded.
    #[error("search budget exceeded: {0}")]
    BudgetExceeded(String),
    /// A cache file could not be read or written.
    #[error("cache error: {0}")]
    Cache(String),
    #[error(transparent)]
    Digraph(#[from] DigraphError),
}
