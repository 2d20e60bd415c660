use hw_blocks::BlockError;
use hw_constructions::ConstructionError;
use hw_digraph::{DigraphError, ParamRequest};

use crate::Verdict;

#[derive(Debug, thiserror::Error)]
pub enum ComposerError {
    /// The request is not classified as solvable; nothing was attempted.
    #[error("{request} is not solvable: {verdict}")]
    NotSolvable { request: ParamRequest, verdict: Verdict },
    /// Every layout was tried and the search-backed ones ran out of budget.
    #[error("no construction for {request} within the search budget; attempted: {}", attempted.join("; "))]
    BudgetExceeded { request: ParamRequest, attempted: Vec<String> },
    /// The request is solvable but no layout covers it: an internal gap.
    #[error("composer fault: {0}")]
    Fault(String),
    /// An assembled certificate failed independent verification.
    #[error("assembled factorization failed verification: {0}")]
    Verification(String),
    #[error(transparent)]
    Construction(#[from] ConstructionError),
    #[error(transparent)]
    Block(#[from] BlockError),
    #[error(transparent)]
    Digraph(#[from] DigraphError),
}
