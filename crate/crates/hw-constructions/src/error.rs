use hw_blocks::BlockError;
use hw_digraph::DigraphError;
use thiserror::Error;

use crate::BlockFamily;

/// Failures of the explicit constructions.
///
/// `Unsupported` only says that no construction is implemented for the
/// parameters; it never claims that a factorization does not exist.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ConstructionError {
    #[error("{family}: unsupported parameters (m={m}, r={r}): {reason}")]
    Unsupported { family: BlockFamily, m: u32, r: u32, reason: String },
    #[error("{family}: transcription fault (m={m}, r={r}): {report}")]
    Transcription { family: BlockFamily, m: u32, r: u32, report: String },
    #[error(transparent)]
    Block(#[from] BlockError),
    #[error(transparent)]
    Digraph(#[from] DigraphError),
}
