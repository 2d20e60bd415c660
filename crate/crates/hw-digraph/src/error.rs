use thiserror::Error;

use crate::Arc;

/// Errors raised while building digraphs and named structures.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DigraphError {
    #[error("invalid order {order}: {reason}")]
    InvalidOrder { order: u32, reason: &'static str },
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("arc ({}, {}) is a loop", .0.tail, .0.head)]
    Loop(Arc),
    #[error("arc ({}, {}) has an endpoint outside [0, {order})", .arc.tail, .arc.head)]
    OutOfRange { arc: Arc, order: u32 },
    #[error("duplicate arc ({}, {})", .0.tail, .0.head)]
    DuplicateArc(Arc),
}
