use thiserror::Error;

use crate::semigroup::Violation;

/// Errors raised by graph construction, the semigroup operations and the
/// decomposition machinery.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("line {line}: {message}")]
    Format { line: usize, message: String },

    #[error("duplicate edge id `{0}`")]
    DuplicateEdge(String),

    #[error("unknown edge `{0}`")]
    UnknownEdge(String),

    #[error("unknown vertex `{0}`")]
    UnknownVertex(String),

    #[error("edge `{0}` is not a cycle edge at this step of the cut")]
    InvalidCut(String),

    #[error("vertex `{0}` cannot be split: valency must be at least 4")]
    NotSplittable(String),

    #[error("split side must name two distinct edge slots at `{0}`")]
    InvalidSide(String),

    #[error("vertex `{0}` carries a lone loop; suppressing it leaves a free cycle")]
    DegenerateCycle(String),

    #[error("edge `{0}` has a nonzero label")]
    NonzeroEdge(String),

    #[error("domain error: {0}")]
    Domain(String),

    #[error("vertex `{0}` is not trivalent")]
    UnsupportedVertex(String),

    #[error("unsupported graph: {0}")]
    UnsupportedGraph(String),

    #[error("labelling has {found} entries but the graph has {expected} edges")]
    LabelCount { expected: usize, found: usize },

    #[error("not a member: {0}")]
    NotMember(Violation),

    #[error("degree {degree} does not exceed betti + 1 = {bound}; no split is guaranteed")]
    NoGuarantee { degree: u32, bound: u32 },

    #[error("invalid swap: {0}")]
    InvalidSwap(String),

    #[error("precondition failed: {0}")]
    Precondition(String),

    #[error("internal invariant broken: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
