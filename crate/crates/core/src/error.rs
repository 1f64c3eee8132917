use crate::element::SubgroupTag;

/// Errors produced by the group arithmetic layer.
///
/// Domain errors (bad indices, membership failures) are recoverable and are
/// surfaced to the CLI as such; `Budget` signals that the braid equality
/// oracle exceeded its free-word length budget; `Internal` signals a broken
/// invariant and is always a bug.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("invalid tree encoding `{0}`")]
    InvalidTree(String),
    #[error("leaf index {index} out of range 1..={count}")]
    LeafIndex { index: usize, count: usize },
    #[error("leaves {index} and {next} are not siblings", next = index + 1)]
    NotSiblings { index: usize },
    #[error("strand index {index} out of range 1..={count}")]
    StrandIndex { index: usize, count: usize },
    #[error("strand counts differ: {left} vs {right}")]
    StrandMismatch { left: usize, right: usize },
    #[error("cannot delete a strand from a one-strand braid")]
    SingleStrand,
    #[error("generator index {index} invalid for {count} strands")]
    GeneratorIndex { index: usize, count: usize },
    #[error("free-word budget of {budget} letters exceeded")]
    Budget { budget: usize },
    #[error("arity mismatch: {0}")]
    Arity(String),
    #[error("element is not in {0}")]
    NotIn(SubgroupTag),
    #[error("element is not in the psi-conjugate of bVhat")]
    NotInPsiConjugate,
    #[error("unknown suite `{0}`")]
    UnknownSuite(String),
    #[error("unknown named element `{0}`")]
    UnknownNamed(String),
    #[error("unknown subgroup tag `{0}`")]
    UnknownTag(String),
    #[error("internal error: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
