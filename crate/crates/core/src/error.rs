//! Crate-wide error type.

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("not a lattice: {0}")]
    NotALattice(String),
    #[error("cover relation is not reduced: {0} < {1} is implied transitively")]
    NotReduced(u32, u32),
    #[error("bad embedding order lists: {0}")]
    BadOrder(String),
    #[error("no unique top/bottom element")]
    MultipleExtremes,
    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("lattice is not slim: {0}")]
    NotSlim(String),
    #[error("subset is not a sublattice: {0}")]
    NotSublattice(String),
    #[error("equivalence classes are not intervals")]
    NotIntervalClasses,
    #[error("too large: {0}")]
    TooLarge(String),
    #[error("not a covering square")]
    NotCoveringSquare,
    #[error("lattice is not slim planar semimodular: {0}")]
    NotSps(String),
    #[error("precondition violated: {0}")]
    PreconditionViolated(String),
    #[error("square is not tight")]
    NotTight,
    #[error("square is not wide")]
    NotWide,
    #[error("square has no protrusion")]
    NoProtrusion,
    #[error("square has a protrusion")]
    HasProtrusion,
    #[error("gamma iteration exceeded its stage bound")]
    NonTermination,
    #[error("planar embedding inconsistent: {0}")]
    EmbeddingInconsistent(String),
    #[error("unknown lattice name: {0}")]
    UnknownName(String),
    #[error("internal invariant broken: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
