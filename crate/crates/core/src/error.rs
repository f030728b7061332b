use thiserror::Error;

/// Errors raised while building lattices or running the theorem checkers.
///
/// Element-carrying variants hold dense element indices of the lattice the
/// operation was called on.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("cover ({0}, {1}) references an element outside 0..{2}")]
    InvalidIndex(usize, usize, usize),
    #[error("duplicate label {0:?}")]
    DuplicateLabel(String),
    #[error("cover relation contains a cycle")]
    NotAcyclic,
    #[error("no unique bottom element")]
    NoUniqueBottom,
    #[error("no unique top element")]
    NoUniqueTop,
    #[error("elements {0} and {1} have no greatest lower bound")]
    MeetFails(usize, usize),
    #[error("elements {0} and {1} have no least upper bound")]
    JoinFails(usize, usize),
    #[error("cover ({0}, {1}) is implied by transitivity")]
    TransitiveCoverEdge(usize, usize),
    #[error("elements {0} and {1} are not comparable in the required order")]
    NotComparable(usize, usize),
    #[error("lattice is not graded")]
    NotGraded,
    #[error("lattice is not semimodular")]
    NotSemimodular,
    #[error("lattice is not geometric (atomic and semimodular)")]
    NotGeometric,
    #[error("element {0} is not left-modular")]
    NotLeftModular(usize),
    #[error("element {0} is not modular")]
    NotModular(usize),
    #[error("chain element {0} is not modular")]
    ChainNotModular(usize),
    #[error("tau_b is not rank-preserving for b = {0}")]
    RankPreservationFails(usize),
    #[error("hypothesis failed: {0}")]
    HypothesisFailed(String),
    #[error("fiber over {0} is empty")]
    EmptyFiber(usize),
    #[error("fiber over {0} has no unique maximum")]
    NoUniqueMax(usize),
    #[error("not a maximal chain from bottom to top")]
    NotMaximalChain,
    #[error("bounded-below test needs a nonempty atom set")]
    EmptyD,
    #[error("not an LL lattice: {0}")]
    NotLL(String),
    #[error("{family}({n}) exceeds the size cap {cap}")]
    TooLarge {
        family: &'static str,
        n: usize,
        cap: usize,
    },
    #[error("rank vector has {got} entries, lattice has {expected} elements")]
    RankLength { expected: usize, got: usize },
    #[error("rank of the bottom element must be 0")]
    RankBottomNonzero,
    #[error("invalid atom order: {0}")]
    InvalidAtomOrder(String),
    #[error("identity violated: {0}")]
    ContractViolation(String),
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
