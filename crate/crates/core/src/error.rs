use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("generator index {index} out of range for rank {rank}")]
    IndexOutOfRange { index: usize, rank: usize },
    #[error("rank mismatch: {left} vs {right}")]
    RankMismatch { left: usize, right: usize },
    #[error("expected {expected} images, got {got}")]
    ArityMismatch { expected: usize, got: usize },
    #[error("invalid generator: {0}")]
    InvalidGenerator(String),
    #[error("element has no inverse witness")]
    MissingInverse,
    #[error("internal consistency failure: {0}")]
    Inconsistent(String),
    #[error("enumeration cap of {cap} exceeded")]
    CapExceeded { cap: usize },
    #[error("image word longer than {cap} letters")]
    WordLengthExceeded { cap: usize },
    #[error("{0} is not prime")]
    NotPrime(u32),
    #[error("invalid matrix: {0}")]
    InvalidMatrix(String),
    #[error("element is not in the group")]
    NotInGroup,
    #[error("invalid graph: {0}")]
    InvalidGraph(String),
    #[error("invalid symmetry: {0}")]
    InvalidSymmetry(String),
    #[error("invalid simplicial map: {0}")]
    InvalidMap(String),
    #[error("action is not regular; subdivide before extracting fixed sets")]
    NonRegularAction,
    #[error("precondition failed: {0}")]
    Precondition(String),
    #[error("invalid parameters: {0}")]
    InvalidParameters(String),
    #[error("unknown check id pattern: {0}")]
    UnknownCheck(String),
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
