use thiserror::Error;

/// Errors raised by graph construction, the deciders and the claim harness.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("vertex {vertex} out of range for graph on {n} vertices")]
    OutOfRange { vertex: usize, n: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("duplicate edge {{{0}, {1}}}")]
    DuplicateEdge(usize, usize),
    #[error("graph has {0} vertices, more than the supported maximum")]
    VertexCount(usize),
    #[error("malformed graph6: {0}")]
    MalformedGraph6(String),
    #[error("invalid highlight: {0}")]
    InvalidHighlight(String),
    #[error("bad family spec: {0}")]
    BadSpec(String),
    #[error("unsupported witness: {0}")]
    UnsupportedWitness(String),
    #[error("permutation has length {perm}, graph has {n} vertices")]
    SizeMismatch { perm: usize, n: usize },
    #[error("graph has {n} vertices, cap is {cap}")]
    TooLarge { n: usize, cap: usize },
    #[error("graph has no vertices")]
    EmptyGraph,
    #[error("precondition violated: {0}")]
    PreconditionViolated(String),
    #[error("not a path: {0}")]
    NotAPath(String),
    #[error("not an induced path: {0}")]
    NotInducedPath(String),
    #[error("search budget of {0} nodes exhausted")]
    Indeterminate(u64),
    #[error("unknown claim: {0}")]
    UnknownClaim(String),
    #[error("bad parameters: {0}")]
    BadParams(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
