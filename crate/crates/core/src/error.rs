use thiserror::Error;

/// Errors raised by graph loading and by the algorithms.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("line {line}: {msg}")]
    Syntax { line: usize, msg: String },
    #[error("edge ({0}, {1}) has an endpoint out of range")]
    EndpointOutOfRange(usize, usize),
    #[error("duplicate edge ({0}, {1})")]
    DuplicateEdge(usize, usize),
    #[error("self-loop at vertex {0} in an undirected graph")]
    UndirectedSelfLoop(usize),
    #[error("vertex {vertex} has label {label}, outside the alphabet of size {sigma}")]
    LabelOutOfRange { vertex: usize, label: u32, sigma: u32 },
    #[error("vertex {0} out of range")]
    VertexOutOfRange(usize),
    #[error("no edge from {0} to {1}")]
    NotAdjacent(usize, usize),
    #[error("walks must contain at least one vertex")]
    EmptyWalk,
    #[error("pattern must be non-empty")]
    EmptyPattern,
    #[error("expected a directed graph")]
    ExpectedDirected,
    #[error("expected an undirected graph")]
    ExpectedUndirected,
    #[error("graph has a cycle through edge ({0}, {1})")]
    Cycle(usize, usize),
    #[error("walks have different lengths ({0} and {1} vertices)")]
    LengthMismatch(usize, usize),
    #[error("walks spell different strings")]
    SpellingMismatch,
    #[error("vertex {0} has two out-neighbors with the same label")]
    NonDeterministic(usize),
    #[error("product graph is not the self-product of the given graph")]
    NotSelfProduct,
    #[error("graph is not an undirected path")]
    NotAPath,
    #[error("graph is not an undirected tree")]
    NotATree,
    #[error("vector {0} of A is a duplicate")]
    DuplicateVector(usize),
    #[error("invalid orthogonal-vectors instance: {0}")]
    InvalidInstance(String),
    #[error("a finite answer has no family to expand")]
    FiniteAnswer,
    #[error("repetition count must be at least 1")]
    ZeroRepetitions,
    #[error("brute-force budget of {0} steps exceeded")]
    BudgetExceeded(u64),
}

impl Error {
    /// True for errors caused by malformed input text rather than by the
    /// structure of a well-formed input.
    pub fn is_parse_error(&self) -> bool {
        matches!(
            self,
            Error::Syntax { .. }
                | Error::EndpointOutOfRange(..)
                | Error::DuplicateEdge(..)
                | Error::UndirectedSelfLoop(_)
                | Error::LabelOutOfRange { .. }
        )
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
