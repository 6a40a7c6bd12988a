use thiserror::Error;

/// Errors raised by complex construction, map checks and the search engines.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("a complex needs at least one nonempty facet")]
    EmptyComplex,

    #[error("malformed vertex label {0:?}")]
    MalformedLabel(String),

    #[error("unknown vertex {0:?}")]
    UnknownVertex(String),

    #[error("vertex {0:?} cannot dominate itself")]
    SelfDomination(String),

    #[error("map is not total: vertex {0:?} has no image")]
    IncompleteMap(String),

    #[error("map is not simplicial")]
    NotSimplicial,

    #[error("maps do not share source and target")]
    MapMismatch,

    #[error("maps are not directly contiguous")]
    NotContiguous,

    #[error("not a subcomplex: {0}")]
    NotSubcomplex(String),

    #[error("invalid contiguity chain: {0}")]
    InvalidChain(String),

    #[error("invalid cover: {0}")]
    InvalidCover(String),

    #[error("budget must be at least 1")]
    ZeroBudget,

    #[error("complex has {found} vertices or facets; this search supports at most {limit}")]
    TooLarge { found: usize, limit: usize },

    #[error("complex is not a graph (dimension {0})")]
    NotAGraph(usize),

    #[error("complex is disconnected")]
    Disconnected,

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
