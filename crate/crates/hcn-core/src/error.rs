use thiserror::Error;

/// Errors raised by constructors, structural queries, and the search engines.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Dimension n = 0 is rejected everywhere; the networks are defined for n >= 1.
    #[error("dimension must be at least 1")]
    DimensionZero,

    #[error("dimension {n} exceeds the supported maximum {max}")]
    DimensionTooLarge { n: u32, max: u32 },

    #[error("dimension {n} below the required minimum {min}")]
    DimensionTooSmall { n: u32, min: u32 },

    #[error("words have different lengths ({a} vs {b})")]
    WordLengthMismatch { a: u32, b: u32 },

    #[error("invalid binary word: {text:?}")]
    InvalidWord { text: String },

    /// Crossing-edge queries need two distinct blocks.
    #[error("both words name the same block; crossing edges join distinct blocks")]
    SameBlock,

    #[error("coordinate {i} out of range 1..={n}")]
    CoordinateOutOfRange { i: u32, n: u32 },

    #[error("h = {h} outside the valid range {lo}..={hi}")]
    HOutOfRange { h: u32, lo: u32, hi: u32 },

    #[error("vertex index {index} out of range for a graph with {count} vertices")]
    VertexOutOfRange { index: u32, count: usize },

    #[error("edge ({u}, {v}) is not an edge of the graph")]
    EdgeNotInGraph { u: u32, v: u32 },

    #[error("self-loops are not allowed ({v}, {v})")]
    SelfLoop { v: u32 },

    #[error("duplicate edge ({u}, {v})")]
    DuplicateEdge { u: u32, v: u32 },

    #[error("operation requires a connected graph")]
    Disconnected,

    #[error("operation requires at least {min} vertices")]
    TooFewVertices { min: usize },

    /// Exhaustive checkers refuse dimensions beyond their sweep range.
    #[error("n = {n} exceeds the exhaustive range (max {max})")]
    ExhaustiveRangeExceeded { n: u32, max: u32 },
}

pub type Result<T> = std::result::Result<T, Error>;
