use thiserror::Error;

/// Errors raised by graph construction, parsing and the search routines.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("vertex {vertex} out of range for a graph of order {order}")]
    OutOfRange { vertex: usize, order: usize },

    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),

    #[error("graph has no vertices")]
    EmptyGraph,

    #[error("graph power exponent must be at least 1")]
    ZeroPower,

    #[error("input of size {size} exceeds the bound {bound} for this operation")]
    TooLarge { size: usize, bound: usize },

    #[error("ordering is not a permutation of the vertex set")]
    NotAPermutation,

    #[error("not an induced cycle of length at least 4: {0}")]
    NotAHole(String),

    /// A step that a theorem guarantees could not be carried out. Seeing
    /// this on valid input means the theorem is falsified.
    #[error("internal contradiction: {0}")]
    InternalContradiction(String),

    #[error("invalid witness: {0}")]
    InvalidWitness(String),

    #[error("bad character {ch:?} at byte {position}")]
    BadChar { position: usize, ch: char },

    #[error("input truncated: {0}")]
    Truncated(String),

    #[error("padding bits of the final character are not zero")]
    TrailingBitsNonzero,

    #[error("header announces {expected} edges but {found} were given")]
    CountMismatch { expected: usize, found: usize },

    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },

    #[error("{0}")]
    Io(String),
}

pub type Result<T> = std::result::Result<T, Error>;
