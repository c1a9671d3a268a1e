use thiserror::Error;

/// Errors produced by parsing, construction, and the exact oracles.
#[derive(Debug, Error)]
pub enum Error {
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error("not connected")]
    NotConnected,

    #[error("graph has bridges: {0:?}")]
    Bridged(Vec<usize>),

    #[error("vertex {0} out of range")]
    VertexOutOfRange(usize),

    #[error("edge {0} out of range")]
    EdgeOutOfRange(usize),

    #[error("edge {0} is not a leg of the hull")]
    NotALeg(usize),

    #[error("bridge leg: no ear through edge {0}")]
    BridgeLeg(usize),

    #[error("too large for exact zeta: n = {n} exceeds cap {max_n}")]
    TooLargeForZeta { n: usize, max_n: usize },

    #[error(
        "too many edges for exhaustive search: m = {m} exceeds cap {max_edges}; use bounds instead"
    )]
    TooManyEdges { m: usize, max_edges: usize },

    #[error("too many colors for exact verification: {count} > {max}; use certificates")]
    TooManyColors { count: u32, max: u32 },

    #[error("color pool too small: need {need}, have {have}")]
    PoolTooSmall { need: usize, have: usize },

    #[error("committed color conflict on edge {edge}: committed {committed}, pattern {pattern}")]
    ColorConflict {
        edge: usize,
        committed: u32,
        pattern: u32,
    },

    #[error("orientation does not match graph: {0}")]
    OrientationMismatch(String),

    #[error("coloring does not match graph: {0}")]
    ColoringMismatch(String),

    #[error("trace does not match graph: {0}")]
    TraceMismatch(String),

    #[error("not a cycle: {0}")]
    NotACycle(String),

    #[error("invalid parameter: {0}")]
    InvalidParam(String),

    #[error("internal construction failure: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
