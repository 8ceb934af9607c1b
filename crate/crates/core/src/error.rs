use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid packing sequence: {0}")]
    InvalidSequence(String),

    #[error("invalid sequence family: {0}")]
    InvalidFamily(String),

    #[error("sequence must start with s_1 = 1 (got s_1 = {0})")]
    FirstEntryNotOne(u32),

    #[error("halving produces a zero entry at index {0}")]
    HalvingYieldsZero(usize),

    #[error("invalid graph: {0}")]
    InvalidGraph(String),

    #[error("coloring has {got} vertices, graph has {expected}")]
    LengthMismatch { expected: usize, got: usize },

    #[error("color {color} at vertex {vertex} is outside 1..={k}")]
    ColorOutOfRange { vertex: usize, color: u32, k: u32 },

    #[error("invalid coloring literal: {0}")]
    InvalidColoring(String),

    #[error("brute-force oracle is limited to order {limit}, got {n}")]
    OracleSizeExceeded { n: usize, limit: usize },

    #[error("no coloring with at most {0} colors")]
    ColorBudgetExhausted(u32),

    #[error("invalid pattern: {0}")]
    InvalidPattern(String),

    #[error("exponent {got} is below the block minimum {min}")]
    ExponentBelowMinimum { got: u32, min: u32 },

    #[error("no clause of the critical-path characterization applies to {0}")]
    CriticalPathInapplicable(String),

    #[error("family {0} is not covered by any characterization")]
    FamilyNotCovered(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
