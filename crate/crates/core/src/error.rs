use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MapError {
    #[error("invalid map: {}", .0.join("; "))]
    Invalid(Vec<String>),
    #[error("could not parse map record: {0}")]
    Parse(String),
    #[error("dart {0} is not a root-block dart")]
    NotRootBlockDart(usize),
    #[error("degree/block mismatch at node {node}: outdegree {outdegree} but block has {block_edges} edges")]
    DegreeMismatch { node: usize, outdegree: usize, block_edges: usize },
    #[error("block at node {0} is not 2-connected")]
    NotTwoConnected(usize),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CountError {
    #[error("increase K: tail bounds are not certified from K = {0}")]
    IncreaseK(usize),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SampleError {
    #[error("offspring table needs cap >= 1")]
    EmptyTable,
    #[error("n must be at least 1")]
    ZeroSize,
    #[error("degree sequence of length {len} with sum {sum} is not a valid {n}-edge sequence")]
    BadSequence { n: usize, len: usize, sum: usize },
    #[error("sequence is not a Lukasiewicz path")]
    NotLukasiewicz,
    #[error("block enumeration cap exceeded: n = {n} > {cap}")]
    CapExceeded { n: usize, cap: usize },
    #[error("counts must be positive")]
    ZeroCount,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error("n = {n} above the enumeration cap {cap}")]
    AboveCap { n: usize, cap: usize },
    #[error("odd outdegree {0}")]
    OddOutdegree(usize),
}
