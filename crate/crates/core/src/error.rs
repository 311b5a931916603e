use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("node {node} has a non-finite coordinate")]
    NonFinite { node: usize },
    #[error("{what} index {index} out of range 0..={max}")]
    IndexOutOfRange {
        what: &'static str,
        index: usize,
        max: usize,
    },
    #[error("reference point ({0}, {1}, {2}) lies outside [0,1]^3")]
    OutsideReference(f64, f64, f64),
    #[error("invalid configuration: {0}")]
    InvalidConfig(String),
    #[error("grid resolution must be at least 2, got {0}")]
    GridTooCoarse(usize),
    #[error("corner {corner} has a zero-length edge")]
    ZeroLengthEdge { corner: usize },
}

pub type Result<T> = std::result::Result<T, Error>;
