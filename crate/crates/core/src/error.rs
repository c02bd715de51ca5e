use alloc::string::String;

use crate::forest::VertexAddr;

pub type Result<T, E = Error> = core::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("arity must be at least 1")]
    ZeroArity,
    #[error("invalid outdegree profile: {0}")]
    InvalidProfile(&'static str),
    #[error("alpha ({alpha}) must be at least gamma ({gamma})")]
    AlphaBelowGamma { alpha: usize, gamma: usize },
    #[error("gamma must be at least 1 for planted forests")]
    NoComponents,
    #[error("refusing to enumerate about {estimate} structures (limit {limit})")]
    TooManyStructures { estimate: u128, limit: u64 },
    #[error("syntax error at byte {pos}: {msg}")]
    Syntax { pos: usize, msg: &'static str },
    #[error("series has nonzero constant term")]
    NonzeroConstantTerm,
    #[error("series is not a unit (zero constant term)")]
    NotUnit,
    #[error("coefficient {index} requested from a series of order {order}")]
    OrderExceeded { index: usize, order: usize },
    #[error("riordan array needs g(0) != 0, f(0) = 0 and [x^1]f != 0")]
    InvalidRiordan,
    #[error("structure is exceptional; the involution is undefined on it")]
    Exceptional,
    #[error("vertex {addr} has outdegree {outdegree}, not in the profile")]
    OutdegreeNotInProfile { addr: VertexAddr, outdegree: usize },
    #[error("color {0} is outside the palette")]
    ColorOutOfRange(u8),
    #[error("singular parameter: {0}")]
    Singular(String),
    #[error("invalid grid: {0}")]
    InvalidGrid(String),
}
