use thiserror::Error;

use crate::poly::{Polynomial, VarId};

/// Errors raised by the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// A Gröbner computation hit its configured budget. This signals an input
    /// too large for desk-scale computation, not a mathematical failure.
    #[error("resource limit exceeded: {what} (limit {limit})")]
    ResourceLimit { what: &'static str, limit: u64 },

    #[error("no value assigned to variable {0}")]
    MissingAssignment(VarId),

    #[error("point does not lie on the variety: relation {relation} evaluates to {value}")]
    PointNotOnVariety { relation: String, value: String },

    #[error("headroom exceeded: result needs jet level {needed} but the ring has level {level}")]
    HeadroomExceeded { needed: u32, level: u32 },

    #[error("rank {rank} of the level-{level} rank matrix is not divisible by {}", level + 1)]
    DivisibilityViolation { rank: usize, level: u32 },

    #[error("no fixed point after {iterations} iterations (last iterate has dimension {})", last.len())]
    NotConverged {
        iterations: usize,
        last: Vec<Polynomial>,
    },

    #[error("missing weight for variable {0}")]
    MissingWeight(VarId),

    #[error("parse error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },

    #[error("invalid input: {0}")]
    InvalidInput(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
