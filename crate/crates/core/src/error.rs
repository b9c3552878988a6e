use thiserror::Error;

use crate::lattice::{Cell, Vertex};

pub type Result<T, E = Error> = std::result::Result<T, E>;

/// Why a region admits no tiling.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum UntileableReason {
    /// The boundary walk does not close; `net` is the total height change
    /// accumulated around the boundary.
    BoundaryMismatch { net: i64 },
    /// Relaxation pushed a boundary vertex off its forced value.
    BoundaryViolated {
        vertex: Vertex,
        fixed: i64,
        relaxed: i64,
    },
    /// The difference-constraint system of a general patch has a negative cycle.
    Inconsistent,
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("parse error at line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },

    #[error("malformed region: {0}")]
    Malformed(String),

    #[error("region is empty")]
    EmptyRegion,

    #[error("region mixes square and triangular cells (at {0})")]
    MixedLattice(Cell),

    #[error("duplicate cell {0}")]
    DuplicateCell(Cell),

    #[error("region is disconnected: {0} is not reachable from the first cell")]
    Disconnected(Cell),

    #[error("region is not simply connected: hole at {0}")]
    NotSimplyConnected(Cell),

    #[error("region is not simply connected: boundary touches itself at {0}")]
    BoundaryPinch(Vertex),

    #[error("boundary height walk does not close (net change {net})")]
    BoundaryMismatch { net: i64 },

    #[error("region is not tileable: {0:?}")]
    Untileable(UntileableReason),

    #[error("no extension exists: h({y}) - h({x}) = {diff} exceeds alpha = {alpha}")]
    NoExtension {
        x: Vertex,
        y: Vertex,
        diff: i64,
        alpha: i64,
    },

    #[error("invalid height function: {0}")]
    InvalidHeight(String),

    #[error("enumeration overflow: more than {limit} tilings")]
    Overflow { limit: u64 },

    #[error("size guard exceeded: {what} is {actual}, limit {limit}")]
    GuardExceeded {
        what: &'static str,
        actual: usize,
        limit: usize,
    },

    #[error("unsupported render target: {0}")]
    UnsupportedTarget(String),

    #[error("i/o error: {0}")]
    Io(String),
}

impl Error {
    /// Process exit code used by the command-line front end.
    ///
    /// `1` is reserved for mathematically negative answers, `2` for bad input
    /// and `3` for tripped size guards.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::BoundaryMismatch { .. } | Error::Untileable(_) | Error::NoExtension { .. } => 1,
            Error::Overflow { .. } | Error::GuardExceeded { .. } => 3,
            _ => 2,
        }
    }

    pub fn is_untileable(&self) -> bool {
        matches!(self, Error::BoundaryMismatch { .. } | Error::Untileable(_))
    }
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}
