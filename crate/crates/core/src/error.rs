use crate::graph::Edge;
use crate::report::PathReport;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("line {line}: {msg}")]
    Format { line: usize, msg: String },

    #[error("invalid input: {0}")]
    InvalidInput(String),

    /// The interval subgraph has an odd cycle in its crossing-conflict graph,
    /// so its edges cannot be split into two non-crossing classes.
    #[error("interval [{lo}, {hi}] is not 2-non-crossing (odd conflict cycle of length {})", cycle.len())]
    NotTwoPartitionable { lo: usize, hi: usize, cycle: Vec<Edge> },

    #[error("every interval failed the two-partition test; the genus parameter is too small")]
    AllIntervalsFailed,

    #[error("degenerate surrounding: {reason}")]
    Degenerate {
        reason: String,
        partial: Box<PathReport>,
    },

    #[error("size guard: {0}")]
    SizeGuard(String),

    /// A checked invariant failed. Either the input violated a precondition
    /// that is too expensive to test up front, or there is a bug.
    #[error("invariant violated: {0}")]
    Invariant(String),
}

macro_rules! ensure {
    ($cond:expr, $($arg:tt)*) => {
        if !$cond {
            return Err($crate::error::Error::Invariant(format!($($arg)*)));
        }
    };
}
pub(crate) use ensure;
