//! Increasing induced paths in ordered graphs whose edges split into few
//! non-crossing classes.
//!
//! Vertices are the positions `1..=n` of a fixed order. Most extractors
//! require the order to follow a Hamiltonian path, i.e. every consecutive
//! pair `(i, i + 1)` is an edge.

pub mod crossing;
pub mod error;
pub mod extract2;
pub mod extractk;
pub mod extremal;
pub mod format;
pub mod graph;
pub mod interval;
pub mod metrics;
pub mod noncross;
pub mod oracle;
pub mod path;
pub mod report;

pub use error::{Error, Result};
pub use graph::{Edge, OrderedGraph};
pub use interval::Interval;
pub use noncross::EdgeColoring;
pub use path::VertexPath;
pub use report::{Method, PathReport};
