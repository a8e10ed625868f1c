use serde::Serialize;

use crate::error::{ensure, Result};
use crate::graph::OrderedGraph;
use crate::path::{verify_induced_increasing, VertexPath};

/// Which route produced the reported path.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Method {
    /// Path branch of a gap lemma.
    GapShortcut,
    /// Flank path of the good-triple loop.
    TripleLoop,
    /// Shortest increasing path between the extremities.
    Lifting,
    /// Root-to-leaf path of a surrounding tree.
    TreeGrowth,
    Oracle,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Branch {
    /// The left vertex had a large gap.
    GapU,
    /// The right vertex had a large gap.
    GapV,
    Path,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TraceStep {
    pub step: usize,
    pub interval_len: usize,
    pub g: usize,
    pub branch: Branch,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SurroundingStep {
    pub step: usize,
    pub interval_len: usize,
    pub g: usize,
    pub tree_sizes: Vec<usize>,
    pub case: &'static str,
}

/// An extracted increasing induced path with its certificate data.
///
/// Construct with [`PathReport::verified`], which refuses paths that are not
/// increasing induced paths of the host or that fall short of the guarantee.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct PathReport {
    pub n: usize,
    pub method: Method,
    pub path: VertexPath,
    pub length: usize,
    pub guarantee: usize,
    pub iterations: usize,
    pub trace: Vec<TraceStep>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub surrounding_trace: Vec<SurroundingStep>,
    /// Largest real lower bound certified by the tree depth bound.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub depth_certificate: Option<f64>,
}

impl PathReport {
    pub fn verified(
        g: &OrderedGraph,
        method: Method,
        path: VertexPath,
        guarantee: usize,
        iterations: usize,
        trace: Vec<TraceStep>,
    ) -> Result<Self> {
        ensure!(
            verify_induced_increasing(g, &path),
            "extracted path {:?} is not an increasing induced path",
            path.as_slice()
        );
        ensure!(
            path.len() >= guarantee,
            "extracted path has {} vertices, below its guarantee {guarantee}",
            path.len()
        );
        Ok(Self {
            n: g.n(),
            method,
            length: path.len(),
            path,
            guarantee,
            iterations,
            trace,
            surrounding_trace: Vec::new(),
            depth_certificate: None,
        })
    }

    /// Moves the report from an interval subgraph back to host positions.
    pub(crate) fn lifted(mut self, host: &OrderedGraph, shift: usize) -> Result<Self> {
        self.path = self.path.shifted(shift);
        self.n = host.n();
        ensure!(
            verify_induced_increasing(host, &self.path),
            "lifted path {:?} is not induced in the host",
            self.path.as_slice()
        );
        Ok(self)
    }
}
