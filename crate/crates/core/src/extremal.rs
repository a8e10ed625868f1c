//! Ordered graphs with few non-crossing classes and no long induced path:
//! the houses `U_p` and the recursive family `G(k, p)`.

use serde::Serialize;

use crate::error::{ensure, Error, Result};
use crate::extractk::binomial;
use crate::graph::{Edge, OrderedGraph};
use crate::noncross::{partition_violation, EdgeColoring};

/// Largest exponent accepted by the builders (`n <= 2^MAX_LOG_SIZE + 1`).
pub const MAX_LOG_SIZE: u64 = 30;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Family {
    U,
    G,
}

/// A generated graph with its coloring certificate.
#[derive(Clone, Debug)]
pub struct LabeledInstance {
    pub graph: OrderedGraph,
    pub coloring: EdgeColoring,
    pub family: Family,
    pub k: usize,
    pub p: usize,
    /// Copy extremities `c_1..c_{d+1}` of `G(k, p)`; empty for base cases
    /// and for `U_p`.
    pub x_set: Vec<usize>,
}

/// The first graph followed by the second, sharing `|a|` as one vertex.
pub fn glue(a: &OrderedGraph, b: &OrderedGraph) -> OrderedGraph {
    let shift = a.n() - 1;
    let edges = a
        .edges()
        .iter()
        .copied()
        .chain(b.edges().iter().map(|&(u, v)| (u + shift, v + shift)));
    OrderedGraph::new(a.n() + b.n() - 1, edges).expect("glued edge sets are disjoint")
}

/// `C(k + p + 1, p)`, the base-2 logarithm of `|G(k, p)| - 1`.
pub fn log_size(k: usize, p: usize) -> Option<u64> {
    let e = binomial((k + p + 1) as u64, p as u64);
    (e != u64::MAX).then_some(e)
}

/// `2^C(k+p+1, p) + 1`, or `None` when it does not fit in a `u64`.
pub fn expected_size(k: usize, p: usize) -> Option<u64> {
    let e = log_size(k, p)?;
    (e < 64).then(|| (1u64 << e) + 1)
}

fn size_guard(k: usize, p: usize) -> Result<()> {
    match log_size(k, p) {
        Some(e) if e <= MAX_LOG_SIZE => Ok(()),
        _ => Err(Error::SizeGuard(format!(
            "G({k}, {p}) would have 2^C({}, {p}) + 1 vertices; the limit is 2^{MAX_LOG_SIZE} + 1",
            k + p + 1
        ))),
    }
}

fn u_graph(p: usize) -> OrderedGraph {
    let mut g = OrderedGraph::path(2);
    for _ in 0..p {
        let glued = glue(&g, &g);
        let n = glued.n();
        g = OrderedGraph::new(n, glued.edges().iter().copied().chain([(1, n)])).expect("extremity edge is new");
    }
    g
}

/// `U_p`: a 1-non-crossing house on `2^p + 1` vertices.
pub fn build_u(p: usize) -> Result<LabeledInstance> {
    if p > 24 {
        return Err(Error::SizeGuard(format!("U_{p} exceeds the limit p <= 24")));
    }
    let graph = u_graph(p);
    ensure!(graph.n() == (1 << p) + 1, "U_{p} has {} vertices", graph.n());
    let coloring = EdgeColoring::uniform(&graph);
    Ok(LabeledInstance { graph, coloring, family: Family::U, k: 0, p, x_set: Vec::new() })
}

/// Number of colors in the certificate of `G(k, p)`.
fn palette(k: usize) -> usize {
    2 * k + 1
}

fn g_graph(k: usize, p: usize) -> (OrderedGraph, EdgeColoring, Vec<usize>) {
    if p == 0 {
        let g = OrderedGraph::path(3);
        let c = EdgeColoring::new(palette(k), vec![1; 2]).expect("valid colors");
        return (g, c, Vec::new());
    }
    if k == 0 {
        let g = u_graph(p + 1);
        let c = EdgeColoring::uniform(&g);
        return (g, c, Vec::new());
    }
    let (outer, outer_c, _) = g_graph(k - 1, p);
    let (inner, inner_c, _) = g_graph(k, p - 1);
    let d = outer.n() - 1;
    let step = inner.n() - 1;
    let n = d * step + 1;
    let x_set: Vec<usize> = (0..=d).map(|i| 1 + i * step).collect();

    let mut edges: Vec<(Edge, usize)> = Vec::with_capacity(d * inner.m() + outer.m() + 2 * d);
    for i in 0..d {
        let shift = i * step;
        for (&(u, v), &c) in inner.edges().iter().zip(inner_c.colors()) {
            edges.push(((u + shift, v + shift), c));
        }
    }
    for (&(u, v), &c) in outer.edges().iter().zip(outer_c.colors()) {
        edges.push(((x_set[u - 1], x_set[v - 1]), c));
    }
    for &x in &x_set[1..d] {
        edges.push(((x_set[0], x), 2 * k));
        edges.push(((x, x_set[d]), 2 * k + 1));
    }
    // Keep the first occurrence of each edge: inner copies, then the copy
    // of G(k-1, p), then the two stars.
    let mut kept: Vec<(Edge, usize)> = Vec::with_capacity(edges.len());
    let mut last: Option<Edge> = None;
    let mut sorted: Vec<usize> = (0..edges.len()).collect();
    sorted.sort_by_key(|&i| (edges[i].0, i));
    for i in sorted {
        if last != Some(edges[i].0) {
            kept.push(edges[i]);
            last = Some(edges[i].0);
        }
    }
    let g = OrderedGraph::new(n, kept.iter().map(|e| e.0)).expect("deduplicated edges");
    let c = EdgeColoring::new(palette(k), kept.iter().map(|e| e.1).collect()).expect("colors in range");
    (g, c, x_set)
}

/// `G(k, p)` with its `(2k + 1)`-class certificate.
pub fn build_g(k: usize, p: usize) -> Result<LabeledInstance> {
    size_guard(k, p)?;
    let (graph, coloring, x_set) = g_graph(k, p);
    let expected = expected_size(k, p).expect("guarded");
    ensure!(graph.n() as u64 == expected, "G({k}, {p}) has {} vertices, expected {expected}", graph.n());
    Ok(LabeledInstance { graph, coloring, family: Family::G, k, p, x_set })
}

/// Largest induced-path size the family admits.
pub fn ip_upper_bound(family: Family, k: usize, p: usize) -> usize {
    match family {
        Family::U => 2 * p + 2,
        Family::G if p == 0 => 3,
        Family::G if k == 0 => 2 * (p + 1) + 2,
        Family::G => 2 * k * (p + 2) + 2,
    }
}

impl LabeledInstance {
    pub fn upper_bound(&self) -> usize {
        ip_upper_bound(self.family, self.k, self.p)
    }

    /// Certificate validity, vertex count, and the copy structure of
    /// `G(k, p)`: no edge joins the interiors of two copies, and every
    /// neighbor of a copy interior lies in that copy.
    pub fn check(&self) -> Result<()> {
        if let Some(v) = partition_violation(&self.graph, &self.coloring) {
            return Err(Error::Invariant(format!("certificate rejected: {v:?}")));
        }
        let expected = match self.family {
            Family::U => (1u64 << self.p) + 1,
            Family::G => expected_size(self.k, self.p).unwrap_or(0),
        };
        ensure!(self.graph.n() as u64 == expected, "vertex count {} != {expected}", self.graph.n());
        ensure!(self.graph.has_increasing_ham_path(), "missing Hamiltonian path");
        if self.x_set.len() < 2 {
            return Ok(());
        }
        for &(u, v) in self.graph.edges() {
            let (iu, iv) = (self.x_set.binary_search(&u), self.x_set.binary_search(&v));
            match (iu, iv) {
                (Ok(_), Ok(_)) => {}
                (Err(a), Err(b)) => ensure!(a == b, "edge ({u}, {v}) joins interiors of two copies"),
                (Ok(_), Err(b)) => {
                    ensure!(u == self.x_set[b - 1], "edge ({u}, {v}) leaves copy {b}")
                }
                (Err(a), Ok(_)) => {
                    ensure!(v == self.x_set[a], "edge ({u}, {v}) leaves copy {a}")
                }
            }
        }
        Ok(())
    }
}
