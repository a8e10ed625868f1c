//! Ordered graphs whose vertices are identified with their positions `1..=n`.

use std::fmt;

use crate::error::{Error, Result};
use crate::interval::Interval;

/// An edge `(u, v)` with `u < v`.
pub type Edge = (usize, usize);

/// A simple graph on positions `1..=n` with a fixed total order.
///
/// Edges are stored sorted lexicographically; adjacency is kept in compressed
/// form with every neighbor list sorted ascending.
#[derive(Clone, PartialEq, Eq)]
pub struct OrderedGraph {
    n: usize,
    edges: Vec<Edge>,
    offsets: Vec<usize>,
    targets: Vec<usize>,
    ham_path: bool,
}

impl OrderedGraph {
    /// Builds a graph, rejecting self-loops, out-of-range endpoints and
    /// duplicate edges. Pairs may be given in either orientation.
    pub fn new(n: usize, edges: impl IntoIterator<Item = Edge>) -> Result<Self> {
        let mut list = normalize(n, edges)?;
        list.sort_unstable();
        if let Some(w) = list.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::InvalidInput(format!(
                "duplicate edge ({}, {})",
                w[0].0, w[0].1
            )));
        }
        Ok(Self::from_sorted(n, list))
    }

    /// Like [`OrderedGraph::new`] but silently merges duplicate edges.
    pub fn with_dedup(n: usize, edges: impl IntoIterator<Item = Edge>) -> Result<Self> {
        let mut list = normalize(n, edges)?;
        list.sort_unstable();
        list.dedup();
        Ok(Self::from_sorted(n, list))
    }

    /// The increasing path `1 - 2 - ... - n`.
    pub fn path(n: usize) -> Self {
        Self::from_sorted(n, (1..n).map(|i| (i, i + 1)).collect())
    }

    /// Returns a copy with every consecutive pair `(i, i+1)` added.
    pub fn with_hamiltonian_path(&self) -> Self {
        let mut list = self.edges.clone();
        list.extend((1..self.n).map(|i| (i, i + 1)));
        list.sort_unstable();
        list.dedup();
        Self::from_sorted(self.n, list)
    }

    pub(crate) fn from_sorted(n: usize, edges: Vec<Edge>) -> Self {
        debug_assert!(edges.windows(2).all(|w| w[0] < w[1]));
        let mut degree = vec![0usize; n + 2];
        for &(u, v) in &edges {
            degree[u] += 1;
            degree[v] += 1;
        }
        let mut offsets = vec![0usize; n + 2];
        for x in 1..=n {
            offsets[x + 1] = offsets[x] + degree[x];
        }
        let mut fill = offsets.clone();
        let mut targets = vec![0usize; 2 * edges.len()];
        // Lexicographic edge order fills every list in ascending order.
        for &(u, v) in &edges {
            targets[fill[u]] = v;
            fill[u] += 1;
            targets[fill[v]] = u;
            fill[v] += 1;
        }
        let mut g = Self {
            n,
            edges,
            offsets,
            targets,
            ham_path: false,
        };
        g.ham_path = (1..n).all(|i| g.has_edge(i, i + 1));
        g
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    /// Sorted neighbors of `v`.
    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.targets[self.offsets[v]..self.offsets[v + 1]]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.offsets[v + 1] - self.offsets[v]
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        if u == 0 || v == 0 || u > self.n || v > self.n {
            return false;
        }
        let (a, b) = if self.degree(u) <= self.degree(v) { (u, v) } else { (v, u) };
        self.neighbors(a).binary_search(&b).is_ok()
    }

    /// Index of the edge in [`OrderedGraph::edges`].
    pub fn edge_index(&self, u: usize, v: usize) -> Option<usize> {
        let e = if u < v { (u, v) } else { (v, u) };
        self.edges.binary_search(&e).ok()
    }

    /// True iff every consecutive pair `(i, i+1)` is an edge.
    pub fn has_increasing_ham_path(&self) -> bool {
        self.ham_path
    }

    /// Neighbors of `v` inside `iv`, as a sorted slice.
    pub fn neighbors_in(&self, v: usize, iv: Interval) -> &[usize] {
        let nb = self.neighbors(v);
        let start = nb.partition_point(|&x| x < iv.lo());
        let end = nb.partition_point(|&x| x <= iv.hi());
        &nb[start..end]
    }

    /// Largest neighbor of `v` strictly below `bound`.
    pub fn largest_neighbor_below(&self, v: usize, bound: usize) -> Option<usize> {
        let nb = self.neighbors(v);
        let i = nb.partition_point(|&x| x < bound);
        i.checked_sub(1).map(|i| nb[i])
    }

    /// Smallest neighbor of `v` strictly above `bound`.
    pub fn smallest_neighbor_above(&self, v: usize, bound: usize) -> Option<usize> {
        let nb = self.neighbors(v);
        let i = nb.partition_point(|&x| x <= bound);
        nb.get(i).copied()
    }

    /// The ordered subgraph induced by `iv`, re-indexed so that `iv.lo()`
    /// becomes position 1.
    pub fn induced(&self, iv: Interval) -> Result<Self> {
        self.check_interval(iv)?;
        let shift = iv.lo() - 1;
        let mut list = Vec::new();
        for x in iv.iter() {
            for &y in self.neighbors_in(x, iv) {
                if y > x {
                    list.push((x - shift, y - shift));
                }
            }
        }
        Ok(Self::from_sorted(iv.len(), list))
    }

    pub(crate) fn check_interval(&self, iv: Interval) -> Result<()> {
        if iv.hi() > self.n {
            return Err(Error::InvalidInput(format!(
                "interval {iv} exceeds vertex count {}",
                self.n
            )));
        }
        Ok(())
    }

    pub(crate) fn check_vertex(&self, v: usize) -> Result<()> {
        if v == 0 || v > self.n {
            return Err(Error::InvalidInput(format!(
                "vertex {v} out of range 1..={}",
                self.n
            )));
        }
        Ok(())
    }

    pub(crate) fn require_ham_path(&self) -> Result<()> {
        if !self.ham_path {
            return Err(Error::InvalidInput("no increasing Hamiltonian path".into()));
        }
        Ok(())
    }
}

fn normalize(n: usize, edges: impl IntoIterator<Item = Edge>) -> Result<Vec<Edge>> {
    edges
        .into_iter()
        .map(|(a, b)| {
            if a == b {
                return Err(Error::InvalidInput(format!("self-loop at {a}")));
            }
            let (u, v) = if a < b { (a, b) } else { (b, a) };
            if u == 0 || v > n {
                return Err(Error::InvalidInput(format!(
                    "edge ({u}, {v}) out of range 1..={n}"
                )));
            }
            Ok((u, v))
        })
        .collect()
}

impl fmt::Debug for OrderedGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("OrderedGraph")
            .field("n", &self.n)
            .field("edges", &self.edges)
            .finish()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn adjacency_is_sorted_and_consistent() {
        let g = OrderedGraph::new(5, [(3, 1), (1, 2), (2, 3), (5, 1), (4, 5), (3, 4)]).unwrap();
        assert_eq!(g.neighbors(1), &[2, 3, 5]);
        assert_eq!(g.neighbors(3), &[1, 2, 4]);
        assert!(g.has_increasing_ham_path());
        for &(u, v) in g.edges() {
            assert!(u < v);
            assert!(g.neighbors(u).contains(&v) && g.neighbors(v).contains(&u));
        }
    }

    #[test]
    fn rejects_bad_edges() {
        assert!(OrderedGraph::new(3, [(1, 1)]).is_err());
        assert!(OrderedGraph::new(3, [(1, 4)]).is_err());
        assert!(OrderedGraph::new(3, [(0, 2)]).is_err());
        assert!(OrderedGraph::new(3, [(1, 2), (2, 1)]).is_err());
        assert_eq!(OrderedGraph::with_dedup(3, [(1, 2), (2, 1)]).unwrap().m(), 1);
    }

    #[test]
    fn single_vertex_is_legal() {
        let g = OrderedGraph::new(1, []).unwrap();
        assert!(g.has_increasing_ham_path());
        assert_eq!(g.neighbors(1), &[] as &[usize]);
    }

    #[test]
    fn ham_flag_requires_every_consecutive_edge() {
        let g = OrderedGraph::new(4, [(1, 2), (3, 4), (1, 4)]).unwrap();
        assert!(!g.has_increasing_ham_path());
        assert!(g.with_hamiltonian_path().has_increasing_ham_path());
    }

    #[test]
    fn induced_reindexes() {
        let g = OrderedGraph::new(6, [(1, 2), (2, 3), (3, 4), (4, 5), (5, 6), (2, 5), (1, 6)]).unwrap();
        let h = g.induced(Interval::new(2, 5).unwrap()).unwrap();
        assert_eq!(h.n(), 4);
        assert_eq!(h.edges(), &[(1, 2), (1, 4), (2, 3), (3, 4)]);
    }

    #[test]
    fn neighbor_queries() {
        let g = OrderedGraph::new(9, [(1, 3), (1, 5), (1, 9), (1, 2)]).unwrap();
        assert_eq!(g.largest_neighbor_below(1, 6), Some(5));
        assert_eq!(g.largest_neighbor_below(1, 2), None);
        assert_eq!(g.smallest_neighbor_above(1, 5), Some(9));
        assert_eq!(g.neighbors_in(1, Interval::new(3, 8).unwrap()), &[3, 5]);
    }
}
