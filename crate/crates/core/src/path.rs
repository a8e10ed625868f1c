use std::collections::VecDeque;

use serde::{Deserialize, Serialize};

use crate::error::{ensure, Error, Result};
use crate::graph::OrderedGraph;

/// A sequence of positions. Validity against a host graph is checked by the
/// verifiers below, not at construction.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct VertexPath(pub Vec<usize>);

impl VertexPath {
    pub fn new(seq: Vec<usize>) -> Self {
        Self(seq)
    }

    pub fn single(v: usize) -> Self {
        Self(vec![v])
    }

    #[allow(clippy::len_without_is_empty)]
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }

    pub fn first(&self) -> Option<usize> {
        self.0.first().copied()
    }

    pub fn last(&self) -> Option<usize> {
        self.0.last().copied()
    }

    pub fn shifted(&self, delta: usize) -> Self {
        Self(self.0.iter().map(|v| v + delta).collect())
    }
}

impl From<Vec<usize>> for VertexPath {
    fn from(v: Vec<usize>) -> Self {
        Self(v)
    }
}

/// True iff `p` is a nonempty induced path of `g`: distinct vertices,
/// consecutive pairs adjacent, no chord between non-consecutive vertices.
pub fn is_induced_path(g: &OrderedGraph, p: &VertexPath) -> bool {
    let seq = p.as_slice();
    if seq.is_empty() || seq.iter().any(|&v| v == 0 || v > g.n()) {
        return false;
    }
    let mut sorted: Vec<(usize, usize)> = seq.iter().enumerate().map(|(i, &v)| (v, i)).collect();
    sorted.sort_unstable();
    if sorted.windows(2).any(|w| w[0].0 == w[1].0) {
        return false;
    }
    let pos_of = |v: usize| -> Option<usize> {
        sorted
            .binary_search_by_key(&v, |&(x, _)| x)
            .ok()
            .map(|i| sorted[i].1)
    };
    for (i, &v) in seq.iter().enumerate() {
        for &w in g.neighbors(v) {
            if let Some(j) = pos_of(w) {
                if i.abs_diff(j) != 1 {
                    return false;
                }
            }
        }
        if i + 1 < seq.len() && !g.has_edge(v, seq[i + 1]) {
            return false;
        }
    }
    true
}

/// True iff `p` is strictly increasing, consecutive pairs are edges and no
/// non-consecutive pair is an edge.
pub fn verify_induced_increasing(g: &OrderedGraph, p: &VertexPath) -> bool {
    p.as_slice().windows(2).all(|w| w[0] < w[1]) && is_induced_path(g, p)
}

/// Breadth-first search over increasing edges from `s` to `t`. A shortest
/// increasing path is chordless, so the result is always an increasing
/// induced path.
pub fn shortest_increasing_path(g: &OrderedGraph, s: usize, t: usize) -> Result<Option<VertexPath>> {
    g.check_vertex(s)?;
    g.check_vertex(t)?;
    if s > t {
        return Err(Error::InvalidInput(format!("shortest_increasing_path needs s <= t, got {s} > {t}")));
    }
    if s == t {
        return Ok(Some(VertexPath::single(s)));
    }
    let width = t - s + 1;
    let mut pred = vec![usize::MAX; width];
    pred[0] = s;
    let mut queue = VecDeque::from([s]);
    'bfs: while let Some(x) = queue.pop_front() {
        let nb = g.neighbors(x);
        let start = nb.partition_point(|&y| y <= x);
        for &y in &nb[start..] {
            if y > t {
                break;
            }
            if pred[y - s] == usize::MAX {
                pred[y - s] = x;
                if y == t {
                    break 'bfs;
                }
                queue.push_back(y);
            }
        }
    }
    if pred[t - s] == usize::MAX {
        return Ok(None);
    }
    let mut seq = vec![t];
    let mut cur = t;
    while cur != s {
        cur = pred[cur - s];
        seq.push(cur);
    }
    seq.reverse();
    let path = VertexPath(seq);
    ensure!(
        verify_induced_increasing(g, &path),
        "shortest increasing path {:?} is not induced",
        path.as_slice()
    );
    Ok(Some(path))
}
