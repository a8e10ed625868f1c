//! Gaps, quotients and cutwidth of ordered graphs.

use serde::Serialize;

use crate::error::{ensure, Error, Result};
use crate::graph::{Edge, OrderedGraph};
use crate::interval::Interval;

/// Result of [`gap`]: the size minus one of the largest sub-interval of `I`
/// avoiding `N(u)`, and the leftmost such sub-interval.
///
/// When every vertex of `I` is a neighbor of `u` there is no witness and the
/// value is reported as 0.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Gap {
    pub value: usize,
    pub witness: Option<Interval>,
}

/// Maximal runs of `iv` containing no neighbor of `u`, left to right.
pub fn unhit_runs(g: &OrderedGraph, u: usize, iv: Interval) -> Vec<Interval> {
    let mut runs = Vec::new();
    let mut start = iv.lo();
    for &x in g.neighbors_in(u, iv) {
        if let Some(r) = Interval::try_new(start, x - 1) {
            runs.push(r);
        }
        start = x + 1;
    }
    if let Some(r) = Interval::try_new(start, iv.hi()) {
        runs.push(r);
    }
    runs
}

/// Leftmost longest run of `iv` avoiding `N(u)`.
pub fn largest_unhit_run(g: &OrderedGraph, u: usize, iv: Interval) -> Option<Interval> {
    let mut best: Option<Interval> = None;
    let mut start = iv.lo();
    let mut consider = |r: Option<Interval>| {
        if let Some(r) = r {
            if best.is_none_or(|b| r.len() > b.len()) {
                best = Some(r);
            }
        }
    };
    for &x in g.neighbors_in(u, iv) {
        consider(Interval::try_new(start, x - 1));
        start = x + 1;
    }
    consider(Interval::try_new(start, iv.hi()));
    best
}

/// Gap of `u` towards `iv`. Rejects `u ∈ iv`.
pub fn gap(g: &OrderedGraph, u: usize, iv: Interval) -> Result<Gap> {
    g.check_vertex(u)?;
    g.check_interval(iv)?;
    if iv.contains(u) {
        return Err(Error::InvalidInput(format!("vertex {u} lies inside {iv}")));
    }
    let witness = largest_unhit_run(g, u, iv);
    Ok(Gap {
        value: witness.map_or(0, |w| w.len() - 1),
        witness,
    })
}

/// True iff some vertex of `iv` is a neighbor of `u`.
pub fn adjacent_to_interval(g: &OrderedGraph, u: usize, iv: Interval) -> bool {
    !g.neighbors_in(u, iv).is_empty()
}

/// Contracts each part of an interval partition to one vertex.
pub fn quotient(g: &OrderedGraph, parts: &[Interval]) -> Result<OrderedGraph> {
    let mut expect = 1;
    for p in parts {
        if p.lo() != expect {
            return Err(Error::InvalidInput(format!(
                "parts do not partition [1, {}]: expected a part starting at {expect}, found {p}",
                g.n()
            )));
        }
        expect = p.hi() + 1;
    }
    if expect != g.n() + 1 {
        return Err(Error::InvalidInput(format!("parts do not cover [1, {}]", g.n())));
    }
    let mut part_of = vec![0usize; g.n() + 1];
    for (i, p) in parts.iter().enumerate() {
        for v in p.iter() {
            part_of[v] = i + 1;
        }
    }
    let q = OrderedGraph::with_dedup(
        parts.len(),
        g.edges()
            .iter()
            .map(|&(u, v)| (part_of[u], part_of[v]))
            .filter(|(a, b)| a != b),
    )?;
    ensure!(
        !g.has_increasing_ham_path() || q.has_increasing_ham_path(),
        "quotient lost the increasing Hamiltonian path"
    );
    Ok(q)
}

/// Cutwidth of the edge set `edges` for the order `1..=n`.
pub fn cutwidth_of(n: usize, edges: &[Edge]) -> usize {
    if n < 2 {
        return 0;
    }
    let mut delta = vec![0isize; n + 2];
    for &(a, b) in edges {
        let (u, v) = if a < b { (a, b) } else { (b, a) };
        delta[u] += 1;
        delta[v] -= 1;
    }
    let mut cur = 0isize;
    let mut best = 0isize;
    for d in delta.iter().take(n).skip(1) {
        cur += d;
        best = best.max(cur);
    }
    best as usize
}

/// Cutwidth of `g` for its own order (not minimized over orders).
pub fn cutwidth(g: &OrderedGraph) -> usize {
    cutwidth_of(g.n(), g.edges())
}

/// True iff `(V, edges)` has cutwidth at most 1, i.e. it is an increasing
/// sequence of increasing paths.
pub fn is_seq_of_increasing_paths(n: usize, edges: &[Edge]) -> bool {
    cutwidth_of(n, edges) <= 1
}
