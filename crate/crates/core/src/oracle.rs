//! Exact longest induced path solvers for small instances.

use std::collections::HashMap;

use serde::Serialize;

use crate::graph::OrderedGraph;
use crate::path::VertexPath;

pub const DEFAULT_BUDGET: u64 = 100_000_000;

/// Largest `n` for which the increasing solver memoizes states.
pub const MEMO_LIMIT: usize = 64;

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct OracleResult {
    pub best: VertexPath,
    /// True iff the search finished within budget.
    pub optimal: bool,
    pub nodes_expanded: u64,
    /// Wall time, filled in by callers that measure it.
    pub time_ms: Option<f64>,
}

#[derive(Clone)]
struct Bits(Vec<u64>);

impl Bits {
    fn new(n: usize) -> Self {
        Bits(vec![0; n / 64 + 1])
    }

    fn get(&self, i: usize) -> bool {
        self.0[i / 64] >> (i % 64) & 1 == 1
    }

    fn set(&mut self, i: usize) {
        self.0[i / 64] |= 1 << (i % 64);
    }

    fn union_with(&mut self, o: &Bits) {
        for (a, b) in self.0.iter_mut().zip(&o.0) {
            *a |= b;
        }
    }

    fn count(&self) -> usize {
        self.0.iter().map(|w| w.count_ones() as usize).sum()
    }

    /// Set bits strictly above `i`.
    fn count_above(&self, i: usize) -> usize {
        let w = i / 64;
        let head = if i % 64 == 63 { 0 } else { self.0[w] & (!0u64 << (i % 64 + 1)) };
        head.count_ones() as usize + self.0[w + 1..].iter().map(|x| x.count_ones() as usize).sum::<usize>()
    }
}

struct Search<'a> {
    g: &'a OrderedGraph,
    closed: Vec<Bits>,
    increasing: bool,
    budget: u64,
    nodes: u64,
    exhausted: bool,
    best: Vec<usize>,
}

impl<'a> Search<'a> {
    fn new(g: &'a OrderedGraph, increasing: bool, budget: u64) -> Self {
        let n = g.n();
        let closed = (0..=n)
            .map(|v| {
                let mut b = Bits::new(n + 1);
                if v > 0 {
                    b.set(v);
                    for &w in g.neighbors(v) {
                        b.set(w);
                    }
                }
                b
            })
            .collect();
        Self { g, closed, increasing, budget, nodes: 0, exhausted: false, best: Vec::new() }
    }

    fn tick(&mut self) -> bool {
        self.nodes += 1;
        if self.nodes > self.budget {
            self.exhausted = true;
        }
        !self.exhausted
    }

    /// `forb` holds the closed neighborhoods of every path vertex but the last.
    fn dfs(&mut self, path: &mut Vec<usize>, forb: &Bits) {
        if !self.tick() {
            return;
        }
        if path.len() > self.best.len() {
            self.best = path.clone();
        }
        let n = self.g.n();
        if self.best.len() == n {
            return;
        }
        let end = *path.last().expect("nonempty path");
        let free = if self.increasing {
            (n - end) - forb.count_above(end)
        } else {
            // The endpoint is in `forb` except at the start vertex.
            n + 1 - forb.count()
        };
        if path.len() + free <= self.best.len() {
            return;
        }
        let mut next = forb.clone();
        next.union_with(&self.closed[end]);
        for &w in self.g.neighbors(end) {
            if (self.increasing && w < end) || forb.get(w) {
                continue;
            }
            path.push(w);
            self.dfs(path, &next);
            path.pop();
            if self.exhausted || self.best.len() == n {
                return;
            }
        }
    }

    fn run(mut self) -> OracleResult {
        let n = self.g.n();
        let mut empty = Bits::new(n + 1);
        // Index 0 is never a vertex.
        empty.set(0);
        for s in 1..=n {
            self.dfs(&mut vec![s], &empty);
            if self.exhausted || self.best.len() == n {
                break;
            }
        }
        OracleResult {
            best: VertexPath::new(self.best),
            optimal: !self.exhausted,
            nodes_expanded: self.nodes,
            time_ms: None,
        }
    }
}

/// Longest induced path, by branch and bound over path extensions.
pub fn longest_induced_path(g: &OrderedGraph, budget: u64) -> OracleResult {
    Search::new(g, false, budget).run()
}

/// Longest increasing induced path.
///
/// Up to [`MEMO_LIMIT`] vertices, states `(endpoint, forbidden vertices
/// above it)` are memoized; above it the search is plain branch and bound.
pub fn longest_increasing_induced_path(g: &OrderedGraph, budget: u64) -> OracleResult {
    if g.n() > MEMO_LIMIT || g.n() == 0 {
        return Search::new(g, true, budget).run();
    }
    Memo::new(g, budget).run()
}

struct Memo<'a> {
    g: &'a OrderedGraph,
    closed: Vec<u64>,
    budget: u64,
    nodes: u64,
    exhausted: bool,
    /// Best suffix after `end`, for a completed state.
    table: HashMap<(usize, u64), Vec<usize>>,
}

impl<'a> Memo<'a> {
    fn new(g: &'a OrderedGraph, budget: u64) -> Self {
        let closed = (0..=g.n())
            .map(|v| {
                if v == 0 {
                    return 0;
                }
                g.neighbors(v).iter().fold(1u64 << (v - 1), |m, &w| m | 1 << (w - 1))
            })
            .collect();
        Self { g, closed, budget, nodes: 0, exhausted: false, table: HashMap::new() }
    }

    fn above(v: usize) -> u64 {
        if v >= 64 {
            0
        } else {
            !0u64 << v
        }
    }

    /// Longest suffix `w_1 < w_2 < ...` extending a path ending at `end`
    /// whose other vertices forbid `forb` (restricted to positions > end).
    fn suffix(&mut self, end: usize, forb: u64) -> Vec<usize> {
        if let Some(s) = self.table.get(&(end, forb)) {
            return s.clone();
        }
        self.nodes += 1;
        if self.nodes > self.budget {
            self.exhausted = true;
            return Vec::new();
        }
        let next = forb | self.closed[end];
        let mut best: Vec<usize> = Vec::new();
        for &w in self.g.neighbors(end) {
            if w < end || forb >> (w - 1) & 1 == 1 {
                continue;
            }
            let rest = self.suffix(w, next & Self::above(w));
            if rest.len() + 1 > best.len() {
                best.clear();
                best.push(w);
                best.extend(rest);
            }
            if self.exhausted {
                return best;
            }
        }
        self.table.insert((end, forb), best.clone());
        best
    }

    fn run(mut self) -> OracleResult {
        let mut best = Vec::new();
        for s in 1..=self.g.n() {
            let rest = self.suffix(s, 0);
            if rest.len() + 1 > best.len() {
                best = std::iter::once(s).chain(rest).collect();
            }
            if self.exhausted {
                break;
            }
        }
        OracleResult {
            best: VertexPath::new(best),
            optimal: !self.exhausted,
            nodes_expanded: self.nodes,
            time_ms: None,
        }
    }
}
