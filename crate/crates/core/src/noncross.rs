//! k-non-crossing edge partitions for a fixed vertex order.
//!
//! For a fixed order, a partition into `k` non-crossing classes is exactly a
//! proper `k`-coloring of the crossing-conflict graph, whose nodes are the
//! edges of the host graph and whose arcs are the crossing pairs.

use std::collections::VecDeque;

use serde::Serialize;

use crate::crossing::{crossing_pairs, find_crossing};
use crate::error::{Error, Result};
use crate::graph::{Edge, OrderedGraph};

/// Color per edge, aligned with [`OrderedGraph::edges`]. Colors are `1..=k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EdgeColoring {
    k: usize,
    colors: Vec<usize>,
}

impl EdgeColoring {
    pub fn new(k: usize, colors: Vec<usize>) -> Result<Self> {
        if k == 0 && !colors.is_empty() {
            return Err(Error::InvalidInput("a coloring of a nonempty edge set needs k >= 1".into()));
        }
        if let Some(c) = colors.iter().find(|&&c| c == 0 || c > k) {
            return Err(Error::InvalidInput(format!("color {c} outside 1..={k}")));
        }
        Ok(Self { k, colors })
    }

    /// Every edge of `g` in color 1.
    pub fn uniform(g: &OrderedGraph) -> Self {
        Self {
            k: 1,
            colors: vec![1; g.m()],
        }
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn colors(&self) -> &[usize] {
        &self.colors
    }

    /// Color of edge `{u, v}` in `g`, if it is an edge.
    pub fn color_of(&self, g: &OrderedGraph, u: usize, v: usize) -> Option<usize> {
        g.edge_index(u, v).and_then(|i| self.colors.get(i).copied())
    }

    /// Same classes, with the palette widened to `k` colors.
    pub fn widened(&self, k: usize) -> Result<Self> {
        if k < self.k {
            return Err(Error::InvalidInput(format!("cannot narrow a {}-coloring to {k} colors", self.k)));
        }
        Ok(Self {
            k,
            colors: self.colors.clone(),
        })
    }

    /// Edges of `g` in color `c`.
    pub fn class(&self, g: &OrderedGraph, c: usize) -> Vec<Edge> {
        g.edges()
            .iter()
            .zip(&self.colors)
            .filter(|(_, &x)| x == c)
            .map(|(&e, _)| e)
            .collect()
    }

    pub fn used_colors(&self) -> usize {
        let mut seen = vec![false; self.k + 1];
        for &c in &self.colors {
            seen[c] = true;
        }
        seen.iter().filter(|&&s| s).count()
    }
}

/// Crossing-conflict graph: node `i` is edge `g.edges()[i]`.
#[derive(Clone, Debug)]
pub struct ConflictGraph {
    pub nodes: Vec<Edge>,
    pub adj: Vec<Vec<usize>>,
}

impl ConflictGraph {
    pub fn arc_count(&self) -> usize {
        self.adj.iter().map(Vec::len).sum::<usize>() / 2
    }
}

pub fn build_conflict_graph(g: &OrderedGraph) -> ConflictGraph {
    let mut adj = vec![Vec::new(); g.m()];
    for (e, f) in crossing_pairs(g.edges()) {
        let i = g.edge_index(e.0, e.1).expect("edge of g");
        let j = g.edge_index(f.0, f.1).expect("edge of g");
        adj[i].push(j);
        adj[j].push(i);
    }
    for list in &mut adj {
        list.sort_unstable();
    }
    ConflictGraph {
        nodes: g.edges().to_vec(),
        adj,
    }
}

/// An odd cycle of the conflict graph, as host edges in cycle order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OddConflictCycle(pub Vec<Edge>);

/// Breadth-first 2-coloring of the conflict graph, components in edge order,
/// each root colored 1. Fails with an odd conflict cycle.
pub fn two_partition_or_cycle(g: &OrderedGraph) -> std::result::Result<EdgeColoring, OddConflictCycle> {
    let cg = build_conflict_graph(g);
    let m = g.m();
    let mut color = vec![0usize; m];
    let mut parent = vec![usize::MAX; m];
    let mut depth = vec![0usize; m];
    for root in 0..m {
        if color[root] != 0 {
            continue;
        }
        color[root] = 1;
        let mut queue = VecDeque::from([root]);
        while let Some(x) = queue.pop_front() {
            for &y in &cg.adj[x] {
                if color[y] == 0 {
                    color[y] = 3 - color[x];
                    parent[y] = x;
                    depth[y] = depth[x] + 1;
                    queue.push_back(y);
                } else if color[y] == color[x] {
                    return Err(odd_cycle(&cg, &parent, &depth, x, y));
                }
            }
        }
    }
    Ok(EdgeColoring { k: 2, colors: color })
}

fn odd_cycle(cg: &ConflictGraph, parent: &[usize], depth: &[usize], x: usize, y: usize) -> OddConflictCycle {
    let (mut a, mut b) = (x, y);
    let mut left = vec![a];
    let mut right = vec![b];
    while depth[a] > depth[b] {
        a = parent[a];
        left.push(a);
    }
    while depth[b] > depth[a] {
        b = parent[b];
        right.push(b);
    }
    while a != b {
        a = parent[a];
        b = parent[b];
        left.push(a);
        right.push(b);
    }
    right.pop();
    right.reverse();
    left.extend(right);
    OddConflictCycle(left.into_iter().map(|i| cg.nodes[i]).collect())
}

/// 2-non-crossing partition, or `None` when the conflict graph has an odd cycle.
pub fn two_partition(g: &OrderedGraph) -> Option<EdgeColoring> {
    two_partition_or_cycle(g).ok()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum PartitionMethod {
    Exact,
    Greedy,
}

/// Outcome of [`k_partition`]. A `None` coloring from the greedy method does
/// not prove infeasibility.
#[derive(Clone, Debug)]
pub struct KPartition {
    pub method: PartitionMethod,
    pub coloring: Option<EdgeColoring>,
}

pub const DEFAULT_EXACT_THRESHOLD: usize = 64;

/// k-non-crossing partition: exact backtracking when at most `exact_threshold`
/// edges take part in a crossing, first-fit by descending span otherwise.
pub fn k_partition(g: &OrderedGraph, k: usize, exact_threshold: usize) -> Result<KPartition> {
    if k == 0 {
        return Err(Error::InvalidInput("k must be at least 1".into()));
    }
    let cg = build_conflict_graph(g);
    let active = cg.adj.iter().filter(|a| !a.is_empty()).count();
    if active <= exact_threshold {
        Ok(KPartition {
            method: PartitionMethod::Exact,
            coloring: exact_coloring(&cg, k).map(|colors| EdgeColoring { k, colors }),
        })
    } else {
        Ok(KPartition {
            method: PartitionMethod::Greedy,
            coloring: greedy_coloring(&cg, k).map(|colors| EdgeColoring { k, colors }),
        })
    }
}

fn greedy_coloring(cg: &ConflictGraph, k: usize) -> Option<Vec<usize>> {
    let mut order: Vec<usize> = (0..cg.nodes.len()).collect();
    order.sort_by_key(|&i| {
        let (lo, hi) = cg.nodes[i];
        (std::cmp::Reverse(hi - lo), lo)
    });
    let mut color = vec![0usize; cg.nodes.len()];
    let mut taken = vec![false; k + 1];
    for i in order {
        taken.iter_mut().for_each(|t| *t = false);
        for &j in &cg.adj[i] {
            taken[color[j]] = true;
        }
        color[i] = (1..=k).find(|&c| !taken[c])?;
    }
    Some(color)
}

/// DSATUR-ordered backtracking with the usual symmetry break (a node may open
/// at most one new color).
fn exact_coloring(cg: &ConflictGraph, k: usize) -> Option<Vec<usize>> {
    let m = cg.nodes.len();
    let mut color = vec![0usize; m];
    // Isolated nodes never constrain anything.
    let active: Vec<usize> = (0..m).filter(|&i| !cg.adj[i].is_empty()).collect();
    for (c, adj) in color.iter_mut().zip(&cg.adj) {
        if adj.is_empty() {
            *c = 1;
        }
    }
    if dsatur(cg, k, &active, &mut color, 0) {
        Some(color)
    } else {
        None
    }
}

fn dsatur(cg: &ConflictGraph, k: usize, active: &[usize], color: &mut [usize], used: usize) -> bool {
    // Pick the uncolored node with most distinct neighbor colors, then degree.
    let mut pick = None;
    let mut best = (0usize, 0usize);
    for &i in active {
        if color[i] != 0 {
            continue;
        }
        let mut seen = 0u128;
        let mut sat = 0;
        for &j in &cg.adj[i] {
            let c = color[j];
            if c != 0 && c < 128 && seen & (1 << c) == 0 {
                seen |= 1 << c;
                sat += 1;
            }
        }
        let key = (sat, cg.adj[i].len());
        if pick.is_none() || key > best {
            pick = Some(i);
            best = key;
        }
    }
    let Some(i) = pick else {
        return true;
    };
    let limit = k.min(used + 1);
    for c in 1..=limit {
        if cg.adj[i].iter().any(|&j| color[j] == c) {
            continue;
        }
        color[i] = c;
        if dsatur(cg, k, active, color, used.max(c)) {
            return true;
        }
    }
    color[i] = 0;
    false
}

/// Why a coloring fails to certify a partition.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PartitionViolation {
    LengthMismatch { edges: usize, colors: usize },
    ColorOutOfRange { edge: Edge, color: usize },
    Crossing { color: usize, pair: (Edge, Edge) },
}

/// First violation of the partition certificate, if any.
pub fn partition_violation(g: &OrderedGraph, c: &EdgeColoring) -> Option<PartitionViolation> {
    if c.colors.len() != g.m() {
        return Some(PartitionViolation::LengthMismatch {
            edges: g.m(),
            colors: c.colors.len(),
        });
    }
    let mut classes: Vec<Vec<Edge>> = vec![Vec::new(); c.k + 1];
    for (&e, &col) in g.edges().iter().zip(&c.colors) {
        if col == 0 || col > c.k {
            return Some(PartitionViolation::ColorOutOfRange { edge: e, color: col });
        }
        classes[col].push(e);
    }
    classes.iter().enumerate().skip(1).find_map(|(col, class)| {
        find_crossing(class).map(|pair| PartitionViolation::Crossing { color: col, pair })
    })
}

/// True iff every edge is colored in `1..=k` and every class is non-crossing.
pub fn verify_partition(g: &OrderedGraph, c: &EdgeColoring) -> bool {
    partition_violation(g, c).is_none()
}
