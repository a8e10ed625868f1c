//! Crossings between edges of an ordered graph.
//!
//! Two edges `(a, b)` and `(c, d)` cross when `a < c < b < d`. Shared
//! endpoints and nesting are not crossings.

use crate::graph::Edge;

/// True iff `e` and `f` cross, in either order.
pub fn crosses(e: Edge, f: Edge) -> bool {
    let ((a, b), (c, d)) = if e.0 <= f.0 { (e, f) } else { (f, e) };
    a < c && c < b && b < d
}

/// Every crossing pair `((a, b), (c, d))` of `edges` with `a < c < b < d`,
/// sorted lexicographically. Each unordered crossing appears once.
///
/// Runs in `O((m + output) log m)` using a max-segment-tree over right
/// endpoints of edges sorted by left endpoint.
pub fn crossing_pairs(edges: &[Edge]) -> Vec<(Edge, Edge)> {
    let mut sorted: Vec<Edge> = edges.iter().map(|&(u, v)| if u < v { (u, v) } else { (v, u) }).collect();
    sorted.sort_unstable();
    sorted.dedup();
    let m = sorted.len();
    if m < 2 {
        return Vec::new();
    }
    let tree = MaxTree::new(sorted.iter().map(|e| e.1));
    let mut out = Vec::new();
    let mut hits = Vec::new();
    for &(a, b) in &sorted {
        // Edges whose left endpoint lies strictly inside (a, b).
        let lo = sorted.partition_point(|e| e.0 <= a);
        let hi = sorted.partition_point(|e| e.0 < b);
        if lo >= hi {
            continue;
        }
        hits.clear();
        tree.collect_above(lo, hi, b, &mut hits);
        hits.sort_unstable();
        out.extend(hits.iter().map(|&i| ((a, b), sorted[i])));
    }
    out
}

/// First crossing found in `edges`, or `None` when the set is non-crossing.
///
/// Edges sorted by `(lo asc, hi desc)` must nest like parentheses; a stack
/// of open right endpoints detects the first violation in `O(m log m)`.
pub fn find_crossing(edges: &[Edge]) -> Option<(Edge, Edge)> {
    let mut sorted: Vec<Edge> = edges.iter().map(|&(u, v)| if u < v { (u, v) } else { (v, u) }).collect();
    sorted.sort_unstable_by(|x, y| x.0.cmp(&y.0).then(y.1.cmp(&x.1)));
    let mut stack: Vec<Edge> = Vec::new();
    for e in sorted {
        while stack.last().is_some_and(|top| top.1 <= e.0) {
            stack.pop();
        }
        if let Some(&top) = stack.last() {
            if top.1 < e.1 && top.0 < e.0 {
                return Some((top, e));
            }
        }
        stack.push(e);
    }
    None
}

pub fn is_non_crossing(edges: &[Edge]) -> bool {
    find_crossing(edges).is_none()
}

struct MaxTree {
    size: usize,
    max: Vec<usize>,
}

impl MaxTree {
    fn new(values: impl ExactSizeIterator<Item = usize>) -> Self {
        let size = values.len().next_power_of_two();
        let mut max = vec![0; 2 * size];
        for (i, v) in values.enumerate() {
            max[size + i] = v;
        }
        for i in (1..size).rev() {
            max[i] = max[2 * i].max(max[2 * i + 1]);
        }
        Self { size, max }
    }

    /// Indices in `[lo, hi)` whose value exceeds `bound`.
    fn collect_above(&self, lo: usize, hi: usize, bound: usize, out: &mut Vec<usize>) {
        self.walk(1, 0, self.size, lo, hi, bound, out);
    }

    #[allow(clippy::too_many_arguments)]
    fn walk(&self, node: usize, nlo: usize, nhi: usize, lo: usize, hi: usize, bound: usize, out: &mut Vec<usize>) {
        if nhi <= lo || hi <= nlo || self.max[node] <= bound {
            return;
        }
        if nhi - nlo == 1 {
            out.push(nlo);
            return;
        }
        let mid = (nlo + nhi) / 2;
        self.walk(2 * node, nlo, mid, lo, hi, bound, out);
        self.walk(2 * node + 1, mid, nhi, lo, hi, bound, out);
    }
}
