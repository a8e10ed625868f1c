use std::collections::{BTreeMap, BTreeSet};

use serde::Serialize;

use crate::graph::{Edge, OrderedGraph};
use crate::interval::Interval;
use crate::metrics::{adjacent_to_interval, cutwidth_of, is_seq_of_increasing_paths};
use crate::path::VertexPath;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Side {
    /// Ancestors follow their descendants in the order.
    Left,
    /// Ancestors precede their descendants.
    Right,
}

/// A rooted tree on graph positions with colored parent edges.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ColoredTree {
    side: Side,
    root: usize,
    /// Non-root node → (parent, edge color).
    parent: BTreeMap<usize, (usize, usize)>,
}

impl ColoredTree {
    pub fn singleton(side: Side, v: usize) -> Self {
        Self { side, root: v, parent: BTreeMap::new() }
    }

    pub fn side(&self) -> Side {
        self.side
    }

    pub fn root(&self) -> usize {
        self.root
    }

    pub fn parent_of(&self, v: usize) -> Option<(usize, usize)> {
        self.parent.get(&v).copied()
    }

    pub fn size(&self) -> usize {
        self.parent.len() + 1
    }

    pub fn contains(&self, v: usize) -> bool {
        v == self.root || self.parent.contains_key(&v)
    }

    /// Nodes in increasing position order.
    pub fn nodes(&self) -> Vec<usize> {
        let mut v: Vec<usize> = self.parent.keys().copied().collect();
        let at = v.partition_point(|&x| x < self.root);
        v.insert(at, self.root);
        v
    }

    /// `(child, parent, color)` for every edge.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize, usize)> + '_ {
        self.parent.iter().map(|(&v, &(p, c))| (v, p, c))
    }

    /// Edges as ordered pairs `(lo, hi)`.
    pub fn edge_pairs(&self) -> Vec<Edge> {
        let mut e: Vec<Edge> = self.edges().map(|(v, p, _)| (v.min(p), v.max(p))).collect();
        e.sort_unstable();
        e
    }

    /// Makes `new_root` the parent of the current root.
    pub fn attach_above(&mut self, new_root: usize, color: usize) {
        self.parent.insert(self.root, (new_root, color));
        self.root = new_root;
    }

    /// Hangs `other` below `at` with an edge of `color`.
    pub fn graft(&mut self, other: ColoredTree, at: usize, color: usize) {
        self.parent.extend(other.parent);
        self.parent.insert(other.root, (at, color));
    }

    /// Depth of every node (the root has depth 1), or `None` if the parent
    /// links do not form a tree.
    fn depths(&self) -> Option<BTreeMap<usize, usize>> {
        let mut depth = BTreeMap::new();
        depth.insert(self.root, 1);
        for &start in self.parent.keys() {
            let mut chain = vec![start];
            let mut cur = start;
            let base = loop {
                if let Some(&d) = depth.get(&cur) {
                    break d;
                }
                let (p, _) = *self.parent.get(&cur)?;
                if chain.len() > self.parent.len() {
                    return None;
                }
                chain.push(p);
                cur = p;
            };
            chain.pop();
            for (i, v) in chain.iter().rev().enumerate() {
                depth.insert(*v, base + i + 1);
            }
        }
        Some(depth)
    }

    /// Vertices on a longest root-to-leaf path.
    pub fn depth(&self) -> usize {
        self.depths().map_or(0, |d| d.values().copied().max().unwrap_or(0))
    }

    /// A deepest root-to-leaf path, listed in increasing position order.
    /// Ties go to the smallest leaf.
    pub fn deepest_path(&self) -> VertexPath {
        let depths = self.depths().expect("well-formed tree");
        let (&leaf, _) = depths
            .iter()
            .max_by(|a, b| a.1.cmp(b.1).then(b.0.cmp(a.0)))
            .expect("nonempty");
        let mut path = vec![leaf];
        let mut cur = leaf;
        while let Some(&(p, _)) = self.parent.get(&cur) {
            path.push(p);
            cur = p;
        }
        if self.side == Side::Right {
            path.reverse();
        }
        VertexPath::new(path)
    }

    /// Cutwidth of the tree as an ordered graph on its own positions.
    pub fn cutwidth(&self) -> usize {
        let nodes = self.nodes();
        let rank = |v: usize| nodes.binary_search(&v).expect("node") + 1;
        let edges: Vec<Edge> = self.edge_pairs().into_iter().map(|(a, b)| (rank(a), rank(b))).collect();
        cutwidth_of(nodes.len(), &edges)
    }

    fn well_formed(&self) -> bool {
        !self.parent.contains_key(&self.root) && self.depths().is_some()
    }
}

/// Trees `L_1..L_p` before `interval` and `R_1..R_{k-p}` after it. Edges of
/// `L_i` and `R_j` carry bookkeeping colors: color `i` belongs to slot `L_i`
/// and color `p + j` to slot `R_j`, whichever tree the edge sits in.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TreeSurrounding {
    pub k: usize,
    pub p: usize,
    pub left: Vec<ColoredTree>,
    pub interval: Interval,
    pub right: Vec<ColoredTree>,
}

impl TreeSurrounding {
    /// Singletons at `1..=p` and at the last `k - p` positions.
    pub fn initial(n: usize, k: usize, p: usize, interval: Interval) -> Self {
        Self {
            k,
            p,
            left: (1..=p).map(|v| ColoredTree::singleton(Side::Left, v)).collect(),
            interval,
            right: (0..k - p).map(|j| ColoredTree::singleton(Side::Right, n - j)).collect(),
        }
    }

    pub fn trees(&self) -> impl Iterator<Item = &ColoredTree> {
        self.left.iter().chain(&self.right)
    }

    pub fn roots(&self) -> Vec<usize> {
        self.trees().map(|t| t.root()).collect()
    }

    pub fn tree_sizes(&self) -> Vec<usize> {
        self.trees().map(|t| t.size()).collect()
    }

    pub fn total_size(&self) -> usize {
        self.trees().map(|t| t.size()).sum()
    }

    /// Color owned by slot `i` of `side` (0-based).
    pub fn slot_color(&self, side: Side, i: usize) -> usize {
        match side {
            Side::Left => i + 1,
            Side::Right => self.p + i + 1,
        }
    }
}

/// Indices of the violated surrounding conditions, in increasing order.
///
/// 1: left trees precede the interval, right trees follow it.
/// 2: left edges use colors `1..=p`, right edges `p+1..=k`.
/// 3: every color class is an increasing sequence of increasing paths whose
///    extreme vertex (largest on the left, smallest on the right) is the
///    root of the slot owning the color.
/// 4: no non-root node is in the interval or adjacent to it.
/// 5: the parent of each non-root node is its nearest neighbor on its own
///    side of the interval.
/// 6: some root has no neighbor in the interval.
///
/// 0 reports structural problems: wrong slot counts, overlapping or
/// malformed trees, tree edges missing from the graph, or an interval
/// outside the graph.
pub fn verify_surrounding(g: &OrderedGraph, t: &TreeSurrounding) -> Vec<usize> {
    let mut bad = BTreeSet::new();
    let iv = t.interval;
    if t.p > t.k
        || t.left.len() != t.p
        || t.right.len() != t.k - t.p
        || g.check_interval(iv).is_err()
        || t.left.iter().any(|x| x.side() != Side::Left)
        || t.right.iter().any(|x| x.side() != Side::Right)
    {
        bad.insert(0);
    }
    let mut seen = BTreeSet::new();
    for tree in t.trees() {
        if !tree.well_formed() {
            bad.insert(0);
            continue;
        }
        for v in tree.nodes() {
            if v == 0 || v > g.n() || !seen.insert(v) {
                bad.insert(0);
            }
        }
        for (v, p, _) in tree.edges() {
            if v <= g.n() && p <= g.n() && v != p && !g.has_edge(v, p) {
                bad.insert(0);
            }
        }
    }
    if bad.contains(&0) {
        return bad.into_iter().collect();
    }

    for tree in &t.left {
        if tree.nodes().iter().any(|&v| v >= iv.lo()) {
            bad.insert(1);
        }
    }
    for tree in &t.right {
        if tree.nodes().iter().any(|&v| v <= iv.hi()) {
            bad.insert(1);
        }
    }

    for tree in &t.left {
        if tree.edges().any(|(_, _, c)| !(1..=t.p).contains(&c)) {
            bad.insert(2);
        }
    }
    for tree in &t.right {
        if tree.edges().any(|(_, _, c)| !(t.p + 1..=t.k).contains(&c)) {
            bad.insert(2);
        }
    }

    for (side, slots) in [(Side::Left, &t.left), (Side::Right, &t.right)] {
        let mut classes: BTreeMap<usize, Vec<Edge>> = BTreeMap::new();
        for tree in slots.iter() {
            for (v, p, c) in tree.edges() {
                classes.entry(c).or_default().push((v.min(p), v.max(p)));
            }
        }
        for (i, slot) in slots.iter().enumerate() {
            let color = t.slot_color(side, i);
            let Some(class) = classes.get(&color) else { continue };
            if !is_seq_of_increasing_paths(g.n(), class) {
                bad.insert(3);
            }
            let r = slot.root();
            let extreme_ok = class.iter().flat_map(|&(a, b)| [a, b]).all(|x| match side {
                Side::Left => x <= r,
                Side::Right => x >= r,
            });
            if !extreme_ok {
                bad.insert(3);
            }
        }
    }

    for tree in t.trees() {
        for (v, p, _) in tree.edges() {
            if iv.contains(v) || adjacent_to_interval(g, v, iv) {
                bad.insert(4);
            }
            let nearest = match tree.side() {
                Side::Left => g.largest_neighbor_below(v, iv.lo()),
                Side::Right => g.smallest_neighbor_above(v, iv.hi()),
            };
            if nearest != Some(p) {
                bad.insert(5);
            }
        }
    }

    if !t.roots().iter().any(|&r| !adjacent_to_interval(g, r, iv)) {
        bad.insert(6);
    }
    bad.into_iter().collect()
}
