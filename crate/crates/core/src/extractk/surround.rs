use crate::error::{ensure, Error, Result};
use crate::graph::OrderedGraph;
use crate::interval::Interval;
use crate::metrics::adjacent_to_interval;
use crate::noncross::EdgeColoring;
use crate::path::VertexPath;
use crate::report::{Method, PathReport};

use super::mono::{gap_k_or_path, GapKOrPath};
use super::tree::{verify_surrounding, ColoredTree, Side, TreeSurrounding};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GrowthCase {
    /// The new parent was outside every tree and becomes the new root.
    Attach,
    /// The new parent was in another tree of the same side; the grown tree
    /// is grafted there and its slot restarts from a fresh vertex.
    Merge,
}

impl GrowthCase {
    pub fn as_str(self) -> &'static str {
        match self {
            GrowthCase::Attach => "attach",
            GrowthCase::Merge => "merge",
        }
    }
}

#[derive(Clone, Debug)]
pub enum SurroundingGrowth {
    Path {
        path: VertexPath,
        certified: Option<usize>,
        case: GrowthCase,
    },
    Next {
        surrounding: TreeSurrounding,
        case: GrowthCase,
        /// Root whose missed run became the new interval.
        gap_vertex: usize,
    },
}

fn deepest_tree_path(g: &OrderedGraph, t: &TreeSurrounding) -> Result<PathReport> {
    let best = t
        .trees()
        .map(|tree| tree.deepest_path())
        .reduce(|a, b| if b.len() > a.len() { b } else { a })
        .expect("at least one tree");
    PathReport::verified(g, Method::TreeGrowth, best, 0, 0, Vec::new())
}

/// One growth step on a valid surrounding.
///
/// The grown slot is the one whose root is the smallest position missing
/// the interval. Afterwards the gap step runs on the new roots against the
/// interval (without its end nearest to a fresh vertex in the merge case).
pub fn grow_surrounding(
    g: &OrderedGraph,
    c: &EdgeColoring,
    t: &TreeSurrounding,
    gap: usize,
) -> Result<SurroundingGrowth> {
    if gap == 0 {
        return Err(Error::InvalidInput("gap must be at least 1".into()));
    }
    let violated = verify_surrounding(g, t);
    ensure!(violated.is_empty(), "input surrounding violates conditions {violated:?}");
    let iv = t.interval;

    let (side, slot, u) = t
        .left
        .iter()
        .enumerate()
        .map(|(i, tr)| (Side::Left, i, tr.root()))
        .chain(t.right.iter().enumerate().map(|(i, tr)| (Side::Right, i, tr.root())))
        .filter(|&(_, _, r)| !adjacent_to_interval(g, r, iv))
        .min_by_key(|&(_, _, r)| r)
        .expect("condition 6 holds");

    let v = match side {
        Side::Left => g.largest_neighbor_below(u, iv.lo()).filter(|&v| v > u),
        Side::Right => g.smallest_neighbor_above(u, iv.hi()).filter(|&v| v < u),
    };
    let v = v.ok_or_else(|| Error::Invariant(format!("root {u} has no neighbor between itself and {iv}")))?;
    let color = t.slot_color(side, slot);

    let mut next = t.clone();
    let trees = match side {
        Side::Left => &mut next.left,
        Side::Right => &mut next.right,
    };
    let host = trees.iter().position(|tr| tr.contains(v));
    let (case, target) = match host {
        None => {
            trees[slot].attach_above(v, color);
            (GrowthCase::Attach, iv)
        }
        Some(b) => {
            ensure!(b != slot, "parent {v} of root {u} lies in its own tree");
            let (fresh, rest) = match side {
                Side::Left => {
                    let top = trees.iter().flat_map(|tr| tr.nodes()).max().expect("nodes");
                    (top + 1, Interval::try_new(iv.lo() + 1, iv.hi()))
                }
                Side::Right => {
                    let bottom = trees.iter().flat_map(|tr| tr.nodes()).min().expect("nodes");
                    (bottom - 1, Interval::try_new(iv.lo(), iv.hi() - 1))
                }
            };
            let outside = match side {
                Side::Left => fresh <= iv.lo(),
                Side::Right => fresh >= iv.hi(),
            };
            let Some(rest) = rest.filter(|_| outside) else {
                return Err(Error::Degenerate {
                    reason: format!("fresh vertex {fresh} for slot {} collides with interval {iv}", slot + 1),
                    partial: Box::new(deepest_tree_path(g, t)?),
                });
            };
            let grown = std::mem::replace(&mut trees[slot], ColoredTree::singleton(side, fresh));
            trees[b].graft(grown, v, color);
            (GrowthCase::Merge, rest)
        }
    };
    ensure!(
        next.total_size() == t.total_size() + 1,
        "growth changed the total tree size from {} to {}",
        t.total_size(),
        next.total_size()
    );

    let roots = next.roots();
    match gap_k_or_path(g, c, target, &roots, gap)? {
        GapKOrPath::Path { path, certified } => Ok(SurroundingGrowth::Path { path, certified, case }),
        GapKOrPath::Gap { vertex, witness } => {
            next.interval = witness;
            let violated = verify_surrounding(g, &next);
            ensure!(violated.is_empty(), "{} step broke conditions {violated:?}", case.as_str());
            ensure!(witness.len() >= gap, "new interval {witness} is shorter than g = {gap}");
            ensure!(iv.contains_interval(witness), "new interval {witness} leaves {iv}");
            Ok(SurroundingGrowth::Next { surrounding: next, case, gap_vertex: vertex })
        }
    }
}
