//! Increasing induced paths in k-non-crossing ordered graphs, grown from
//! colored trees that surround a shrinking interval.

mod bounds;
mod mono;
mod surround;
mod tree;

pub use bounds::{binomial, certified_depth, depth_lower_bound, tree_size_bound};
pub use mono::{gap_k_or_path, mono_interval, GapKOrPath, MonoInterval};
pub use surround::{grow_surrounding, GrowthCase, SurroundingGrowth};
pub use tree::{verify_surrounding, ColoredTree, Side, TreeSurrounding};

use crate::error::{ensure, Error, Result};
use crate::graph::OrderedGraph;
use crate::interval::Interval;
use crate::noncross::{partition_violation, EdgeColoring};
use crate::path::{shortest_increasing_path, verify_induced_increasing, VertexPath};
use crate::report::{Branch, Method, PathReport, SurroundingStep, TraceStep};

/// `⌊n / (2 (log₂ n)^(t+1))⌋`, the interval target of step `t`.
pub fn schedule(n: usize, t: u32) -> usize {
    if n < 2 {
        return 0;
    }
    let l = (n as f64).log2();
    (n as f64 / (2.0 * l.powi(t as i32 + 1))).floor() as usize
}

/// When the growth loop stops.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum GrowthSchedule {
    /// Stop once the interval target drops below 1.
    #[default]
    Theorem,
    /// Floor the target at 1 and keep growing until the gap step yields a
    /// path or a merge runs out of room.
    Floored,
}

struct Run {
    trace: Vec<TraceStep>,
    surrounding_trace: Vec<SurroundingStep>,
    candidates: Vec<(Method, VertexPath)>,
    steps: usize,
}

impl Run {
    fn branch(s: &TreeSurrounding, vertex: usize) -> Branch {
        if s.left.iter().any(|t| t.root() == vertex) {
            Branch::GapU
        } else {
            Branch::GapV
        }
    }

    /// Best candidate plus the depth certificate of `s`.
    fn finish(mut self, g: &OrderedGraph, s: Option<&TreeSurrounding>, p: usize) -> Result<PathReport> {
        let mut guarantee = 0;
        let mut certificate = None;
        if let Some(s) = s {
            for tree in s.trees() {
                let path = tree.deepest_path();
                ensure!(
                    verify_induced_increasing(g, &path),
                    "root-to-leaf path {:?} is not induced",
                    path.as_slice()
                );
                let depth = path.len();
                ensure!(
                    tree.size() as u64 <= tree_size_bound(depth, tree.cutwidth()),
                    "tree of size {} and depth {depth} exceeds the cutwidth bound",
                    tree.size()
                );
                ensure!(
                    tree.size() as u64 <= tree_size_bound(depth, p),
                    "tree of size {} and depth {depth} exceeds the {p}-color bound",
                    tree.size()
                );
                let cert = certified_depth(tree.size(), p);
                ensure!(depth >= cert, "tree depth {depth} is below the certified {cert}");
                guarantee = guarantee.max(cert);
                self.candidates.push((Method::TreeGrowth, path));
            }
            let largest = s.trees().map(|t| t.size()).max().expect("trees");
            ensure!(
                largest * s.k >= s.total_size(),
                "largest tree {largest} is below the average of {} over {} trees",
                s.total_size(),
                s.k
            );
            certificate = Some(depth_lower_bound(largest, p));
        }
        let (method, path) = self
            .candidates
            .into_iter()
            .reduce(|best, c| if c.1.len() > best.1.len() { c } else { best })
            .expect("baseline candidate");
        let mut report = PathReport::verified(g, method, path, guarantee, self.steps, self.trace)?;
        report.surrounding_trace = self.surrounding_trace;
        report.depth_certificate = certificate;
        Ok(report)
    }
}

/// Grows a tree surrounding until the interval target drops below 1 or the
/// gap step yields a path, then returns the best of that path, every
/// root-to-leaf tree path, and the shortest increasing path from 1 to n.
///
/// `c` must be a valid certificate with at most `k` colors. Instances too
/// small to start the schedule fall back to the shortest increasing path.
/// A merge step with no room for the fresh vertex stops the run with
/// [`Error::Degenerate`], carrying the best path found so far.
pub fn extract_knc(g: &OrderedGraph, c: &EdgeColoring, k: usize) -> Result<PathReport> {
    extract_knc_with(g, c, k, GrowthSchedule::Theorem)
}

/// [`extract_knc`] with an explicit stopping rule.
pub fn extract_knc_with(g: &OrderedGraph, c: &EdgeColoring, k: usize, mode: GrowthSchedule) -> Result<PathReport> {
    g.require_ham_path()?;
    if k == 0 {
        return Err(Error::InvalidInput("k must be at least 1".into()));
    }
    if c.k() > k {
        return Err(Error::InvalidInput(format!("coloring has {} colors, more than k = {k}", c.k())));
    }
    if let Some(v) = partition_violation(g, c) {
        return Err(Error::InvalidInput(format!("coloring is not a valid certificate: {v:?}")));
    }
    let c = c.widened(k)?;
    let n = g.n();
    let p = k.div_ceil(2);
    let baseline = shortest_increasing_path(g, 1, n)?.expect("Hamiltonian path reaches n");
    let mut run = Run {
        trace: Vec::new(),
        surrounding_trace: Vec::new(),
        candidates: vec![(Method::Lifting, baseline)],
        steps: 0,
    };
    let g0 = schedule(n, 0);
    let Some(first) = Interval::try_new(p + 1, n.saturating_sub(k - p)).filter(|_| n > k && g0 >= 1) else {
        return run.finish(g, None, p);
    };

    let mut s = TreeSurrounding::initial(n, k, p, first);
    match gap_k_or_path(g, &c, first, &s.roots(), g0)? {
        GapKOrPath::Path { path, .. } => {
            run.trace.push(TraceStep { step: 0, interval_len: first.len(), g: g0, branch: Branch::Path });
            run.candidates.push((Method::GapShortcut, path));
            return run.finish(g, Some(&s), p);
        }
        GapKOrPath::Gap { vertex, witness } => {
            run.trace.push(TraceStep {
                step: 0,
                interval_len: first.len(),
                g: g0,
                branch: Run::branch(&s, vertex),
            });
            s.interval = witness;
            let violated = verify_surrounding(g, &s);
            ensure!(violated.is_empty(), "initial surrounding violates {violated:?}");
        }
    }

    loop {
        let gt = match mode {
            GrowthSchedule::Theorem => schedule(n, run.steps as u32 + 1),
            GrowthSchedule::Floored => schedule(n, run.steps as u32 + 1).max(1),
        };
        if gt == 0 {
            return run.finish(g, Some(&s), p);
        }
        let before = s.interval.len();
        match grow_surrounding(g, &c, &s, gt) {
            Ok(SurroundingGrowth::Path { path, case, .. }) => {
                run.trace.push(TraceStep {
                    step: run.steps + 1,
                    interval_len: before,
                    g: gt,
                    branch: Branch::Path,
                });
                run.surrounding_trace.push(SurroundingStep {
                    step: run.steps + 1,
                    interval_len: before,
                    g: gt,
                    tree_sizes: s.tree_sizes(),
                    case: case.as_str(),
                });
                run.candidates.push((Method::GapShortcut, path));
                return run.finish(g, Some(&s), p);
            }
            Ok(SurroundingGrowth::Next { surrounding, case, gap_vertex }) => {
                ensure!(
                    surrounding.total_size() == s.total_size() + 1,
                    "step {} changed the total tree size by other than 1",
                    run.steps + 1
                );
                ensure!(surrounding.interval.len() >= gt, "interval shrank below g_t = {gt}");
                run.steps += 1;
                run.trace.push(TraceStep {
                    step: run.steps,
                    interval_len: before,
                    g: gt,
                    branch: Run::branch(&surrounding, gap_vertex),
                });
                run.surrounding_trace.push(SurroundingStep {
                    step: run.steps,
                    interval_len: surrounding.interval.len(),
                    g: gt,
                    tree_sizes: surrounding.tree_sizes(),
                    case: case.as_str(),
                });
                s = surrounding;
            }
            Err(Error::Degenerate { reason, .. }) => {
                let partial = run.finish(g, Some(&s), p)?;
                return Err(Error::Degenerate { reason, partial: Box::new(partial) });
            }
            Err(e) => return Err(e),
        }
    }
}
