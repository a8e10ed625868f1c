//! Increasing induced paths in 2-non-crossing ordered graphs, and the
//! reductions from planar and bounded-genus graphs.
//!
//! Gap thresholds are expressed through run lengths: a vertex `x` *has a
//! gap of `g`-run* towards `I` when some run of `g` consecutive vertices of
//! `I` avoids `N(x)`. When no such run exists every block of `g` vertices of
//! `I` contains a neighbor of `x`, which is what the block arguments need.

use serde::Serialize;

use crate::error::{ensure, Error, Result};
use crate::graph::OrderedGraph;
use crate::interval::Interval;
use crate::metrics::{adjacent_to_interval, largest_unhit_run};
use crate::noncross::{partition_violation, two_partition_or_cycle, EdgeColoring};
use crate::path::{shortest_increasing_path, verify_induced_increasing, VertexPath};
use crate::report::{Branch, Method, PathReport, TraceStep};

/// `max(2, ⌈log₂n / log₂log₂n⌉)`, and 2 for `n < 16`.
pub fn rho(n: usize) -> usize {
    if n < 16 {
        return 2;
    }
    let l = (n as f64).log2();
    ((l / l.log2()).ceil() as usize).max(2)
}

/// Leftmost longest run of `iv` avoiding `N(x)`, if it has at least `len`
/// vertices.
pub fn unhit_run_at_least(g: &OrderedGraph, x: usize, iv: Interval, len: usize) -> Option<Interval> {
    largest_unhit_run(g, x, iv).filter(|r| r.len() >= len)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GapOrPath {
    Path(VertexPath),
    Gap { vertex: usize, witness: Interval },
}

/// Either one of `u < iv < v` misses a run of `gap` vertices of `iv` (left
/// vertex preferred), or an increasing induced path through the middle
/// blocks of `iv` with at least `⌊|iv|/gap⌋ − 2` vertices.
pub fn gap_or_path(
    g: &OrderedGraph,
    c: &EdgeColoring,
    u: usize,
    iv: Interval,
    v: usize,
    gap: usize,
) -> Result<GapOrPath> {
    g.check_interval(iv)?;
    if !(u < iv.lo() && iv.hi() < v && v <= g.n()) {
        return Err(Error::InvalidInput(format!("need u < I < v, got u={u}, I={iv}, v={v}")));
    }
    if gap == 0 {
        return Err(Error::InvalidInput("gap must be at least 1".into()));
    }
    for x in [u, v] {
        if let Some(witness) = unhit_run_at_least(g, x, iv, gap) {
            return Ok(GapOrPath::Gap { vertex: x, witness });
        }
    }
    let blocks = iv.blocks(gap);
    let p = blocks.len();
    if p < 4 {
        return Ok(GapOrPath::Path(trivial_edge(iv)));
    }
    check_split_colors(g, c, u, v, &blocks)?;
    let s = blocks[1].lo();
    let t = blocks[p - 2].hi();
    let path = shortest_increasing_path(g, s, t)?
        .ok_or_else(|| Error::InvalidInput("no increasing path across the middle blocks".into()))?;
    ensure!(
        path.len() + 2 >= p,
        "middle-block path has {} vertices for {p} blocks of size {gap}",
        path.len()
    );
    Ok(GapOrPath::Path(path))
}

/// A Hamiltonian edge touching `iv`.
fn trivial_edge(iv: Interval) -> VertexPath {
    if iv.len() >= 2 {
        VertexPath::new(vec![iv.lo(), iv.lo() + 1])
    } else {
        VertexPath::new(vec![iv.lo() - 1, iv.lo()])
    }
}

/// With every block hit by both `u` and `v` and at least four blocks, a
/// valid 2-class certificate must put all edges from `u` into the middle
/// blocks in one class and all edges from `v` in the other.
fn check_split_colors(g: &OrderedGraph, c: &EdgeColoring, u: usize, v: usize, blocks: &[Interval]) -> Result<()> {
    let p = blocks.len();
    let class_of = |x: usize, region: Interval| -> Result<Option<usize>> {
        let mut seen = None;
        for &y in g.neighbors_in(x, region) {
            let col = c.color_of(g, x, y);
            match (seen, col) {
                (_, None) => return Err(Error::InvalidInput("coloring does not match the graph".into())),
                (None, Some(k)) => seen = Some(k),
                (Some(a), Some(b)) if a != b => {
                    return Err(Error::Invariant(format!(
                        "edges from {x} into {region} use two classes; the coloring is not a 2-non-crossing certificate"
                    )))
                }
                _ => {}
            }
        }
        Ok(seen)
    };
    let middle = Interval::new(blocks[1].lo(), blocks[p - 2].hi())?;
    let cu = class_of(u, Interval::new(blocks[1].lo(), blocks[p - 1].hi())?)?;
    let cv = class_of(v, Interval::new(blocks[0].lo(), blocks[p - 2].hi())?)?;
    ensure!(
        cu.is_some() && cv.is_some() && cu != cv,
        "edges from {u} and {v} into {middle} share a class; the coloring is not a 2-non-crossing certificate"
    );
    Ok(())
}

/// The `(u, I, v)` invariant with its flank paths: `left` ends at `u`,
/// `right` starts at `v`, and only one of `u`, `v` may see `I`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GoodTriple {
    pub u: usize,
    pub interval: Interval,
    pub v: usize,
    pub left: VertexPath,
    pub right: VertexPath,
}

impl GoodTriple {
    pub fn k(&self) -> usize {
        self.left.len() + self.right.len()
    }

    /// Checks every defining condition; `Err` names the first failure.
    pub fn check(&self, g: &OrderedGraph) -> Result<()> {
        let iv = self.interval;
        ensure!(self.u < iv.lo() && iv.hi() < self.v, "triple order u < I < v fails");
        ensure!(
            !adjacent_to_interval(g, self.u, iv) || !adjacent_to_interval(g, self.v, iv),
            "both {} and {} see {iv}",
            self.u,
            self.v
        );
        ensure!(verify_induced_increasing(g, &self.left), "left flank is not increasing induced");
        ensure!(verify_induced_increasing(g, &self.right), "right flank is not increasing induced");
        ensure!(self.left.last() == Some(self.u), "left flank does not end at u");
        ensure!(self.right.first() == Some(self.v), "right flank does not start at v");
        let inner = self.left.as_slice()[..self.left.len() - 1]
            .iter()
            .chain(&self.right.as_slice()[1..]);
        for &x in inner {
            ensure!(!adjacent_to_interval(g, x, iv), "flank vertex {x} sees {iv}");
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum TripleGrowth {
    /// The gap lemma produced a path. `flank` is the grown side extended by
    /// its new vertex, which is an increasing induced path as well.
    Path { path: VertexPath, flank: VertexPath },
    Next { triple: GoodTriple, branch: Branch },
}

/// One growth step on a valid triple.
///
/// Grows on the side whose endpoint misses `I` (the `u` side when both do):
/// the new flank vertex is the endpoint's nearest neighbor outside `I` on
/// its own side, then the gap lemma runs between it and the other endpoint.
pub fn grow_triple(g: &OrderedGraph, c: &EdgeColoring, t: &GoodTriple, gap: usize) -> Result<TripleGrowth> {
    let iv = t.interval;
    let grow_left = !adjacent_to_interval(g, t.u, iv);
    ensure!(
        grow_left || !adjacent_to_interval(g, t.v, iv),
        "triple has both endpoints adjacent to {iv}"
    );
    let next = if grow_left {
        let u2 = g.largest_neighbor_below(t.u, iv.lo());
        ensure!(u2.is_some_and(|x| x > t.u), "{} has no neighbor between itself and {iv}", t.u);
        let u2 = u2.unwrap();
        let mut left = t.left.clone();
        left.0.push(u2);
        match gap_or_path(g, c, u2, iv, t.v, gap)? {
            GapOrPath::Path(path) => return Ok(TripleGrowth::Path { path, flank: left }),
            GapOrPath::Gap { vertex, witness } => TripleGrowth::Next {
                triple: GoodTriple {
                    u: u2,
                    interval: witness,
                    v: t.v,
                    left,
                    right: t.right.clone(),
                },
                branch: if vertex == u2 { Branch::GapU } else { Branch::GapV },
            },
        }
    } else {
        let v2 = g.smallest_neighbor_above(t.v, iv.hi());
        ensure!(v2.is_some_and(|x| x < t.v), "{} has no neighbor between {iv} and itself", t.v);
        let v2 = v2.unwrap();
        let mut right = vec![v2];
        right.extend_from_slice(t.right.as_slice());
        let right = VertexPath::new(right);
        match gap_or_path(g, c, t.u, iv, v2, gap)? {
            GapOrPath::Path(path) => return Ok(TripleGrowth::Path { path, flank: right }),
            GapOrPath::Gap { vertex, witness } => TripleGrowth::Next {
                triple: GoodTriple {
                    u: t.u,
                    interval: witness,
                    v: v2,
                    left: t.left.clone(),
                    right,
                },
                branch: if vertex == t.u { Branch::GapU } else { Branch::GapV },
            },
        }
    };
    if let TripleGrowth::Next { triple, .. } = &next {
        triple.check(g)?;
        ensure!(triple.k() == t.k() + 1, "growth changed |L|+|R| by {} instead of 1", triple.k() as isize - t.k() as isize);
        ensure!(triple.interval.len() >= gap, "new interval {} is shorter than g = {gap}", triple.interval);
        ensure!(iv.contains_interval(triple.interval), "new interval leaves the old one");
    }
    Ok(next)
}

fn require_certificate(g: &OrderedGraph, c: &EdgeColoring, max_k: usize) -> Result<()> {
    if c.k() > max_k {
        return Err(Error::InvalidInput(format!("expected at most {max_k} colors, got {}", c.k())));
    }
    if let Some(v) = partition_violation(g, c) {
        return Err(Error::InvalidInput(format!("coloring is not a valid certificate: {v:?}")));
    }
    Ok(())
}

fn pick_best(candidates: Vec<(Method, VertexPath)>) -> (Method, VertexPath) {
    candidates
        .into_iter()
        .reduce(|best, c| if c.1.len() > best.1.len() { c } else { best })
        .expect("at least one candidate")
}

/// Runs the good-triple growth loop on a 2-non-crossing graph certified by
/// `c` and returns the best increasing induced path it meets.
///
/// The certified guarantee is `⌊t/2⌋` for `t` completed growth steps.
pub fn extract_2nc(g: &OrderedGraph, c: &EdgeColoring) -> Result<PathReport> {
    g.require_ham_path()?;
    require_certificate(g, c, 2)?;
    let n = g.n();
    let baseline = shortest_increasing_path(g, 1, n)?.expect("Hamiltonian path reaches n");
    if n <= 2 {
        return PathReport::verified(g, Method::Lifting, baseline, n, 0, Vec::new());
    }
    let r = rho(n);
    let mut candidates = Vec::new();
    let mut trace = Vec::new();
    let first = Interval::new(2, n - 1)?;
    let g0 = (first.len() / r).max(1);
    let mut steps = 0;
    match gap_or_path(g, c, 1, first, n, g0)? {
        GapOrPath::Path(p) => {
            trace.push(TraceStep { step: 0, interval_len: first.len(), g: g0, branch: Branch::Path });
            candidates.push((Method::GapShortcut, p));
        }
        GapOrPath::Gap { vertex, witness } => {
            trace.push(TraceStep {
                step: 0,
                interval_len: first.len(),
                g: g0,
                branch: if vertex == 1 { Branch::GapU } else { Branch::GapV },
            });
            let mut triple = GoodTriple {
                u: 1,
                interval: witness,
                v: n,
                left: VertexPath::single(1),
                right: VertexPath::single(n),
            };
            triple.check(g)?;
            loop {
                let gt = (triple.interval.len() / r).max(1);
                match grow_triple(g, c, &triple, gt)? {
                    TripleGrowth::Path { path, flank } => {
                        trace.push(TraceStep {
                            step: steps + 1,
                            interval_len: triple.interval.len(),
                            g: gt,
                            branch: Branch::Path,
                        });
                        candidates.push((Method::GapShortcut, path));
                        candidates.push((Method::TripleLoop, flank));
                        break;
                    }
                    TripleGrowth::Next { triple: next, branch } => {
                        steps += 1;
                        trace.push(TraceStep {
                            step: steps,
                            interval_len: triple.interval.len(),
                            g: gt,
                            branch,
                        });
                        triple = next;
                    }
                }
            }
            candidates.push((Method::TripleLoop, triple.left.clone()));
            candidates.push((Method::TripleLoop, triple.right.clone()));
        }
    }
    candidates.push((Method::Lifting, baseline));
    let (method, path) = pick_best(candidates);
    PathReport::verified(g, method, path, steps / 2, steps, trace)
}

/// Outcome of [`reduce_to_2nc`].
#[derive(Clone, Debug)]
pub enum Reduction {
    /// Every edge is short, so the shortest increasing path from 1 to n has
    /// at least `k_target` vertices.
    Path(VertexPath),
    /// A long edge spans `interval`; its induced subgraph (re-indexed from 1)
    /// is 2-non-crossing via `coloring`.
    Interval { interval: Interval, coloring: EdgeColoring },
}

/// The longest edge (leftmost on ties), as `(lo, hi)`.
fn longest_edge(g: &OrderedGraph) -> Option<(usize, usize)> {
    g.edges()
        .iter()
        .copied()
        .reduce(|best, e| if e.1 - e.0 > best.1 - best.0 { e } else { best })
}

fn two_partition_interval(g: &OrderedGraph, iv: Interval) -> Result<(OrderedGraph, EdgeColoring)> {
    let sub = g.induced(iv)?;
    let shift = iv.lo() - 1;
    match two_partition_or_cycle(&sub) {
        Ok(c) => Ok((sub, c)),
        Err(cycle) => Err(Error::NotTwoPartitionable {
            lo: iv.lo(),
            hi: iv.hi(),
            cycle: cycle.0.into_iter().map(|(a, b)| (a + shift, b + shift)).collect(),
        }),
    }
}

/// Either a long shortest increasing path, or an interval spanned by the
/// longest edge whose induced subgraph splits into two non-crossing classes.
pub fn reduce_to_2nc(g: &OrderedGraph, k_target: usize) -> Result<Reduction> {
    g.require_ham_path()?;
    if k_target == 0 {
        return Err(Error::InvalidInput("k_target must be at least 1".into()));
    }
    let n = g.n();
    match longest_edge(g) {
        Some((i, j)) if (j - i) * k_target > n - 1 => {
            let iv = Interval::new(i, j)?;
            let (_, coloring) = two_partition_interval(g, iv)?;
            Ok(Reduction::Interval { interval: iv, coloring })
        }
        _ => {
            let p = shortest_increasing_path(g, 1, n)?.expect("Hamiltonian path reaches n");
            ensure!(
                p.len() >= k_target.min(n),
                "short edges only, yet the shortest increasing path has {} < {k_target} vertices",
                p.len()
            );
            Ok(Reduction::Path(p))
        }
    }
}

/// Increasing induced path of a planar graph ordered along a Hamiltonian path.
///
/// Reduces to the 2-non-crossing interval spanned by the longest edge. When
/// the lifting branch already certifies its bound, the interval is still
/// tried if it happens to be 2-non-crossing, and the better path is kept.
pub fn extract_planar(g: &OrderedGraph) -> Result<PathReport> {
    g.require_ham_path()?;
    let n = g.n();
    let k_target = rho(n).div_ceil(2);
    let baseline = shortest_increasing_path(g, 1, n)?.expect("Hamiltonian path reaches n");
    let mut best = PathReport::verified(g, Method::Lifting, baseline, 0, 0, Vec::new())?;
    let mut guarantee = 0;

    let interval = match reduce_to_2nc(g, k_target)? {
        Reduction::Path(_) => {
            guarantee = k_target.min(n);
            longest_edge(g)
                .map(|(i, j)| Interval::new(i, j))
                .transpose()?
                .and_then(|iv| two_partition_interval(g, iv).ok().map(|(sub, c)| (iv, sub, c)))
        }
        Reduction::Interval { interval, coloring } => Some((interval, g.induced(interval)?, coloring)),
    };
    if let Some((iv, sub, c)) = interval {
        let inner = extract_2nc(&sub, &c)?.lifted(g, iv.lo() - 1)?;
        guarantee = guarantee.max(inner.guarantee);
        if inner.length > best.length {
            best = inner;
        }
    }
    best.guarantee = guarantee;
    ensure!(best.length >= best.guarantee, "planar extraction fell below its guarantee");
    Ok(best)
}

/// Splits `[1, n]` into `genus + 1` intervals and extracts from the best one
/// that passes the two-partition test.
pub fn extract_genus(g: &OrderedGraph, genus: usize) -> Result<PathReport> {
    g.require_ham_path()?;
    let n = g.n();
    let parts = genus + 1;
    if n < 2 * parts {
        return Err(Error::InvalidInput(format!("need n >= 2(genus + 1) = {}, got n = {n}", 2 * parts)));
    }
    let q = n / parts;
    let extra = n % parts;
    let mut best: Option<PathReport> = None;
    let mut lo = 1;
    for i in 0..parts {
        let len = q + usize::from(i < extra);
        let iv = Interval::new(lo, lo + len - 1)?;
        lo += len;
        let sub = g.induced(iv)?;
        match extract_planar(&sub) {
            Ok(r) => {
                let r = r.lifted(g, iv.lo() - 1)?;
                if best.as_ref().is_none_or(|b| r.length > b.length) {
                    best = Some(r);
                }
            }
            Err(Error::NotTwoPartitionable { .. }) => {}
            Err(e) => return Err(e),
        }
    }
    best.ok_or(Error::AllIntervalsFailed)
}
