use crate::error::{ensure, Error, Result};
use crate::extract2::unhit_run_at_least;
use crate::graph::OrderedGraph;
use crate::interval::Interval;
use crate::noncross::EdgeColoring;
use crate::path::{shortest_increasing_path, VertexPath};

/// A sub-interval on which each `xs[i]` reaches only through color
/// `colors[i]`. The colors are pairwise distinct.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MonoInterval {
    pub interval: Interval,
    pub colors: Vec<usize>,
}

fn check_outside(g: &OrderedGraph, iv: Interval, xs: &[usize]) -> Result<()> {
    g.check_interval(iv)?;
    for (i, &x) in xs.iter().enumerate() {
        g.check_vertex(x)?;
        if iv.contains(x) {
            return Err(Error::InvalidInput(format!("vertex {x} lies inside {iv}")));
        }
        if xs[..i].contains(&x) {
            return Err(Error::InvalidInput(format!("vertex {x} listed twice")));
        }
    }
    Ok(())
}

/// Widens `c` so that it has exactly `k` colors, or rejects it.
pub(crate) fn palette_of(c: &EdgeColoring, k: usize) -> Result<EdgeColoring> {
    if c.k() > k {
        return Err(Error::InvalidInput(format!("{} colors but only {k} vertices", c.k())));
    }
    c.widened(k)
}

/// Sub-interval of `iv` on which every `x` reaches `iv` in a single color,
/// one color per vertex.
///
/// Requires that no `x` misses a run of `g` consecutive vertices of `iv` and
/// that `c` uses at most `xs.len()` colors. Returns `None` when the
/// construction runs out of room. The size bound `|I|/k! - 5kg` is asserted
/// whenever it is positive.
pub fn mono_interval(
    g: &OrderedGraph,
    c: &EdgeColoring,
    iv: Interval,
    xs: &[usize],
    gap: usize,
) -> Result<Option<MonoInterval>> {
    check_outside(g, iv, xs)?;
    if xs.is_empty() || gap == 0 {
        return Err(Error::InvalidInput("need at least one vertex and gap >= 1".into()));
    }
    if let Some(&x) = xs.iter().find(|&&x| unhit_run_at_least(g, x, iv, gap).is_some()) {
        return Err(Error::InvalidInput(format!("vertex {x} misses a run of {gap} vertices of {iv}")));
    }
    let k = xs.len();
    let c = palette_of(c, k)?;
    let palette: Vec<usize> = (1..=k).collect();
    let found = recurse(g, &c, iv, xs, &palette, gap)?;
    if let Some(m) = &found {
        let bound = iv.len() as f64 / factorial(k) - 5.0 * (k * gap) as f64;
        ensure!(
            m.interval.len() >= bound.ceil() as usize,
            "monochromatic interval {} is below the bound {bound}",
            m.interval
        );
        for (&x, &col) in xs.iter().zip(&m.colors) {
            for &y in g.neighbors_in(x, m.interval) {
                ensure!(
                    c.color_of(g, x, y) == Some(col),
                    "edge ({x}, {y}) is not in color {col}; the coloring is not a certificate"
                );
            }
        }
    }
    Ok(found)
}

fn factorial(k: usize) -> f64 {
    (1..=k).map(|i| i as f64).product()
}

fn recurse(
    g: &OrderedGraph,
    c: &EdgeColoring,
    iv: Interval,
    xs: &[usize],
    palette: &[usize],
    gap: usize,
) -> Result<Option<MonoInterval>> {
    let k = xs.len();
    if k == 1 {
        return Ok(Some(MonoInterval { interval: iv, colors: palette.to_vec() }));
    }
    let x = xs[k - 1];
    let blocks = iv.blocks(gap);
    let p = blocks.len();
    let mut e = Vec::with_capacity(p);
    for b in &blocks {
        let y = *g
            .neighbors_in(x, *b)
            .first()
            .ok_or_else(|| Error::Invariant(format!("{x} misses block {b}")))?;
        let col = c.color_of(g, x, y).expect("y is a neighbor");
        ensure!(
            palette.contains(&col),
            "edge ({x}, {y}) uses color {col} outside {palette:?}; the coloring is not a certificate"
        );
        e.push(col);
    }
    // Leftmost a, then its farthest partner.
    let pair = (0..p).find_map(|a| {
        let c = (a + 1..p).rev().find(|&c| e[c] == e[a])?;
        ((c - a + 1) * k >= p).then_some((a, c))
    });
    let Some((a, cc)) = pair else { return Ok(None) };
    if cc < a + 2 {
        return Ok(None);
    }
    let inner = Interval::new(blocks[a + 1].lo(), blocks[cc - 1].hi())?;
    let rest: Vec<usize> = palette.iter().copied().filter(|&q| q != e[a]).collect();
    let Some(sub) = recurse(g, c, inner, &xs[..k - 1], &rest, gap)? else {
        return Ok(None);
    };
    if sub.interval.len() <= 2 * gap {
        return Ok(None);
    }
    let mid = Interval::new(sub.interval.lo() + gap, sub.interval.hi() - gap)?;
    let mut colors = sub.colors;
    colors.push(e[a]);
    Ok(Some(MonoInterval { interval: mid, colors }))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GapKOrPath {
    /// `certified` is the block count the path must reach, when the
    /// monochromatic interval was found.
    Path { path: VertexPath, certified: Option<usize> },
    Gap { vertex: usize, witness: Interval },
}

/// Either some `x` (smallest position first) misses a run of `gap` vertices
/// of `iv`, or an increasing induced path inside `iv`.
///
/// The path crosses the blocks of a monochromatic sub-interval and so has at
/// least one vertex per block. When no such sub-interval exists the path is
/// the shortest increasing path across `iv`, with no certified length.
pub fn gap_k_or_path(
    g: &OrderedGraph,
    c: &EdgeColoring,
    iv: Interval,
    xs: &[usize],
    gap: usize,
) -> Result<GapKOrPath> {
    check_outside(g, iv, xs)?;
    if gap == 0 {
        return Err(Error::InvalidInput("gap must be at least 1".into()));
    }
    let mut order = xs.to_vec();
    order.sort_unstable();
    for &x in &order {
        if let Some(witness) = unhit_run_at_least(g, x, iv, gap) {
            return Ok(GapKOrPath::Gap { vertex: x, witness });
        }
    }
    let across = |span: Interval| -> Result<VertexPath> {
        shortest_increasing_path(g, span.lo(), span.hi())?
            .ok_or_else(|| Error::InvalidInput(format!("no increasing path across {span}")))
    };
    match mono_interval(g, c, iv, xs, gap)? {
        Some(m) => {
            let blocks = m.interval.len() / gap;
            let path = across(m.interval)?;
            ensure!(
                path.len() >= blocks,
                "path across {} has {} vertices for {blocks} blocks",
                m.interval,
                path.len()
            );
            Ok(GapKOrPath::Path { path, certified: Some(blocks) })
        }
        None => Ok(GapKOrPath::Path { path: across(iv)?, certified: None }),
    }
}
