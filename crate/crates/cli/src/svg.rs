//! Arc diagrams: vertices on a horizontal baseline, edges as semicircles.
//!
//! Odd color classes are drawn above the baseline and even ones below, each
//! class with its own stroke. All coordinates are integers.

use std::fmt::Write;

use iplab_core::{EdgeColoring, OrderedGraph};

const STEP: usize = 40;
const MARGIN: usize = 20;
const PALETTE: [&str; 8] = [
    "#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b", "#e377c2", "#17becf",
];

fn x_of(v: usize) -> usize {
    MARGIN + (v - 1) * STEP
}

pub fn arc_diagram(g: &OrderedGraph, colors: Option<&EdgeColoring>) -> String {
    let n = g.n();
    let color_of = |i: usize| colors.map_or(1, |c| c.colors()[i]);
    let radius = |&(u, v): &(usize, usize)| (v - u) * STEP / 2;
    let mut up = 0;
    let mut down = 0;
    for (i, e) in g.edges().iter().enumerate() {
        if color_of(i) % 2 == 1 {
            up = up.max(radius(e));
        } else {
            down = down.max(radius(e));
        }
    }
    let width = 2 * MARGIN + n.saturating_sub(1) * STEP;
    let base = MARGIN + up;
    let height = base + down + MARGIN;

    let mut s = String::new();
    writeln!(
        s,
        r##"<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" viewBox="0 0 {width} {height}">"##
    )
    .unwrap();
    if n > 0 {
        writeln!(
            s,
            r##"<line x1="{}" y1="{base}" x2="{}" y2="{base}" stroke="#999" stroke-width="1"/>"##,
            x_of(1),
            x_of(n)
        )
        .unwrap();
    }
    for (i, &(u, v)) in g.edges().iter().enumerate() {
        let col = color_of(i);
        let r = radius(&(u, v));
        let sweep = if col % 2 == 1 { 1 } else { 0 };
        writeln!(
            s,
            r##"<path d="M {} {base} A {r} {r} 0 0 {sweep} {} {base}" fill="none" stroke="{}" stroke-width="2" data-color="{col}"/>"##,
            x_of(u),
            x_of(v),
            PALETTE[(col - 1) % PALETTE.len()]
        )
        .unwrap();
    }
    for v in 1..=n {
        writeln!(s, r##"<circle cx="{}" cy="{base}" r="4" fill="black"/>"##, x_of(v)).unwrap();
        writeln!(
            s,
            r##"<text x="{}" y="{}" font-size="10" text-anchor="middle">{v}</text>"##,
            x_of(v),
            base + 14
        )
        .unwrap();
    }
    s.push_str("</svg>\n");
    s
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn crossing_pair_draws_two_overlapping_arcs() {
        let g = OrderedGraph::new(4, [(1, 3), (2, 4)]).unwrap();
        let svg = arc_diagram(&g, None);
        assert_eq!(svg.matches("<path").count(), 2);
        assert!(svg.contains("M 20 60 A 40 40 0 0 1 100 60"));
        assert!(svg.contains("M 60 60 A 40 40 0 0 1 140 60"));
    }

    #[test]
    fn even_classes_go_below() {
        let g = OrderedGraph::new(3, [(1, 2), (1, 3)]).unwrap();
        let c = EdgeColoring::new(2, vec![1, 2]).unwrap();
        let svg = arc_diagram(&g, Some(&c));
        assert!(svg.contains(r##"0 0 0 100 40" fill="none" stroke="#d62728""##));
    }

    #[test]
    fn edgeless_graph_is_baseline_only() {
        let g = OrderedGraph::new(3, []).unwrap();
        let svg = arc_diagram(&g, None);
        assert_eq!(svg.matches("<path").count(), 0);
        assert_eq!(svg.matches("<line").count(), 1);
        assert_eq!(svg.matches("<circle").count(), 3);
    }
}
