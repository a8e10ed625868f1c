//! Text formats.
//!
//! `.og`: a header `og <n> <m>` followed by `m` lines `<u> <v>` with
//! `1 <= u < v <= n`. `.ogc`: a header `ogc <n> <m> <k>` followed by `m` lines
//! `<u> <v> <c>` covering exactly the edges of the matching `.og`. In both,
//! `#` starts a comment and blank lines are ignored.

use std::collections::HashSet;
use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::graph::{Edge, OrderedGraph};
use crate::noncross::EdgeColoring;

fn format_err(line: usize, msg: impl Into<String>) -> Error {
    Error::Format { line, msg: msg.into() }
}

/// Non-empty lines with comments stripped, paired with 1-based line numbers.
fn content_lines(text: &str) -> impl Iterator<Item = (usize, Vec<&str>)> {
    text.lines().enumerate().filter_map(|(i, l)| {
        let body = l.split('#').next().unwrap_or("");
        let fields: Vec<&str> = body.split_whitespace().collect();
        (!fields.is_empty()).then_some((i + 1, fields))
    })
}

fn parse_num(line: usize, s: &str, what: &str) -> Result<usize> {
    s.parse().map_err(|_| format_err(line, format!("{what} is not a non-negative integer: {s:?}")))
}

fn split_header<'a>(
    lines: &mut impl Iterator<Item = (usize, Vec<&'a str>)>,
    tag: &str,
    fields: &[&str],
) -> Result<(usize, Vec<usize>)> {
    let (line, words) = lines.next().ok_or_else(|| format_err(1, format!("missing `{tag}` header")))?;
    if words[0] != tag || words.len() != fields.len() + 1 {
        return Err(format_err(line, format!("expected header `{tag} {}`", fields.iter().map(|f| format!("<{f}>")).collect::<Vec<_>>().join(" "))));
    }
    let nums = words[1..]
        .iter()
        .zip(fields)
        .map(|(w, f)| parse_num(line, w, f))
        .collect::<Result<_>>()?;
    Ok((line, nums))
}

fn parse_edge(line: usize, words: &[&str], n: usize) -> Result<Edge> {
    let u = parse_num(line, words[0], "endpoint")?;
    let v = parse_num(line, words[1], "endpoint")?;
    if !(1 <= u && u < v && v <= n) {
        return Err(format_err(line, format!("edge ({u}, {v}) must satisfy 1 <= u < v <= {n}")));
    }
    Ok((u, v))
}

/// Parses an `.og` file. With `synthesize_path`, missing consecutive edges
/// `(i, i + 1)` are added after parsing.
pub fn parse_og(text: &str, synthesize_path: bool) -> Result<OrderedGraph> {
    let mut lines = content_lines(text);
    let (_, h) = split_header(&mut lines, "og", &["n", "m"])?;
    let (n, m) = (h[0], h[1]);
    let mut seen = HashSet::with_capacity(m);
    let mut edges = Vec::with_capacity(m);
    let mut last_line = 1;
    for (line, words) in lines {
        last_line = line;
        if words.len() != 2 {
            return Err(format_err(line, "expected `<u> <v>`"));
        }
        let e = parse_edge(line, &words, n)?;
        if !seen.insert(e) {
            return Err(format_err(line, format!("duplicate edge ({}, {})", e.0, e.1)));
        }
        if edges.len() == m {
            return Err(format_err(line, format!("more than the declared {m} edges")));
        }
        edges.push(e);
    }
    if edges.len() != m {
        return Err(format_err(last_line, format!("declared {m} edges, found {}", edges.len())));
    }
    let g = OrderedGraph::new(n, edges)?;
    Ok(if synthesize_path { g.with_hamiltonian_path() } else { g })
}

pub fn write_og(g: &OrderedGraph) -> String {
    let mut s = format!("og {} {}\n", g.n(), g.m());
    for &(u, v) in g.edges() {
        let _ = writeln!(s, "{u} {v}");
    }
    s
}

/// Parses an `.ogc` file against the graph it colors.
pub fn parse_ogc(text: &str, g: &OrderedGraph) -> Result<EdgeColoring> {
    let mut lines = content_lines(text);
    let (hline, h) = split_header(&mut lines, "ogc", &["n", "m", "k"])?;
    let (n, m, k) = (h[0], h[1], h[2]);
    if n != g.n() || m != g.m() {
        return Err(format_err(
            hline,
            format!("header says n={n}, m={m} but the graph has n={}, m={}", g.n(), g.m()),
        ));
    }
    let mut colors = vec![0usize; m];
    let mut last_line = hline;
    let mut count = 0;
    for (line, words) in lines {
        last_line = line;
        if words.len() != 3 {
            return Err(format_err(line, "expected `<u> <v> <c>`"));
        }
        let (u, v) = parse_edge(line, &words, n)?;
        let c = parse_num(line, words[2], "color")?;
        if !(1..=k).contains(&c) {
            return Err(format_err(line, format!("color {c} outside 1..={k}")));
        }
        let idx = g
            .edge_index(u, v)
            .ok_or_else(|| format_err(line, format!("({u}, {v}) is not an edge of the graph")))?;
        if colors[idx] != 0 {
            return Err(format_err(line, format!("edge ({u}, {v}) colored twice")));
        }
        colors[idx] = c;
        count += 1;
    }
    if count != m {
        return Err(format_err(last_line, format!("colored {count} of {m} edges")));
    }
    EdgeColoring::new(k, colors)
}

pub fn write_ogc(g: &OrderedGraph, c: &EdgeColoring) -> String {
    let mut s = format!("ogc {} {} {}\n", g.n(), g.m(), c.k());
    for (&(u, v), col) in g.edges().iter().zip(c.colors()) {
        let _ = writeln!(s, "{u} {v} {col}");
    }
    s
}
