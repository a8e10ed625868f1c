#![allow(dead_code)]

use iplab_core::crossing::crosses;
use iplab_core::extract2::{gap_or_path, grow_triple, rho, GapOrPath, GoodTriple, TripleGrowth};
use iplab_core::extractk::{
    gap_k_or_path, grow_surrounding, schedule, verify_surrounding, GapKOrPath, SurroundingGrowth, TreeSurrounding,
};
use iplab_core::{Edge, EdgeColoring, Error, Interval, OrderedGraph, VertexPath};
use rand::Rng;

/// Path `1..=n` plus random chords, each placed in the first of `k` classes
/// (starting from a random one) that it does not cross.
pub fn random_knc(rng: &mut impl Rng, n: usize, k: usize, attempts: usize) -> (OrderedGraph, EdgeColoring) {
    let mut classes: Vec<Vec<Edge>> = vec![Vec::new(); k];
    if n >= 3 {
        for _ in 0..attempts {
            let a = rng.gen_range(1..=n - 2);
            let b = rng.gen_range(a + 2..=n);
            if classes.iter().flatten().any(|&e| e == (a, b)) {
                continue;
            }
            let start = rng.gen_range(0..k);
            if let Some(c) = (0..k).map(|i| (start + i) % k).find(|&c| classes[c].iter().all(|&e| !crosses(e, (a, b)))) {
                classes[c].push((a, b));
            }
        }
    }
    let g = OrderedGraph::new(n, (1..n).map(|i| (i, i + 1)).chain(classes.iter().flatten().copied())).unwrap();
    let colors = g
        .edges()
        .iter()
        .map(|e| classes.iter().position(|cl| cl.contains(e)).map_or(1, |c| c + 1))
        .collect();
    (g, EdgeColoring::new(k, colors).unwrap())
}

/// Arbitrary simple graph on `1..=n` with edge probability `p`.
pub fn random_graph(rng: &mut impl Rng, n: usize, p: f64) -> OrderedGraph {
    let mut edges = Vec::new();
    for u in 1..=n {
        for v in u + 1..=n {
            if rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    OrderedGraph::new(n, edges).unwrap()
}

/// Independent check that `path` is an increasing induced path of `g`.
pub fn naive_induced_increasing(g: &OrderedGraph, path: &[usize]) -> bool {
    if path.is_empty() || path.iter().any(|&v| v == 0 || v > g.n()) {
        return false;
    }
    for i in 0..path.len() {
        for j in i + 1..path.len() {
            if path[i] >= path[j] {
                return false;
            }
            let adjacent = g.edges().contains(&(path[i], path[j]));
            if adjacent != (j == i + 1) {
                return false;
            }
        }
    }
    true
}

/// Runs the good-triple loop step by step and checks the accounting of
/// every step. Returns the number of completed steps.
pub fn drive_triples(g: &OrderedGraph, c: &EdgeColoring) -> usize {
    let n = g.n();
    if n <= 2 {
        return 0;
    }
    let r = rho(n);
    let first = Interval::new(2, n - 1).unwrap();
    let g0 = (first.len() / r).max(1);
    let GapOrPath::Gap { witness, .. } = gap_or_path(g, c, 1, first, n, g0).unwrap() else {
        return 0;
    };
    assert!(witness.len() >= g0);
    let mut t = GoodTriple { u: 1, interval: witness, v: n, left: VertexPath::single(1), right: VertexPath::single(n) };
    let mut steps = 0;
    loop {
        t.check(g).unwrap();
        let gt = (t.interval.len() / r).max(1);
        match grow_triple(g, c, &t, gt).unwrap() {
            TripleGrowth::Path { path, flank } => {
                assert!(naive_induced_increasing(g, path.as_slice()));
                assert!(naive_induced_increasing(g, flank.as_slice()));
                return steps;
            }
            TripleGrowth::Next { triple, .. } => {
                assert_eq!(triple.k(), t.k() + 1);
                assert!(triple.interval.len() >= gt);
                assert!(t.interval.contains_interval(triple.interval));
                t = triple;
                steps += 1;
            }
        }
    }
}

/// Outcome of [`drive_surroundings`].
pub struct SurroundingRun {
    pub steps: usize,
    pub degenerate: bool,
    pub last: Option<TreeSurrounding>,
}

/// Runs the tree-surrounding loop step by step with the floored schedule,
/// checking all six conditions and the size accounting after every step.
pub fn drive_surroundings(g: &OrderedGraph, c: &EdgeColoring, k: usize, floored: bool) -> SurroundingRun {
    let n = g.n();
    let p = k.div_ceil(2);
    let g0 = schedule(n, 0);
    let mut run = SurroundingRun { steps: 0, degenerate: false, last: None };
    let Some(first) = Interval::try_new(p + 1, n.saturating_sub(k - p)).filter(|_| n > k && g0 >= 1) else {
        return run;
    };
    let c = c.widened(k).unwrap();
    let mut s = TreeSurrounding::initial(n, k, p, first);
    match gap_k_or_path(g, &c, first, &s.roots(), g0).unwrap() {
        GapKOrPath::Path { path, .. } => {
            assert!(naive_induced_increasing(g, path.as_slice()));
            return run;
        }
        GapKOrPath::Gap { witness, .. } => s.interval = witness,
    }
    assert_eq!(verify_surrounding(g, &s), Vec::<usize>::new());
    loop {
        let raw = schedule(n, run.steps as u32 + 1);
        let gt = if floored { raw.max(1) } else { raw };
        if gt == 0 {
            break;
        }
        match grow_surrounding(g, &c, &s, gt) {
            Ok(SurroundingGrowth::Path { path, .. }) => {
                assert!(naive_induced_increasing(g, path.as_slice()));
                break;
            }
            Ok(SurroundingGrowth::Next { surrounding, .. }) => {
                assert_eq!(verify_surrounding(g, &surrounding), Vec::<usize>::new());
                assert_eq!(surrounding.total_size(), s.total_size() + 1);
                assert!(surrounding.interval.len() >= gt);
                s = surrounding;
                run.steps += 1;
            }
            Err(Error::Degenerate { partial, .. }) => {
                assert!(naive_induced_increasing(g, partial.path.as_slice()));
                run.degenerate = true;
                break;
            }
            Err(e) => panic!("growth failed: {e}"),
        }
    }
    for tree in s.trees() {
        assert!(naive_induced_increasing(g, tree.deepest_path().as_slice()));
    }
    run.last = Some(s);
    run
}
