//! Seeded random instances.

use iplab_core::crossing::crosses;
use iplab_core::{Edge, EdgeColoring, OrderedGraph};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Random ordered graph along the path `1..=n` whose chords come in `k`
/// non-crossing classes. Up to `attempts` random chords are proposed; each
/// joins the first class it does not cross, starting from a random class,
/// or is dropped.
///
/// Path edges cross nothing and go to class 1.
pub fn random_k_noncrossing(n: usize, k: usize, attempts: usize, seed: u64) -> (OrderedGraph, EdgeColoring) {
    assert!(k >= 1, "need at least one class");
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut classes: Vec<Vec<Edge>> = vec![Vec::new(); k];
    let mut used = std::collections::BTreeSet::new();
    if n >= 3 {
        for _ in 0..attempts {
            let a = rng.gen_range(1..=n - 2);
            let b = rng.gen_range(a + 2..=n);
            let start = rng.gen_range(0..k);
            if used.contains(&(a, b)) {
                continue;
            }
            let free = (0..k)
                .map(|i| (start + i) % k)
                .find(|&c| classes[c].iter().all(|&e| !crosses(e, (a, b))));
            if let Some(c) = free {
                classes[c].push((a, b));
                used.insert((a, b));
            }
        }
    }
    let mut class_of = std::collections::BTreeMap::new();
    for (c, class) in classes.iter().enumerate() {
        for &e in class {
            class_of.insert(e, c + 1);
        }
    }
    let path = (1..n).map(|i| (i, i + 1));
    let g = OrderedGraph::new(n, path.chain(used.iter().copied())).expect("distinct edges");
    let colors = g.edges().iter().map(|e| class_of.get(e).copied().unwrap_or(1)).collect();
    let c = EdgeColoring::new(k, colors).expect("colors in range");
    (g, c)
}

pub fn random_two_noncrossing(n: usize, attempts: usize, seed: u64) -> (OrderedGraph, EdgeColoring) {
    random_k_noncrossing(n, 2, attempts, seed)
}
