mod common;

use common::{drive_surroundings, drive_triples, naive_induced_increasing, random_knc};
use iplab_core::extract2::{extract_2nc, extract_genus, extract_planar};
use iplab_core::extractk::{extract_knc, extract_knc_with, GrowthSchedule};
use iplab_core::extremal::{build_g, build_u, ip_upper_bound, Family};
use iplab_core::oracle::{longest_increasing_induced_path, longest_induced_path};
use iplab_core::{Error, PathReport};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

const BUDGET: u64 = 50_000_000;

fn length_of(r: Result<PathReport, Error>) -> Option<usize> {
    match r {
        Ok(r) => Some(r.length),
        Err(Error::Degenerate { partial, .. }) => Some(partial.length),
        Err(Error::NotTwoPartitionable { .. } | Error::AllIntervalsFailed) => None,
        Err(e) => panic!("{e}"),
    }
}

fn checked(g: &iplab_core::OrderedGraph, r: Result<PathReport, Error>) -> Result<PathReport, Error> {
    if let Ok(r) = &r {
        assert!(naive_induced_increasing(g, r.path.as_slice()), "{:?}", r.path);
        assert_eq!(r.length, r.path.len());
        assert!(r.length >= r.guarantee);
    }
    r
}

#[test]
fn random_two_noncrossing_instances_stay_below_the_oracle() {
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    for i in 0..200 {
        let n = rng.gen_range(3..=18);
        let attempts = rng.gen_range(0..3 * n);
        let (g, c) = random_knc(&mut rng, n, 2, attempts);
        let best = longest_increasing_induced_path(&g, BUDGET);
        assert!(best.optimal);
        let opt = best.best.len();
        let mut results = vec![
            checked(&g, extract_2nc(&g, &c)),
            checked(&g, extract_planar(&g)),
            checked(&g, extract_genus(&g, 0)),
            checked(&g, extract_knc(&g, &c, 2)),
        ];
        if n >= 4 {
            results.push(checked(&g, extract_genus(&g, 1)));
        }
        for r in results {
            if let Some(len) = length_of(r) {
                assert!(len <= opt, "instance {i}: {len} > {opt}");
            }
        }
        drive_triples(&g, &c);
    }
}

#[test]
fn growth_loops_keep_their_invariants_on_larger_instances() {
    let mut rng = ChaCha8Rng::seed_from_u64(77);
    let mut triple_steps = 0;
    let mut surround_steps = 0;
    let mut degenerate = 0;
    for _ in 0..60 {
        let n = rng.gen_range(20..=300);
        let k = rng.gen_range(2..=5);
        let attempts = rng.gen_range(0..4 * n);
        let (g, c) = random_knc(&mut rng, n, k, attempts);
        if k == 2 {
            triple_steps += drive_triples(&g, &c);
            checked(&g, extract_2nc(&g, &c)).unwrap();
        }
        for floored in [false, true] {
            let run = drive_surroundings(&g, &c, k, floored);
            surround_steps += run.steps;
            degenerate += usize::from(run.degenerate);
        }
        checked(&g, extract_knc(&g, &c, k)).unwrap();
        match extract_knc_with(&g, &c, k, GrowthSchedule::Floored) {
            Ok(r) => assert!(naive_induced_increasing(&g, r.path.as_slice())),
            Err(Error::Degenerate { partial, .. }) => {
                assert!(naive_induced_increasing(&g, partial.path.as_slice()))
            }
            Err(e) => panic!("{e}"),
        }
    }
    assert!(triple_steps > 0);
    assert!(surround_steps > 100, "{surround_steps}");
    assert!(degenerate > 0);
}

#[test]
fn extremal_instances_respect_their_bounds() {
    let mut instances = Vec::new();
    for p in 0..=4 {
        instances.push(build_u(p).unwrap());
    }
    for (k, p) in [(0, 0), (0, 1), (0, 2), (0, 3), (1, 0), (1, 1), (2, 0), (2, 1), (3, 0)] {
        instances.push(build_g(k, p).unwrap());
    }
    for inst in &instances {
        inst.check().unwrap();
        let g = &inst.graph;
        let any = longest_induced_path(g, BUDGET);
        let inc = longest_increasing_induced_path(g, BUDGET);
        assert!(any.optimal && inc.optimal);
        assert!(any.best.len() <= inst.upper_bound(), "{:?} {} {}", inst.family, inst.k, inst.p);
        assert!(inc.best.len() <= any.best.len());
        let k = inst.coloring.k();
        let r = checked(g, extract_knc(g, &inst.coloring, k)).unwrap();
        assert!(r.length <= inc.best.len());
        if k <= 2 {
            let r = checked(g, extract_2nc(g, &inst.coloring)).unwrap();
            assert!(r.length <= inc.best.len());
        }
        if let Some(len) = length_of(checked(g, extract_planar(g))) {
            assert!(len <= inc.best.len());
        }
    }
}

#[test]
fn five_colored_g21_extraction_is_valid() {
    let inst = build_g(2, 1).unwrap();
    assert_eq!(inst.graph.n(), 17);
    assert_eq!(inst.coloring.k(), 5);
    let r = checked(&inst.graph, extract_knc(&inst.graph, &inst.coloring, 5)).unwrap();
    let opt = longest_increasing_induced_path(&inst.graph, BUDGET).best.len();
    assert!(r.length <= opt);
    assert!(opt <= ip_upper_bound(Family::G, 2, 1));
}

#[test]
fn house_oracle_values() {
    assert_eq!(longest_induced_path(&build_u(2).unwrap().graph, BUDGET).best.len(), 4);
    assert!(longest_induced_path(&build_g(1, 1).unwrap().graph, BUDGET).best.len() <= 8);
}

/// With two classes the tree loop stops after a handful of steps, while the
/// triple loop keeps shrinking its interval by `ρ`; the triple loop is never
/// worse and both beat the shortest path from 1 to n.
#[test]
fn knc_with_two_classes_never_beats_the_triple_loop() {
    let mut rng = ChaCha8Rng::seed_from_u64(99);
    let mut equal = 0;
    for _ in 0..300 {
        let n = rng.gen_range(3..=200);
        let attempts = rng.gen_range(0..3 * n);
        let (g, c) = random_knc(&mut rng, n, 2, attempts);
        let base = iplab_core::path::shortest_increasing_path(&g, 1, n).unwrap().unwrap().len();
        let a = extract_2nc(&g, &c).unwrap();
        let b = extract_knc(&g, &c, 2).unwrap();
        assert!(b.length <= a.length);
        assert!(a.length >= base && b.length >= base);
        assert!(b.iterations <= 3);
        equal += usize::from(a.length == b.length);
    }
    assert!(equal > 0);
}
