//! Acceptance criteria, one PASS/FAIL line each. Exits nonzero on any FAIL.

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::path::Path;
use std::process::{Command, ExitCode};
use std::time::{Duration, Instant};

use iplab::corpus::{random_k_noncrossing, random_two_noncrossing};
use iplab_core::extract2::{
    extract_2nc, extract_genus, extract_planar, gap_or_path, grow_triple, rho, GapOrPath, GoodTriple, TripleGrowth,
};
use iplab_core::extractk::{
    extract_knc, extract_knc_with, gap_k_or_path, grow_surrounding, schedule, tree_size_bound, verify_surrounding,
    GapKOrPath, GrowthSchedule, SurroundingGrowth, TreeSurrounding,
};
use iplab_core::extremal::{build_g, build_u, expected_size, LabeledInstance};
use iplab_core::metrics::cutwidth_of;
use iplab_core::noncross::verify_partition;
use iplab_core::oracle::{longest_increasing_induced_path, longest_induced_path};
use iplab_core::path::verify_induced_increasing;
use iplab_core::{EdgeColoring, Error, Interval, OrderedGraph, PathReport, VertexPath};

type Outcome = Result<String, String>;

macro_rules! check {
    ($cond:expr, $($arg:tt)*) => {
        if !$cond {
            return Err(format!($($arg)*));
        }
    };
}

const ORACLE_BUDGET: u64 = 100_000_000;

/// Instances shared by criteria 4, 6 and 8.
struct Corpus {
    items: Vec<(String, OrderedGraph, EdgeColoring)>,
}

fn corpus() -> Corpus {
    let mut items = Vec::new();
    for p in 0..=10 {
        let inst = build_u(p).unwrap();
        items.push((format!("U_{p}"), inst.graph, inst.coloring));
    }
    for k in 0..=3 {
        for p in 0..=3 {
            if expected_size(k, p).is_some_and(|n| n <= 1 << 15) {
                let inst = build_g(k, p).unwrap();
                items.push((format!("G({k},{p})"), inst.graph, inst.coloring));
            }
        }
    }
    for seed in 0..200 {
        let n = 3 + (seed as usize % 16);
        let (g, c) = random_two_noncrossing(n, 2 * n, seed);
        items.push((format!("random2nc n={n} seed={seed}"), g, c));
    }
    for seed in 0..80 {
        let k = 2 + (seed as usize % 4);
        let n = 20 + (seed as usize * 37) % 480;
        let (g, c) = random_k_noncrossing(n, k, 3 * n, 1000 + seed);
        items.push((format!("random{k}nc n={n} seed={}", 1000 + seed), g, c));
    }
    Corpus { items }
}

fn path_ok(g: &OrderedGraph, p: &VertexPath) -> bool {
    verify_induced_increasing(g, p)
}

/// Every path an extractor emits on `g`, including degenerate partials.
fn emitted(g: &OrderedGraph, c: &EdgeColoring) -> Vec<(&'static str, PathReport)> {
    let mut out = Vec::new();
    let mut push = |name: &'static str, r: Result<PathReport, Error>| match r {
        Ok(r) => out.push((name, r)),
        Err(Error::Degenerate { partial, .. }) => out.push((name, *partial)),
        Err(
            Error::NotTwoPartitionable { .. } | Error::AllIntervalsFailed | Error::InvalidInput(_),
        ) => {}
        Err(e) => panic!("{name}: {e}"),
    };
    if c.used_colors() <= 2 {
        push("extract_2nc", extract_2nc(g, &c.widened(2.max(c.k())).unwrap()));
    }
    push("extract_knc", extract_knc(g, c, c.k()));
    push("extract_knc floored", extract_knc_with(g, c, c.k(), GrowthSchedule::Floored));
    push("extract_planar", extract_planar(g));
    push("extract_genus 0", extract_genus(g, 0));
    push("extract_genus 1", extract_genus(g, 1));
    out
}

fn criterion_1() -> Outcome {
    for k in 0..=2 {
        for p in 0..=2 {
            let inst = build_g(k, p).map_err(|e| e.to_string())?;
            let expect = expected_size(k, p).unwrap();
            check!(inst.graph.n() as u64 == expect, "G({k},{p}) has {} vertices, expected {expect}", inst.graph.n());
        }
    }
    let pinned = [((1, 1), 9), ((2, 1), 17), ((1, 2), 65), ((2, 2), 1025)];
    for ((k, p), n) in pinned {
        check!(build_g(k, p).unwrap().graph.n() == n, "G({k},{p}) != {n}");
    }
    Ok("9 instances, sizes 2^C(k+p+1,p)+1".into())
}

fn criterion_2() -> Outcome {
    for p in 0..=16 {
        let inst = build_u(p).map_err(|e| e.to_string())?;
        check!(inst.coloring.used_colors() == 1, "U_{p} uses {} colors", inst.coloring.used_colors());
        check!(verify_partition(&inst.graph, &inst.coloring), "U_{p} certificate fails");
    }
    // p = 1 forces k <= 17 for n <= 10^6; p = 0 is P_3 for every k.
    let mut count = 0;
    let mut largest = 0;
    for k in 0..=17 {
        for p in 0.. {
            match expected_size(k, p) {
                Some(n) if n <= 1_000_000 => {}
                _ => break,
            }
            let inst = build_g(k, p).map_err(|e| e.to_string())?;
            check!(
                inst.coloring.used_colors() <= 2 * k + 1,
                "G({k},{p}) uses {} colors",
                inst.coloring.used_colors()
            );
            check!(verify_partition(&inst.graph, &inst.coloring), "G({k},{p}) certificate fails");
            inst.check().map_err(|e| format!("G({k},{p}): {e}"))?;
            largest = largest.max(inst.graph.n());
            count += 1;
        }
    }
    Ok(format!("U_0..U_16 and {count} G(k,p) instances up to n = {largest}"))
}

fn criterion_3() -> Outcome {
    let mut detail = Vec::new();
    for p in 0..=4 {
        let inst = build_u(p).unwrap();
        let r = longest_induced_path(&inst.graph, ORACLE_BUDGET);
        check!(r.optimal, "oracle did not finish on U_{p}");
        check!(r.best.len() <= 2 * p + 2, "U_{p} has an induced path of {}", r.best.len());
        if p == 2 {
            check!(r.best.len() == 4, "U_2 optimum is {}, expected 4", r.best.len());
        }
        detail.push(format!("U_{p}={}", r.best.len()));
    }
    let g11 = build_g(1, 1).unwrap();
    let r = longest_induced_path(&g11.graph, ORACLE_BUDGET);
    check!(r.optimal && r.best.len() <= 8, "G(1,1) optimum {} (optimal {})", r.best.len(), r.optimal);
    detail.push(format!("G(1,1)={}", r.best.len()));
    Ok(detail.join(" "))
}

fn criterion_4(c: &Corpus) -> Outcome {
    let mut paths = 0;
    for (name, g, col) in &c.items {
        for (ext, r) in emitted(g, col) {
            check!(path_ok(g, &r.path), "{ext} on {name} emitted {:?}", r.path.as_slice());
            check!(r.length == r.path.len(), "{ext} on {name} misreports its length");
            paths += 1;
        }
    }
    Ok(format!("{paths} paths from {} instances, all increasing induced", c.items.len()))
}

fn criterion_5() -> Outcome {
    let mut instances: Vec<(String, OrderedGraph, EdgeColoring)> = Vec::new();
    for seed in 0..200 {
        let n = 3 + (seed as usize % 16);
        let (g, c) = random_two_noncrossing(n, 2 * n, 5000 + seed);
        instances.push((format!("random seed={}", 5000 + seed), g, c));
    }
    let generated: Vec<LabeledInstance> = (0..=4)
        .map(|p| build_u(p).unwrap())
        .chain((0..=3).flat_map(|k| (0..=3).filter_map(move |p| build_g(k, p).ok())))
        .filter(|i| i.graph.n() <= 18)
        .collect();
    let n_generated = generated.len();
    for inst in generated {
        instances.push((format!("{:?}({},{})", inst.family, inst.k, inst.p), inst.graph, inst.coloring));
    }
    for (name, g, col) in &instances {
        let opt = longest_increasing_induced_path(g, ORACLE_BUDGET);
        check!(opt.optimal, "oracle did not finish on {name}");
        for (ext, r) in emitted(g, col) {
            check!(r.length <= opt.best.len(), "{ext} on {name}: {} > optimum {}", r.length, opt.best.len());
        }
    }
    Ok(format!("200 random + {n_generated} generated instances"))
}

#[derive(Default)]
struct GrowthStats {
    triple_steps: usize,
    surround_steps: usize,
    surround_checks: usize,
}

/// Replays both growth loops step by step, checking the accounting of
/// criterion 6 and the surrounding conditions of criterion 8.
fn replay(c: &Corpus) -> Result<GrowthStats, String> {
    let mut st = GrowthStats::default();
    for (name, g, col) in &c.items {
        if col.used_colors() <= 2 {
            st.triple_steps += replay_triples(g, &col.widened(2.max(col.k())).unwrap()).map_err(|e| format!("{name}: {e}"))?;
        }
        for floored in [false, true] {
            let (steps, checks) = replay_surroundings(g, col, col.k(), floored).map_err(|e| format!("{name}: {e}"))?;
            st.surround_steps += steps;
            st.surround_checks += checks;
        }
    }
    Ok(st)
}

fn replay_triples(g: &OrderedGraph, c: &EdgeColoring) -> Result<usize, String> {
    let n = g.n();
    if n <= 2 {
        return Ok(0);
    }
    let r = rho(n);
    let first = Interval::new(2, n - 1).unwrap();
    let g0 = (first.len() / r).max(1);
    let GapOrPath::Gap { witness, .. } = gap_or_path(g, c, 1, first, n, g0).map_err(|e| e.to_string())? else {
        return Ok(0);
    };
    check!(witness.len() >= g0, "first interval {witness} shorter than {g0}");
    let mut t = GoodTriple { u: 1, interval: witness, v: n, left: VertexPath::single(1), right: VertexPath::single(n) };
    let mut steps = 0;
    loop {
        let gt = (t.interval.len() / r).max(1);
        match grow_triple(g, c, &t, gt).map_err(|e| e.to_string())? {
            TripleGrowth::Path { .. } => return Ok(steps),
            TripleGrowth::Next { triple, .. } => {
                check!(triple.k() == t.k() + 1, "|L|+|R| went from {} to {}", t.k(), triple.k());
                check!(triple.interval.len() >= gt, "|I'| = {} < g = {gt}", triple.interval.len());
                triple.check(g).map_err(|e| e.to_string())?;
                t = triple;
                steps += 1;
            }
        }
    }
}

fn replay_surroundings(g: &OrderedGraph, c: &EdgeColoring, k: usize, floored: bool) -> Result<(usize, usize), String> {
    let n = g.n();
    let p = k.div_ceil(2);
    let g0 = schedule(n, 0);
    let Some(first) = Interval::try_new(p + 1, n.saturating_sub(k - p)).filter(|_| n > k && g0 >= 1) else {
        return Ok((0, 0));
    };
    let c = c.widened(k).unwrap();
    let mut s = TreeSurrounding::initial(n, k, p, first);
    match gap_k_or_path(g, &c, first, &s.roots(), g0).map_err(|e| e.to_string())? {
        GapKOrPath::Path { .. } => return Ok((0, 0)),
        GapKOrPath::Gap { witness, .. } => s.interval = witness,
    }
    let v = verify_surrounding(g, &s);
    check!(v.is_empty(), "initial surrounding violates {v:?}");
    let (mut steps, mut checks) = (0, 1);
    loop {
        let raw = schedule(n, steps as u32 + 1);
        let gt = if floored { raw.max(1) } else { raw };
        if gt == 0 {
            return Ok((steps, checks));
        }
        match grow_surrounding(g, &c, &s, gt) {
            Ok(SurroundingGrowth::Path { .. }) | Err(Error::Degenerate { .. }) => return Ok((steps, checks)),
            Ok(SurroundingGrowth::Next { surrounding, .. }) => {
                let v = verify_surrounding(g, &surrounding);
                check!(v.is_empty(), "step {} violates {v:?}", steps + 1);
                check!(
                    surrounding.total_size() == s.total_size() + 1,
                    "total tree size went from {} to {}",
                    s.total_size(),
                    surrounding.total_size()
                );
                check!(surrounding.interval.len() >= gt, "|I'| = {} < g = {gt}", surrounding.interval.len());
                for tree in surrounding.trees() {
                    check!(
                        tree.size() as u64 <= tree_size_bound(tree.depth(), p),
                        "tree of size {} and depth {} breaks the size bound",
                        tree.size(),
                        tree.depth()
                    );
                }
                s = surrounding;
                steps += 1;
                checks += 1;
            }
            Err(e) => return Err(e.to_string()),
        }
    }
}

fn criterion_6(c: &Corpus, stats: &mut Option<Result<GrowthStats, String>>) -> Outcome {
    let st = stats.insert(replay(c)).as_ref().map_err(Clone::clone)?;
    check!(st.triple_steps > 0 && st.surround_steps > 0, "no growth steps were exercised");
    Ok(format!("{} triple steps, {} surrounding steps", st.triple_steps, st.surround_steps))
}

fn criterion_7() -> Outcome {
    fn go(v: usize, m: usize, parent: &mut Vec<usize>, seen: &mut usize) -> Result<(), String> {
        if v == m {
            let edges: Vec<_> = (1..m).map(|x| (x, parent[x])).collect();
            let c = cutwidth_of(m, &edges);
            let d = (1..=m)
                .map(|mut x| {
                    let mut d = 1;
                    while x != m {
                        x = parent[x];
                        d += 1;
                    }
                    d
                })
                .max()
                .unwrap();
            check!(m as u64 <= tree_size_bound(d, c), "tree {parent:?}: {m} > C({d}+{c}-1, {c})");
            *seen += 1;
            return Ok(());
        }
        for p in v + 1..=m {
            parent[v] = p;
            go(v + 1, m, parent, seen)?;
        }
        Ok(())
    }
    let mut seen = 0;
    for m in 1..=8 {
        go(1, m, &mut vec![0; m + 1], &mut seen)?;
    }
    Ok(format!("{seen} (tree, compatible order) pairs on <= 8 nodes"))
}

fn criterion_8(stats: &Option<Result<GrowthStats, String>>) -> Outcome {
    let st = stats.as_ref().ok_or("growth replay did not run")?.as_ref().map_err(Clone::clone)?;
    check!(st.surround_checks > 0, "no surroundings were checked");
    Ok(format!("{} surroundings verified", st.surround_checks))
}

fn criterion_9() -> Outcome {
    let mut prev_len = 0;
    let mut guarantees = Vec::new();
    let mut lengths = Vec::new();
    // G(0, 0) is P_3; the family G(0, p) = U_{p+1} starts at p = 1.
    for p in 1..=19 {
        let inst = build_g(0, p).map_err(|e| e.to_string())?;
        let r = extract_2nc(&inst.graph, &inst.coloring).map_err(|e| e.to_string())?;
        check!(path_ok(&inst.graph, &r.path), "invalid path on U_{}", p + 1);
        check!(r.length >= prev_len, "length dropped at p = {p}: {} < {prev_len}", r.length);
        check!(r.guarantee == r.iterations / 2, "guarantee is not floor(t/2)");
        prev_len = r.length;
        guarantees.push(r.guarantee);
        lengths.push(r.length);
    }
    check!(guarantees.windows(2).all(|w| w[0] <= w[1]), "guarantee not monotone: {guarantees:?}");
    check!(guarantees.last() > guarantees.first(), "guarantee flat: {guarantees:?}");
    Ok(format!("n up to 2^20+1; lengths {lengths:?}; guarantees {guarantees:?}"))
}

fn run_cli(dir: &Path, args: &[&str]) -> Result<Vec<u8>, String> {
    let out = Command::new(env!("CARGO_BIN_EXE_iplab"))
        .args(args)
        .current_dir(dir)
        .env_remove("IPLAB_BUDGET")
        .output()
        .map_err(|e| e.to_string())?;
    let code = out.status.code().unwrap_or(-1);
    check!(code == 0 || code == 3, "iplab {args:?} exited with {code}: {}", String::from_utf8_lossy(&out.stderr));
    Ok(out.stdout)
}

fn snapshot(dir: &Path) -> Vec<(String, Vec<u8>)> {
    let mut files: Vec<_> = std::fs::read_dir(dir)
        .unwrap()
        .map(|e| e.unwrap())
        .map(|e| (e.file_name().to_string_lossy().into_owned(), std::fs::read(e.path()).unwrap()))
        .collect();
    files.sort();
    files
}

fn criterion_10() -> Outcome {
    let script: &[&[&str]] = &[
        &["gen", "up", "3", "--out", "u3"],
        &["gen", "gkp", "1", "1", "--out", "g11"],
        &["gen", "random2nc", "40", "--seed", "7", "--out", "r"],
        &["check", "g11.og", "--colors", "g11.ogc"],
        &["check", "r.og", "--k", "2"],
        &["extract", "planar", "u3.og"],
        &["extract", "genus", "r.og", "--genus", "1"],
        &["extract", "knc", "g11.og", "--colors", "g11.ogc", "--k", "3", "--out", "knc.json"],
        &["extract", "knc", "r.og", "--colors", "r.ogc", "--schedule", "floored"],
        &["oracle", "g11.og"],
        &["oracle", "r.og", "--increasing", "--budget", "100000"],
        &["export-arcs", "g11.og", "--colors", "g11.ogc", "--out", "g11.svg"],
        &["bench", "--family", "g", "--k", "0..2", "--p", "0..2", "--out", "bench"],
        &["bench", "--family", "u", "--p", "1..12", "--extractor", "2nc", "--out", "ubench"],
    ];
    let mut runs = Vec::new();
    for _ in 0..2 {
        let dir = tempfile::tempdir().map_err(|e| e.to_string())?;
        let mut stdout = Vec::new();
        for args in script {
            stdout.push(run_cli(dir.path(), args)?);
        }
        runs.push((stdout, snapshot(dir.path())));
    }
    let (a, b) = (&runs[0], &runs[1]);
    for (i, (x, y)) in a.0.iter().zip(&b.0).enumerate() {
        check!(x == y, "stdout of {:?} differs between runs", script[i]);
    }
    check!(a.1.len() == b.1.len(), "different file sets");
    for ((fa, ca), (fb, cb)) in a.1.iter().zip(&b.1) {
        check!(fa == fb && ca == cb, "{fa} differs between runs");
    }
    Ok(format!("{} commands, {} output files byte-identical", script.len(), a.1.len()))
}

fn main() -> ExitCode {
    let limits = |s: u64| Some(Duration::from_secs(s));
    let mut failed = 0;
    let mut report = |id: usize, name: &str, limit: Option<Duration>, f: &mut dyn FnMut() -> Outcome| {
        let start = Instant::now();
        let outcome = catch_unwind(AssertUnwindSafe(f)).unwrap_or_else(|e| {
            Err(e.downcast_ref::<String>().cloned().or(e.downcast_ref::<&str>().map(|s| s.to_string())).unwrap_or_default())
        });
        let took = start.elapsed();
        let outcome = match (outcome, limit) {
            (Ok(_), Some(l)) if took > l => Err(format!("took {took:.1?}, limit {l:?}")),
            (o, _) => o,
        };
        match outcome {
            Ok(detail) => println!("PASS [{id:>2}] {name}: {detail} ({took:.1?})"),
            Err(why) => {
                failed += 1;
                println!("FAIL [{id:>2}] {name}: {why} ({took:.1?})");
            }
        }
    };
    report(1, "size formula", limits(1), &mut criterion_1);
    report(2, "certificates", limits(30), &mut criterion_2);
    report(3, "upper bounds via oracle", limits(300), &mut criterion_3);
    let corpus = corpus();
    report(4, "extractor validity", None, &mut || criterion_4(&corpus));
    report(5, "extractor vs oracle", None, &mut criterion_5);
    let mut stats = None;
    report(6, "growth-loop accounting", None, &mut || criterion_6(&corpus, &mut stats));
    report(7, "tree bound", limits(120), &mut criterion_7);
    report(8, "surrounding conditions", None, &mut || criterion_8(&stats));
    report(9, "asymptotic trend", limits(300), &mut criterion_9);
    report(10, "determinism", None, &mut criterion_10);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        println!("{failed} criteria failed");
        ExitCode::FAILURE
    }
}
