use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use anyhow::{bail, Context};
use clap::{Parser, Subcommand, ValueEnum};
use iplab::bench::{run_bench, to_csv, BenchConfig, Extractor};
use iplab::corpus::random_two_noncrossing;
use iplab::manifest::{to_json, RunManifest};
use iplab::svg::arc_diagram;
use iplab_core::extract2::{extract_genus, extract_planar};
use iplab_core::extractk::{extract_knc_with, GrowthSchedule};
use iplab_core::extremal::{build_g, build_u, Family};
use iplab_core::format::{parse_og, parse_ogc, write_og, write_ogc};
use iplab_core::noncross::{k_partition, partition_violation, PartitionMethod, PartitionViolation, DEFAULT_EXACT_THRESHOLD};
use iplab_core::oracle::{longest_increasing_induced_path, longest_induced_path, DEFAULT_BUDGET};
use iplab_core::path::verify_induced_increasing;
use iplab_core::{EdgeColoring, Error, OrderedGraph};
use serde::Serialize;
use serde_json::json;

#[derive(Parser)]
#[command(name = "iplab", version, about = "Increasing induced paths in ordered graphs")]
struct Cli {
    /// Add missing consecutive edges (i, i+1) when reading .og files.
    #[arg(long, global = true)]
    synthesize_path: bool,
    /// Record wall times. Outputs are no longer byte-reproducible.
    #[arg(long, global = true)]
    timings: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Generate an instance: writes STEM.og, STEM.ogc and STEM.json.
    Gen {
        #[command(subcommand)]
        family: GenFamily,
    },
    /// Validate a graph file and optionally a coloring.
    Check {
        file: PathBuf,
        #[arg(long)]
        colors: Option<PathBuf>,
        /// Required number of classes. Without --colors, searches for a partition.
        #[arg(long)]
        k: Option<usize>,
        #[arg(long, default_value_t = DEFAULT_EXACT_THRESHOLD)]
        exact_threshold: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Extract a long increasing induced path.
    Extract {
        mode: Mode,
        file: PathBuf,
        #[arg(long)]
        colors: Option<PathBuf>,
        /// Number of classes for knc; defaults to the coloring's palette.
        #[arg(long)]
        k: Option<usize>,
        #[arg(long, default_value_t = 0)]
        genus: usize,
        #[arg(long, value_enum, default_value_t = Schedule::Theorem)]
        schedule: Schedule,
        #[arg(long, default_value_t = DEFAULT_EXACT_THRESHOLD)]
        exact_threshold: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Exact longest induced path.
    Oracle {
        file: PathBuf,
        /// Restrict to increasing paths.
        #[arg(long)]
        increasing: bool,
        /// Node-expansion budget; defaults to $IPLAB_BUDGET, then 10^8.
        #[arg(long)]
        budget: Option<u64>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Render an arc diagram as SVG.
    ExportArcs {
        file: PathBuf,
        #[arg(long)]
        colors: Option<PathBuf>,
        #[arg(long)]
        out: PathBuf,
    },
    /// Sweep an extremal family: writes STEM.csv and STEM.json.
    Bench {
        #[arg(long, value_enum)]
        family: BenchFamily,
        /// k values, e.g. `0..2` or `1`; ignored for the U family.
        #[arg(long, default_value = "0", value_parser = parse_range)]
        k: Values,
        /// p values, e.g. `1..16`.
        #[arg(long, value_parser = parse_range)]
        p: Values,
        #[arg(long, value_enum, default_value_t = Extractor::Knc)]
        extractor: Extractor,
        /// Run both oracles on instances up to this size.
        #[arg(long, default_value_t = 18)]
        oracle_max_n: usize,
        #[arg(long)]
        budget: Option<u64>,
        #[arg(long)]
        out: PathBuf,
    },
}

#[derive(Subcommand)]
enum GenFamily {
    /// The house U_p.
    Up {
        p: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// The recursive family G(k, p).
    Gkp {
        k: usize,
        p: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Random graph along 1..n with two non-crossing chord classes.
    Random2nc {
        n: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Chord proposals.
        #[arg(long)]
        attempts: Option<usize>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
enum Mode {
    Planar,
    Knc,
    Genus,
}

#[derive(Clone, Copy, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
enum Schedule {
    Theorem,
    Floored,
}

#[derive(Clone, Copy, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
enum BenchFamily {
    U,
    G,
}

#[derive(Clone, Debug)]
struct Values(Vec<usize>);

/// `a..b` (inclusive), `a,b,c` or a single value.
fn parse_range(s: &str) -> Result<Values, String> {
    let num = |t: &str| t.trim().parse::<usize>().map_err(|e| format!("{t:?}: {e}"));
    if let Some((a, b)) = s.split_once("..") {
        let (a, b) = (num(a)?, num(b.trim_start_matches('='))?);
        if a > b {
            return Err(format!("empty range {s}"));
        }
        return Ok(Values((a..=b).collect()));
    }
    s.split(',').map(num).collect::<Result<_, _>>().map(Values)
}

fn path_str(p: &Path) -> String {
    p.display().to_string()
}

fn read_graph(path: &Path, synthesize: bool) -> anyhow::Result<OrderedGraph> {
    let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    parse_og(&text, synthesize).with_context(|| path.display().to_string())
}

fn read_colors(path: &Path, g: &OrderedGraph) -> anyhow::Result<EdgeColoring> {
    let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    parse_ogc(&text, g).with_context(|| path.display().to_string())
}

fn emit(out: Option<&Path>, text: &str) -> anyhow::Result<()> {
    match out {
        Some(p) => fs::write(p, text).with_context(|| format!("writing {}", p.display())),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn budget(flag: Option<u64>) -> anyhow::Result<u64> {
    if let Some(b) = flag {
        return Ok(b);
    }
    match std::env::var("IPLAB_BUDGET") {
        Ok(v) => v.trim().parse().with_context(|| format!("IPLAB_BUDGET={v:?}")),
        Err(_) => Ok(DEFAULT_BUDGET),
    }
}

fn describe(v: &PartitionViolation) -> String {
    match v {
        PartitionViolation::LengthMismatch { edges, colors } => format!("{colors} colors for {edges} edges"),
        PartitionViolation::ColorOutOfRange { edge, color } => {
            format!("edge ({}, {}) has color {color} out of range", edge.0, edge.1)
        }
        PartitionViolation::Crossing { color, pair: (e, f) } => format!(
            "color {color}: edges ({}, {}) and ({}, {}) cross",
            e.0, e.1, f.0, f.1
        ),
    }
}

/// Outcome of a command that completed but should exit nonzero.
struct Failed(u8);

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(None) => ExitCode::SUCCESS,
        Ok(Some(Failed(code))) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e:#}");
            let code = match e.downcast_ref::<Error>() {
                Some(Error::Format { .. }) => 4,
                Some(Error::Degenerate { .. }) => 3,
                Some(
                    Error::InvalidInput(_)
                    | Error::NotTwoPartitionable { .. }
                    | Error::AllIntervalsFailed
                    | Error::SizeGuard(_),
                ) => 2,
                _ => 1,
            };
            ExitCode::from(code)
        }
    }
}

fn run(cli: &Cli) -> anyhow::Result<Option<Failed>> {
    let synth = cli.synthesize_path;
    match &cli.command {
        Command::Gen { family } => gen(family).map(|()| None),
        Command::Check { file, colors, k, exact_threshold, out } => {
            let g = read_graph(file, synth)?;
            let mut manifest = RunManifest::new("check")
                .input(path_str(file))
                .param("k", k)
                .param("exact_threshold", exact_threshold)
                .param("synthesize_path", synth);
            let mut failures = Vec::new();
            let ham = g.has_increasing_ham_path();
            if !ham {
                failures.push("no increasing Hamiltonian path".to_string());
            }
            let mut coloring = serde_json::Value::Null;
            if let Some(cpath) = colors {
                manifest = manifest.input(path_str(cpath));
                let c = read_colors(cpath, &g)?;
                let violation = partition_violation(&g, &c).map(|v| describe(&v));
                failures.extend(violation.clone());
                if let Some(k) = k {
                    if c.used_colors() > *k {
                        failures.push(format!("coloring uses {} colors, more than k = {k}", c.used_colors()));
                    }
                }
                coloring = json!({"source": "file", "k": c.k(), "used": c.used_colors(), "violation": violation});
            } else if let Some(k) = k {
                let part = k_partition(&g, *k, *exact_threshold)?;
                let source = match part.method {
                    PartitionMethod::Exact => "exact",
                    PartitionMethod::Greedy => "greedy",
                };
                if part.coloring.is_none() {
                    failures.push(match part.method {
                        PartitionMethod::Exact => format!("not {k}-non-crossing"),
                        PartitionMethod::Greedy => format!("no {k}-non-crossing partition found (greedy)"),
                    });
                }
                coloring = json!({"source": source, "k": k, "found": part.coloring.is_some()});
            }
            for f in &failures {
                eprintln!("fail: {f}");
            }
            let report = json!({
                "manifest": manifest,
                "n": g.n(),
                "m": g.m(),
                "hamiltonian_path": ham,
                "coloring": coloring,
                "pass": failures.is_empty(),
                "failures": failures,
            });
            emit(out.as_deref(), &to_json(&report))?;
            Ok((!failures.is_empty()).then_some(Failed(2)))
        }
        Command::Extract { mode, file, colors, k, genus, schedule, exact_threshold, out } => {
            let g = read_graph(file, synth)?;
            let mut manifest = RunManifest::new("extract")
                .input(path_str(file))
                .param("mode", mode)
                .param("synthesize_path", synth);
            let result = match mode {
                Mode::Planar => extract_planar(&g),
                Mode::Genus => {
                    manifest = manifest.param("genus", genus);
                    extract_genus(&g, *genus)
                }
                Mode::Knc => {
                    let c = match colors {
                        Some(cpath) => {
                            manifest = manifest.input(path_str(cpath));
                            read_colors(cpath, &g)?
                        }
                        None => {
                            let Some(k) = k else { bail!(Error::InvalidInput("knc needs --colors or --k".into())) };
                            manifest = manifest.param("exact_threshold", exact_threshold);
                            k_partition(&g, *k, *exact_threshold)?.coloring.ok_or_else(|| {
                                Error::InvalidInput(format!("no {k}-non-crossing partition found"))
                            })?
                        }
                    };
                    let k = k.unwrap_or(c.k());
                    manifest = manifest.param("k", k).param("schedule", schedule);
                    let mode = match schedule {
                        Schedule::Theorem => GrowthSchedule::Theorem,
                        Schedule::Floored => GrowthSchedule::Floored,
                    };
                    extract_knc_with(&g, &c, k, mode)
                }
            };
            if let Some(o) = out {
                manifest = manifest.output(path_str(o));
            }
            match result {
                Ok(report) => {
                    if !verify_induced_increasing(&g, &report.path) {
                        bail!(Error::Invariant("emitted path is not an increasing induced path".into()));
                    }
                    emit(out.as_deref(), &to_json(&json!({"manifest": manifest, "report": report})))?;
                    Ok(None)
                }
                Err(Error::Degenerate { reason, partial }) => {
                    if !verify_induced_increasing(&g, &partial.path) {
                        bail!(Error::Invariant("partial path is not an increasing induced path".into()));
                    }
                    eprintln!("degenerate: {reason}");
                    let doc = json!({"manifest": manifest, "degenerate": reason, "report": partial});
                    emit(out.as_deref(), &to_json(&doc))?;
                    Ok(Some(Failed(3)))
                }
                Err(e) => Err(e.into()),
            }
        }
        Command::Oracle { file, increasing, budget: b, out } => {
            let g = read_graph(file, synth)?;
            let b = budget(*b)?;
            let mut manifest = RunManifest::new("oracle")
                .input(path_str(file))
                .param("increasing", increasing)
                .param("budget", b)
                .param("synthesize_path", synth)
                .param("timings", cli.timings);
            if let Some(o) = out {
                manifest = manifest.output(path_str(o));
            }
            let start = Instant::now();
            let mut result = if *increasing {
                longest_increasing_induced_path(&g, b)
            } else {
                longest_induced_path(&g, b)
            };
            if cli.timings {
                result.time_ms = Some(start.elapsed().as_secs_f64() * 1e3);
            }
            let length = result.best.len();
            let doc = json!({"manifest": manifest, "length": length, "result": result});
            emit(out.as_deref(), &to_json(&doc))?;
            Ok(None)
        }
        Command::ExportArcs { file, colors, out } => {
            let g = read_graph(file, synth)?;
            let c = colors.as_deref().map(|p| read_colors(p, &g)).transpose()?;
            fs::write(out, arc_diagram(&g, c.as_ref())).with_context(|| format!("writing {}", out.display()))?;
            Ok(None)
        }
        Command::Bench { family, k, p, extractor, oracle_max_n, budget: b, out } => {
            let b = budget(*b)?;
            let cfg = BenchConfig {
                family: match family {
                    BenchFamily::U => Family::U,
                    BenchFamily::G => Family::G,
                },
                ks: k.0.clone(),
                ps: p.0.clone(),
                extractor: *extractor,
                oracle_max_n: *oracle_max_n,
                budget: b,
                timings: cli.timings,
            };
            let rows = run_bench(&cfg);
            let csv_path = out.with_extension("csv");
            let json_path = out.with_extension("json");
            let manifest = RunManifest::new("bench")
                .param("family", family)
                .param("k", &k.0)
                .param("p", &p.0)
                .param("extractor", extractor)
                .param("oracle_max_n", oracle_max_n)
                .param("budget", b)
                .param("timings", cli.timings)
                .output(path_str(&csv_path))
                .output(path_str(&json_path));
            fs::write(&csv_path, to_csv(&rows))?;
            fs::write(&json_path, to_json(&json!({"manifest": manifest, "rows": rows})))?;
            Ok(None)
        }
    }
}

fn gen(family: &GenFamily) -> anyhow::Result<()> {
    let (stem, manifest, doc, g, c) = match family {
        GenFamily::Up { p, out } => {
            let inst = build_u(*p)?;
            let stem = out.clone().unwrap_or_else(|| PathBuf::from(format!("u{p}")));
            let manifest = RunManifest::new("gen up").param("p", p);
            (stem, manifest, labeled_doc(&inst), inst.graph, inst.coloring)
        }
        GenFamily::Gkp { k, p, out } => {
            let inst = build_g(*k, *p)?;
            let stem = out.clone().unwrap_or_else(|| PathBuf::from(format!("g{k}_{p}")));
            let manifest = RunManifest::new("gen gkp").param("k", k).param("p", p);
            (stem, manifest, labeled_doc(&inst), inst.graph, inst.coloring)
        }
        GenFamily::Random2nc { n, seed, attempts, out } => {
            let attempts = attempts.unwrap_or(2 * n);
            let (g, c) = random_two_noncrossing(*n, attempts, *seed);
            let stem = out.clone().unwrap_or_else(|| PathBuf::from(format!("random2nc_{n}_{seed}")));
            let mut manifest = RunManifest::new("gen random2nc").param("n", n).param("attempts", attempts);
            manifest.seed = Some(*seed);
            let doc = json!({
                "family": "random2nc",
                "k": null,
                "p": null,
                "n": g.n(),
                "m": g.m(),
                "upper_bound": null,
                "x_set": [],
            });
            (stem, manifest, doc, g, c)
        }
    };
    let og = stem.with_extension("og");
    let ogc = stem.with_extension("ogc");
    let js = stem.with_extension("json");
    let manifest = manifest.output(path_str(&og)).output(path_str(&ogc)).output(path_str(&js));
    let mut doc = doc;
    doc["run"] = serde_json::to_value(&manifest)?;
    fs::write(&og, write_og(&g)).with_context(|| format!("writing {}", og.display()))?;
    fs::write(&ogc, write_ogc(&g, &c)).with_context(|| format!("writing {}", ogc.display()))?;
    fs::write(&js, to_json(&doc)).with_context(|| format!("writing {}", js.display()))?;
    Ok(())
}

fn labeled_doc(inst: &iplab_core::extremal::LabeledInstance) -> serde_json::Value {
    json!({
        "family": inst.family,
        "k": inst.k,
        "p": inst.p,
        "n": inst.graph.n(),
        "m": inst.graph.m(),
        "upper_bound": inst.upper_bound(),
        "x_set": inst.x_set,
    })
}
