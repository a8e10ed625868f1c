//! Sweeps over the extremal families.

use std::time::Instant;

use iplab_core::extract2::{extract_2nc, extract_planar};
use iplab_core::extractk::extract_knc;
use iplab_core::extremal::{build_g, build_u, Family, LabeledInstance};
use iplab_core::oracle::{longest_increasing_induced_path, longest_induced_path};
use iplab_core::path::verify_induced_increasing;
use iplab_core::{Error, PathReport};
use rayon::prelude::*;
use serde::Serialize;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, clap::ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum Extractor {
    /// Good-triple loop on the instance's certificate (at most 2 colors).
    #[value(name = "2nc")]
    #[serde(rename = "2nc")]
    TwoNc,
    /// Tree-surrounding loop with `k` = the certificate's palette size.
    Knc,
    Planar,
}

#[derive(Clone, Debug)]
pub struct BenchConfig {
    pub family: Family,
    /// Ignored for `U_p`.
    pub ks: Vec<usize>,
    pub ps: Vec<usize>,
    pub extractor: Extractor,
    /// Instances up to this size also get both exact oracles.
    pub oracle_max_n: usize,
    pub budget: u64,
    pub timings: bool,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct BenchRow {
    pub family: &'static str,
    pub k: usize,
    pub p: usize,
    pub n: Option<usize>,
    pub m: Option<usize>,
    pub length: Option<usize>,
    pub guarantee: Option<usize>,
    pub iterations: Option<usize>,
    pub upper_bound: Option<usize>,
    pub oracle: Option<usize>,
    pub increasing_oracle: Option<usize>,
    pub oracle_optimal: Option<bool>,
    /// `ok`, `degenerate` (partial result), `error` or `oracle-budget`.
    pub status: &'static str,
    pub detail: String,
    pub time_ms: Option<f64>,
}

impl BenchRow {
    fn empty(family: Family, k: usize, p: usize) -> Self {
        BenchRow {
            family: match family {
                Family::U => "U",
                Family::G => "G",
            },
            k,
            p,
            n: None,
            m: None,
            length: None,
            guarantee: None,
            iterations: None,
            upper_bound: None,
            oracle: None,
            increasing_oracle: None,
            oracle_optimal: None,
            status: "error",
            detail: String::new(),
            time_ms: None,
        }
    }
}

/// Runs the configured extractor on one instance.
pub fn extract(inst: &LabeledInstance, extractor: Extractor) -> Result<PathReport, Error> {
    match extractor {
        Extractor::TwoNc => extract_2nc(&inst.graph, &inst.coloring),
        Extractor::Knc => extract_knc(&inst.graph, &inst.coloring, inst.coloring.k()),
        Extractor::Planar => extract_planar(&inst.graph),
    }
}

fn run_one(cfg: &BenchConfig, k: usize, p: usize) -> BenchRow {
    let mut row = BenchRow::empty(cfg.family, k, p);
    let start = Instant::now();
    let inst = match cfg.family {
        Family::U => build_u(p),
        Family::G => build_g(k, p),
    };
    let inst = match inst {
        Ok(inst) => inst,
        Err(e) => {
            row.detail = e.to_string();
            return row;
        }
    };
    row.n = Some(inst.graph.n());
    row.m = Some(inst.graph.m());
    row.upper_bound = Some(inst.upper_bound());
    let report = match extract(&inst, cfg.extractor) {
        Ok(r) => {
            row.status = "ok";
            Some(r)
        }
        Err(Error::Degenerate { reason, partial }) => {
            row.status = "degenerate";
            row.detail = reason;
            Some(*partial)
        }
        Err(e) => {
            row.detail = e.to_string();
            None
        }
    };
    if let Some(r) = &report {
        assert!(verify_induced_increasing(&inst.graph, &r.path), "extractor emitted an invalid path");
        row.length = Some(r.length);
        row.guarantee = Some(r.guarantee);
        row.iterations = Some(r.iterations);
    }
    if inst.graph.n() <= cfg.oracle_max_n {
        let any = longest_induced_path(&inst.graph, cfg.budget);
        let inc = longest_increasing_induced_path(&inst.graph, cfg.budget);
        row.oracle = Some(any.best.len());
        row.increasing_oracle = Some(inc.best.len());
        row.oracle_optimal = Some(any.optimal && inc.optimal);
        if !(any.optimal && inc.optimal) && row.status == "ok" {
            row.status = "oracle-budget";
        }
    }
    if cfg.timings {
        row.time_ms = Some(start.elapsed().as_secs_f64() * 1e3);
    }
    row
}

/// One row per grid point, in `(k, p)` order regardless of scheduling.
pub fn run_bench(cfg: &BenchConfig) -> Vec<BenchRow> {
    let ks = match cfg.family {
        Family::U => vec![0],
        Family::G => cfg.ks.clone(),
    };
    let grid: Vec<(usize, usize)> = ks.iter().flat_map(|&k| cfg.ps.iter().map(move |&p| (k, p))).collect();
    grid.par_iter().map(|&(k, p)| run_one(cfg, k, p)).collect()
}

pub fn to_csv(rows: &[BenchRow]) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    for row in rows {
        w.serialize(row).expect("row serializes");
    }
    String::from_utf8(w.into_inner().expect("in-memory writer")).expect("utf-8")
}
