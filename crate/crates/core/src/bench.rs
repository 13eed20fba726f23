//! Seeded benchmark corpora and a deterministic report.
//!
//! Instances run in parallel but results are collected in manifest order and
//! the report carries no timings, so two runs print identical bytes.

use std::fmt::{self, Write};

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::exact::exact_semi_pd;
use crate::generate::{generate, Family, GenSpec, Instance};
use crate::graph::Graph;
use crate::greedy::{approx_semi_paired, RatioCertificate};
use crate::interval::solve_model;
use crate::tree::semi_paired_dom_tree;
use crate::verify::{verify_solution, SemipairedSolution};

/// Environment variable capping the worker count.
pub const THREADS_ENV: &str = "SEMIPAIR_THREADS";

/// Largest instance on which the bench also runs the exact oracle.
pub const EXACT_LIMIT: usize = 16;

#[derive(Debug, Clone, PartialEq)]
pub struct CorpusEntry {
    pub corpus: &'static str,
    pub spec: GenSpec,
}

fn entries(
    corpus: &'static str,
    family: Family,
    sizes: std::ops::RangeInclusive<usize>,
    seeds: u64,
) -> Vec<CorpusEntry> {
    sizes
        .flat_map(|n| {
            let family = family.clone();
            (0..seeds).map(move |seed| CorpusEntry {
                corpus,
                spec: GenSpec::new(family.clone(), n, seed),
            })
        })
        .collect()
}

pub fn default_manifest() -> Vec<CorpusEntry> {
    [
        entries("interval", Family::RandomInterval, 2..=13, 5),
        entries("tree", Family::RandomTree, 2..=14, 5),
        entries("gnp", Family::Gnp(0.3), 2..=12, 5),
        entries("gp4", Family::Gp4(Box::new(Family::RandomTree)), 1..=3, 3),
    ]
    .concat()
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct InstanceReport {
    pub corpus: String,
    pub family: String,
    pub n: usize,
    pub seed: u64,
    pub m: usize,
    pub exact: Option<usize>,
    pub interval: Option<usize>,
    pub tree: Option<usize>,
    pub greedy: usize,
    /// Greedy size over the exact optimum.
    pub ratio: Option<f64>,
    pub log_bound: f64,
    /// Every produced solution verified.
    pub valid: bool,
}

impl InstanceReport {
    /// Exact solvers agree with the oracle and greedy stays within its bound.
    pub fn consistent(&self) -> bool {
        let agrees = |s: Option<usize>| match (s, self.exact) {
            (Some(a), Some(b)) => a == b,
            _ => true,
        };
        self.valid
            && agrees(self.interval)
            && agrees(self.tree)
            && self.ratio.is_none_or(|r| r <= self.log_bound)
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CorpusSummary {
    pub corpus: String,
    pub instances: usize,
    pub consistent: usize,
    pub mean_ratio: Option<f64>,
    pub max_ratio: Option<f64>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct BenchReport {
    pub instances: Vec<InstanceReport>,
    pub summary: Vec<CorpusSummary>,
}

impl BenchReport {
    pub fn all_consistent(&self) -> bool {
        self.instances.iter().all(InstanceReport::consistent)
    }
}

fn verified(g: &Graph, sol: &SemipairedSolution) -> Result<bool> {
    Ok(verify_solution(g, sol)?.is_valid())
}

fn run_one(entry: &CorpusEntry) -> Result<InstanceReport> {
    let inst = generate(&entry.spec)?;
    let mut valid = true;
    let (g, interval) = match &inst {
        Instance::Interval(model) => {
            let (g, run) = solve_model(model)?;
            valid &= verified(&g, &run.solution)?;
            (g, Some(run.solution.cardinality()))
        }
        Instance::Graph(g) => (g.clone(), None),
    };
    let tree = if g.is_tree() && g.n() >= 2 {
        let sol = semi_paired_dom_tree(&g)?;
        valid &= verified(&g, &sol)?;
        Some(sol.cardinality())
    } else {
        None
    };
    let greedy = approx_semi_paired(&g)?;
    valid &= verified(&g, &greedy.solution)?;
    let exact = if g.n() <= EXACT_LIMIT {
        Some(exact_semi_pd(&g, None)?.cardinality)
    } else {
        None
    };
    let cert = RatioCertificate::<f64>::for_delta(g.max_degree());
    let greedy = greedy.solution.cardinality();
    Ok(InstanceReport {
        corpus: entry.corpus.to_string(),
        family: entry.spec.family.to_string(),
        n: entry.spec.n,
        seed: entry.spec.seed,
        m: g.m(),
        exact,
        interval,
        tree,
        greedy,
        ratio: exact.map(|e| greedy as f64 / e as f64),
        log_bound: cert.log_bound,
        valid,
    })
}

/// Worker count from [`THREADS_ENV`], if set to a positive integer.
pub fn threads_from_env() -> Result<Option<usize>> {
    match std::env::var(THREADS_ENV) {
        Err(_) => Ok(None),
        Ok(s) => match s.trim().parse::<usize>() {
            Ok(t) if t > 0 => Ok(Some(t)),
            _ => Err(Error::Invalid(format!(
                "{THREADS_ENV} must be a positive integer, got {s:?}"
            ))),
        },
    }
}

pub fn run_bench(manifest: &[CorpusEntry], threads: Option<usize>) -> Result<BenchReport> {
    let mut builder = rayon::ThreadPoolBuilder::new();
    if let Some(t) = threads {
        builder = builder.num_threads(t);
    }
    let pool = builder
        .build()
        .map_err(|e| Error::Invalid(format!("thread pool: {e}")))?;
    let instances =
        pool.install(|| manifest.par_iter().map(run_one).collect::<Result<Vec<_>>>())?;

    let mut summary: Vec<CorpusSummary> = Vec::new();
    for r in &instances {
        if summary.last().is_none_or(|s| s.corpus != r.corpus) {
            summary.push(CorpusSummary {
                corpus: r.corpus.clone(),
                instances: 0,
                consistent: 0,
                mean_ratio: None,
                max_ratio: None,
            });
        }
        let s = summary.last_mut().unwrap();
        s.instances += 1;
        s.consistent += usize::from(r.consistent());
        if let Some(x) = r.ratio {
            s.max_ratio = Some(s.max_ratio.map_or(x, |m: f64| m.max(x)));
            s.mean_ratio = Some(s.mean_ratio.unwrap_or(0.0) + x);
        }
    }
    for s in &mut summary {
        let counted = instances
            .iter()
            .filter(|r| r.corpus == s.corpus && r.ratio.is_some())
            .count();
        s.mean_ratio = s.mean_ratio.map(|t| t / counted as f64);
    }
    Ok(BenchReport { instances, summary })
}

fn opt(v: Option<usize>) -> String {
    v.map_or_else(|| "-".to_string(), |x| x.to_string())
}

fn ratio(v: Option<f64>) -> String {
    v.map_or_else(|| "-".to_string(), |x| format!("{x:.4}"))
}

impl fmt::Display for BenchReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut out = String::new();
        writeln!(
            out,
            "{:<9} {:<26} {:>3} {:>5} {:>3} {:>5} {:>8} {:>4} {:>6} {:>6} {:>6} ok",
            "corpus",
            "family",
            "n",
            "seed",
            "m",
            "exact",
            "interval",
            "tree",
            "greedy",
            "ratio",
            "bound"
        )?;
        for r in &self.instances {
            writeln!(
                out,
                "{:<9} {:<26} {:>3} {:>5} {:>3} {:>5} {:>8} {:>4} {:>6} {:>6} {:>6.4} {}",
                r.corpus,
                r.family,
                r.n,
                r.seed,
                r.m,
                opt(r.exact),
                opt(r.interval),
                opt(r.tree),
                r.greedy,
                ratio(r.ratio),
                r.log_bound,
                if r.consistent() { "yes" } else { "NO" }
            )?;
        }
        writeln!(out)?;
        writeln!(
            out,
            "{:<9} {:>9} {:>10} {:>10} {:>9}",
            "corpus", "instances", "consistent", "mean-ratio", "max-ratio"
        )?;
        for s in &self.summary {
            writeln!(
                out,
                "{:<9} {:>9} {:>10} {:>10} {:>9}",
                s.corpus,
                s.instances,
                s.consistent,
                ratio(s.mean_ratio),
                ratio(s.max_ratio)
            )?;
        }
        f.write_str(&out)
    }
}
