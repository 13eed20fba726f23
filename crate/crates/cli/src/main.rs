use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use semipair::bench::{default_manifest, run_bench, threads_from_env};
use semipair::exact::{
    exact_domination, exact_paired_domination, exact_semi_pd, MAX_ORACLE_VERTICES,
};
use semipair::generate::{generate, Family, GenSpec, Instance};
use semipair::greedy::{approx_semi_paired, ratio_certificate};
use semipair::interval::{
    semi_paired_dom_interval, solve_model_in_model_ids, IntervalModel, LeftEndOrdering,
};
use semipair::io::{
    emit_edgelist, emit_intervals, emit_labels, emit_solution, parse_edgelist, parse_intervals,
    parse_labels, parse_solution,
};
use semipair::reductions::{
    check_identity, dom_to_semipd_hardness, dom_to_semipd_split, extract_dominating_set, gp4_from,
    vc_to_semipd_bipartite, ReductionKind,
};
use semipair::tree::semi_paired_dom_tree;
use semipair::{verify_solution, Error, Graph, SemipairedSolution, Verdict};

/// Largest graph on which `--verify-small` runs the exact oracle.
const SMALL_LIMIT: usize = 24;

#[derive(Parser)]
#[command(
    name = "semipair",
    version,
    about = "Semipaired domination solvers, verifier and reductions"
)]
struct Cli {
    /// Print one JSON object instead of the text report.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compute a semipaired dominating set.
    Solve {
        #[arg(long, value_enum, default_value_t = Algo::Auto)]
        algo: Algo,
        /// Fail (exit 2) if no solution of at most this size is found.
        #[arg(long)]
        bound: Option<usize>,
        /// Cross-check against the exact oracle on small inputs.
        #[arg(long)]
        verify_small: bool,
        /// Reject inputs that are not trees.
        #[arg(long)]
        assert_tree: bool,
        /// Vertex ordering file for `--algo interval` on an edge list.
        #[arg(long)]
        ordering: Option<PathBuf>,
        /// Write the solution file here.
        #[arg(long, short)]
        out: Option<PathBuf>,
        file: PathBuf,
    },
    /// Check a solution file against a graph.
    Verify { file: PathBuf, solution: PathBuf },
    /// Build a reduction gadget from a source graph.
    Reduce {
        #[arg(long)]
        kind: ReductionKind,
        /// Write the gadget edge list here.
        #[arg(long, short)]
        out: Option<PathBuf>,
        /// Write the vertex labels here.
        #[arg(long)]
        labels: Option<PathBuf>,
        /// Evaluate both sides of the cardinality identity with the oracles.
        #[arg(long)]
        check: bool,
        file: PathBuf,
    },
    /// Recover a dominating set of the source from a hardness-gadget solution.
    ExtractDs {
        gadget: PathBuf,
        labels: PathBuf,
        solution: PathBuf,
    },
    /// Generate a seeded instance.
    Gen {
        /// path, cycle, star, gnp:P, random-tree, random-interval, gp4:INNER
        family: Family,
        n: usize,
        #[arg(default_value_t = 0)]
        seed: u64,
        #[arg(long, short)]
        out: Option<PathBuf>,
    },
    /// Run the seeded corpora and print a summary.
    Bench,
    /// Compute γ, γpr2 and γpr and check γ ≤ γpr2 ≤ γpr.
    CheckChain { file: PathBuf },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Algo {
    Exact,
    Interval,
    Tree,
    Greedy,
    Auto,
}

impl Algo {
    fn name(self) -> &'static str {
        match self {
            Algo::Exact => "exact",
            Algo::Interval => "interval",
            Algo::Tree => "tree",
            Algo::Greedy => "greedy",
            Algo::Auto => "auto",
        }
    }
}

/// A command outcome: report text, JSON mirror, and whether a check failed.
struct Report {
    text: String,
    json: Value,
    failed: bool,
}

/// Invalid input of any kind; exit code 1.
struct Failure(String);

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure(e.to_string())
    }
}

type Outcome = Result<Report, Failure>;

fn read(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| Failure(format!("{}: {e}", path.display())))
}

fn write(path: &Path, text: &str) -> Result<(), Failure> {
    fs::write(path, text).map_err(|e| Failure(format!("{}: {e}", path.display())))
}

fn read_graph(path: &Path) -> Result<Graph, Failure> {
    parse_edgelist(&read(path)?).map_err(|e| Failure(format!("{}: {e}", path.display())))
}

enum Input {
    Graph(Graph),
    IntegerIntervals(IntervalModel<i64>),
    RealIntervals(IntervalModel<f64>),
}

/// Edge lists start with `n m`, interval files with `n`.
fn read_input(path: &Path) -> Result<Input, Failure> {
    let text = read(path)?;
    let header_fields = text
        .lines()
        .map(str::trim)
        .find(|l| !l.is_empty() && !l.starts_with('#'))
        .map_or(0, |l| l.split_whitespace().count());
    let wrap = |e: Error| Failure(format!("{}: {e}", path.display()));
    if header_fields == 1 {
        match parse_intervals::<i64>(&text) {
            Ok(m) => Ok(Input::IntegerIntervals(m)),
            Err(Error::Parse { .. }) => parse_intervals::<f64>(&text)
                .map(Input::RealIntervals)
                .map_err(wrap),
            Err(e) => Err(wrap(e)),
        }
    } else {
        parse_edgelist(&text).map(Input::Graph).map_err(wrap)
    }
}

impl Input {
    fn graph(&self) -> Graph {
        match self {
            Input::Graph(g) => g.clone(),
            Input::IntegerIntervals(m) => m.intersection_graph(),
            Input::RealIntervals(m) => m.intersection_graph(),
        }
    }

    fn interval_solution(&self) -> Option<semipair::Result<SemipairedSolution>> {
        match self {
            Input::Graph(_) => None,
            Input::IntegerIntervals(m) => {
                Some(solve_model_in_model_ids(m).map(|(_, r)| r.solution))
            }
            Input::RealIntervals(m) => Some(solve_model_in_model_ids(m).map(|(_, r)| r.solution)),
        }
    }
}

fn pairs_text(sol: &SemipairedSolution) -> String {
    let s = sol.to_string();
    if s.is_empty() {
        "none".into()
    } else {
        s
    }
}

#[allow(clippy::too_many_arguments)]
fn solve(
    algo: Algo,
    bound: Option<usize>,
    verify_small: bool,
    assert_tree: bool,
    ordering: Option<PathBuf>,
    out: Option<PathBuf>,
    file: &Path,
) -> Outcome {
    let input = read_input(file)?;
    let g = input.graph();
    if assert_tree && !g.is_tree() {
        return Err(Error::NotATree.into());
    }
    let chosen = match algo {
        Algo::Auto if g.is_tree() && g.n() >= 2 => Algo::Tree,
        Algo::Auto if !matches!(input, Input::Graph(_)) => Algo::Interval,
        Algo::Auto => Algo::Greedy,
        a => a,
    };

    let mut text = String::new();
    let mut extra = serde_json::Map::new();
    let mut failed = false;
    let solution = match chosen {
        Algo::Exact => match exact_semi_pd(&g, bound) {
            Ok(r) => r
                .solution()
                .cloned()
                .expect("semipaired oracle returns a pairing"),
            Err(Error::BoundExceeded(b)) => {
                return Ok(Report {
                    text: format!("no semipaired dominating set of cardinality <= {b}\n"),
                    json: json!({ "algorithm": "exact", "bound": b, "found": false }),
                    failed: true,
                })
            }
            Err(e) => return Err(e.into()),
        },
        Algo::Tree => semi_paired_dom_tree(&g)?,
        Algo::Greedy => approx_semi_paired(&g)?.solution,
        Algo::Interval => match (input.interval_solution(), ordering) {
            (Some(r), None) => r?,
            (Some(_), Some(_)) => {
                return Err(Failure("--ordering applies only to edge-list input".into()))
            }
            (None, Some(path)) => {
                let ids: Result<Vec<usize>, _> = read(&path)?
                    .split_whitespace()
                    .map(str::parse::<usize>)
                    .collect();
                let ids = ids.map_err(|e| Failure(format!("{}: {e}", path.display())))?;
                semi_paired_dom_interval(&g, &LeftEndOrdering::new(ids)?)?.solution
            }
            (None, None) => {
                return Err(Failure(
                    "interval algorithm needs an interval file or --ordering".into(),
                ))
            }
        },
        Algo::Auto => unreachable!(),
    };

    let verdict = verify_solution(&g, &solution)?;
    writeln!(
        text,
        "γpr2 = {}; pairs: {}",
        solution.cardinality(),
        pairs_text(&solution)
    )
    .unwrap();
    if algo == Algo::Auto {
        writeln!(text, "algorithm: {}", chosen.name()).unwrap();
    }
    if !verdict.is_valid() {
        failed = true;
        writeln!(text, "verification: {verdict}").unwrap();
    }

    let exact = if verify_small && g.n() <= SMALL_LIMIT.min(MAX_ORACLE_VERTICES) {
        Some(exact_semi_pd(&g, None)?)
    } else {
        None
    };
    if chosen == Algo::Greedy {
        let trace = approx_semi_paired(&g)?;
        let cert = ratio_certificate::<f64>(&g, &trace, exact.as_ref());
        writeln!(
            text,
            "ratio certificate: Δ = {}, H(2Δ+2) = {:.4}, 1 + ln(2Δ+2) = {:.4}",
            cert.delta, cert.harmonic_bound, cert.log_bound
        )
        .unwrap();
        if let Some(a) = cert.achieved {
            writeln!(text, "achieved ratio: {a:.4}").unwrap();
        }
        failed |= !cert.holds();
        extra.insert("certificate".into(), json!(cert));
    }
    if let Some(e) = &exact {
        let ok = if chosen == Algo::Greedy {
            solution.cardinality() >= e.cardinality
        } else {
            solution.cardinality() == e.cardinality
        };
        writeln!(
            text,
            "exact check: γpr2 = {} ({})",
            e.cardinality,
            if ok { "ok" } else { "MISMATCH" }
        )
        .unwrap();
        failed |= !ok;
        extra.insert("exact".into(), json!(e.cardinality));
    } else if verify_small {
        writeln!(text, "exact check: skipped (n = {} > {SMALL_LIMIT})", g.n()).unwrap();
    }
    if let Some(b) = bound {
        if solution.cardinality() > b {
            writeln!(text, "bound {b} exceeded").unwrap();
            failed = true;
        }
    }
    if let Some(path) = out {
        write(&path, &emit_solution(&solution))?;
    }
    let mut json = json!({
        "algorithm": chosen.name(),
        "cardinality": solution.cardinality(),
        "pairs": solution.pairs(),
        "valid": verdict.is_valid(),
    });
    json.as_object_mut().unwrap().extend(extra);
    Ok(Report { text, json, failed })
}

fn verify(file: &Path, sol: &Path) -> Outcome {
    let g = read_input(file)?.graph();
    let solution =
        parse_solution(&read(sol)?).map_err(|e| Failure(format!("{}: {e}", sol.display())))?;
    let verdict = verify_solution(&g, &solution)?;
    let json = match &verdict {
        Verdict::Valid => json!({ "valid": true, "cardinality": solution.cardinality() }),
        Verdict::Invalid(v) => {
            json!({ "valid": false, "violation": v.kind(), "detail": v.to_string() })
        }
    };
    Ok(Report {
        text: format!("{verdict}\n"),
        json,
        failed: !verdict.is_valid(),
    })
}

fn reduce(
    kind: ReductionKind,
    out: Option<PathBuf>,
    labels: Option<PathBuf>,
    check: bool,
    file: &Path,
) -> Outcome {
    let g = read_graph(file)?;
    let red = match kind {
        ReductionKind::Gp4 => gp4_from(&g)?,
        ReductionKind::Bipartite => vc_to_semipd_bipartite(&g)?,
        ReductionKind::Split => dom_to_semipd_split(&g)?,
        ReductionKind::Hardness => dom_to_semipd_hardness(&g)?,
    };
    let mut text = format!(
        "{} gadget: {} vertices, {} edges\n",
        kind,
        red.gadget.n(),
        red.gadget.m()
    );
    let mut json = json!({
        "kind": kind.name(),
        "vertices": red.gadget.n(),
        "edges": red.gadget.m(),
        "identity": red.identity,
    });
    let mut failed = false;
    if check {
        let c = check_identity(&red, &g)?;
        writeln!(
            text,
            "{}: claimed {}, observed {} ({})",
            red.identity,
            c.claimed,
            c.observed,
            if c.holds() { "ok" } else { "MISMATCH" }
        )
        .unwrap();
        failed = !c.holds();
        json["check"] = json!(c);
    }
    if let Some(path) = out {
        write(&path, &emit_edgelist(&red.gadget))?;
    }
    if let Some(path) = labels {
        write(&path, &emit_labels(&red))?;
    }
    Ok(Report { text, json, failed })
}

fn extract_ds(gadget: &Path, labels: &Path, sol: &Path) -> Outcome {
    let g = read_graph(gadget)?;
    let red = parse_labels(&read(labels)?, g)
        .map_err(|e| Failure(format!("{}: {e}", labels.display())))?;
    let dsp =
        parse_solution(&read(sol)?).map_err(|e| Failure(format!("{}: {e}", sol.display())))?;
    match extract_dominating_set(&red, &dsp) {
        Ok(ex) => {
            let set = ex.dominating_set.to_vec();
            let ids: Vec<String> = set.iter().map(usize::to_string).collect();
            let text = format!(
                "dominating set: {{{}}}; |D| = {} <= {} = |Dsp|/2; side {}; replaced {}\n",
                ids.join(","),
                set.len(),
                dsp.cardinality() / 2,
                ex.side,
                ex.replaced.len()
            );
            Ok(Report {
                text,
                json: json!(ex),
                failed: false,
            })
        }
        Err(Error::InvalidSolution(why)) => Ok(Report {
            text: format!("invalid: {why}\n"),
            json: json!({ "valid": false, "detail": why }),
            failed: true,
        }),
        Err(e) => Err(e.into()),
    }
}

fn gen(family: Family, n: usize, seed: u64, out: Option<PathBuf>) -> Outcome {
    let inst = generate(&GenSpec::new(family.clone(), n, seed))?;
    let body = match &inst {
        Instance::Graph(g) => emit_edgelist(g),
        Instance::Interval(m) => emit_intervals(m),
    };
    let json = json!({ "family": family.to_string(), "n": n, "seed": seed, "file": body });
    let text = match out {
        Some(path) => {
            write(&path, &body)?;
            String::new()
        }
        None => body,
    };
    Ok(Report {
        text,
        json,
        failed: false,
    })
}

fn bench() -> Outcome {
    let report = run_bench(&default_manifest(), threads_from_env()?)?;
    Ok(Report {
        text: report.to_string(),
        json: json!(report),
        failed: !report.all_consistent(),
    })
}

fn check_chain(file: &Path) -> Outcome {
    let g = read_input(file)?.graph();
    let d = exact_domination(&g)?.cardinality;
    let s = exact_semi_pd(&g, None)?.cardinality;
    let p = exact_paired_domination(&g)?.cardinality;
    let holds = d <= s && s <= p;
    let text = format!(
        "γ = {d}, γpr2 = {s}, γpr = {p}\n{d} {} {s} {} {p}\n",
        if d <= s { "≤" } else { ">" },
        if s <= p { "≤" } else { ">" }
    );
    Ok(Report {
        text,
        json: json!({ "gamma": d, "gamma_pr2": s, "gamma_pr": p, "holds": holds }),
        failed: !holds,
    })
}

fn run(cli: Cli) -> Outcome {
    match cli.command {
        Command::Solve {
            algo,
            bound,
            verify_small,
            assert_tree,
            ordering,
            out,
            file,
        } => solve(algo, bound, verify_small, assert_tree, ordering, out, &file),
        Command::Verify { file, solution } => verify(&file, &solution),
        Command::Reduce {
            kind,
            out,
            labels,
            check,
            file,
        } => reduce(kind, out, labels, check, &file),
        Command::ExtractDs {
            gadget,
            labels,
            solution,
        } => extract_ds(&gadget, &labels, &solution),
        Command::Gen {
            family,
            n,
            seed,
            out,
        } => gen(family, n, seed, out),
        Command::Bench => bench(),
        Command::CheckChain { file } => check_chain(&file),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 1 } else { 0 });
        }
    };
    let json = cli.json;
    match run(cli) {
        Ok(report) => {
            if json {
                println!("{}", report.json);
            } else {
                print!("{}", report.text);
            }
            ExitCode::from(if report.failed { 2 } else { 0 })
        }
        Err(Failure(msg)) => {
            if json {
                println!("{}", json!({ "error": msg }));
            } else {
                eprintln!("error: {msg}");
            }
            ExitCode::from(1)
        }
    }
}
