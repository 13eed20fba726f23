//! Seeded instance generators and the exhaustive free-tree catalog.

use std::collections::HashSet;
use std::fmt;
use std::str::FromStr;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::interval::IntervalModel;
use crate::reductions::gp4_from;

/// Resampling budget for families conditioned on connectivity.
pub const MAX_ATTEMPTS: usize = 1000;

#[derive(Debug, Clone, PartialEq)]
pub enum Family {
    Path,
    Cycle,
    /// Center 1 plus `n - 1` leaves.
    Star,
    /// Erdős–Rényi with edge probability `p`, conditioned on connectivity.
    Gnp(f64),
    /// Vertex `i >= 2` attaches to a uniform parent among `1..i`.
    RandomTree,
    /// Connected interval model with integer endpoints `1..=2n`.
    RandomInterval,
    /// GP4 graph hung off an instance of the inner family.
    Gp4(Box<Family>),
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Family::Path => f.write_str("path"),
            Family::Cycle => f.write_str("cycle"),
            Family::Star => f.write_str("star"),
            Family::Gnp(p) => write!(f, "gnp:{p}"),
            Family::RandomTree => f.write_str("random-tree"),
            Family::RandomInterval => f.write_str("random-interval"),
            Family::Gp4(inner) => write!(f, "gp4:{inner}"),
        }
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        if let Some(inner) = s.strip_prefix("gp4:") {
            return Ok(Family::Gp4(Box::new(inner.parse()?)));
        }
        if let Some(p) = s.strip_prefix("gnp:") {
            let p: f64 = p
                .parse()
                .map_err(|_| Error::Invalid(format!("bad gnp probability {p:?}")))?;
            if !(0.0..=1.0).contains(&p) {
                return Err(Error::Invalid(format!("gnp probability {p} not in [0, 1]")));
            }
            return Ok(Family::Gnp(p));
        }
        match s {
            "path" => Ok(Family::Path),
            "cycle" => Ok(Family::Cycle),
            "star" => Ok(Family::Star),
            "random-tree" => Ok(Family::RandomTree),
            "random-interval" => Ok(Family::RandomInterval),
            _ => Err(Error::Invalid(format!("unknown family {s:?}"))),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct GenSpec {
    pub family: Family,
    pub n: usize,
    pub seed: u64,
}

impl GenSpec {
    pub fn new(family: Family, n: usize, seed: u64) -> Self {
        GenSpec { family, n, seed }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum Instance {
    Graph(Graph),
    Interval(IntervalModel<i64>),
}

impl Instance {
    /// The graph itself, or the intersection graph of an interval model.
    pub fn graph(&self) -> Graph {
        match self {
            Instance::Graph(g) => g.clone(),
            Instance::Interval(m) => m.to_graph().0,
        }
    }
}

pub fn generate(spec: &GenSpec) -> Result<Instance> {
    let mut rng = ChaCha8Rng::seed_from_u64(spec.seed);
    generate_with(&spec.family, spec.n, &mut rng)
}

fn generate_with(family: &Family, n: usize, rng: &mut ChaCha8Rng) -> Result<Instance> {
    if n == 0 {
        return Err(Error::EmptyGraph);
    }
    let g = match family {
        Family::Path => Graph::path(n),
        Family::Cycle => {
            if n < 3 {
                return Err(Error::Invalid("cycle needs n >= 3".into()));
            }
            Graph::cycle(n)
        }
        Family::Star => Graph::star(n - 1),
        Family::Gnp(p) => gnp_connected(n, *p, rng)?,
        Family::RandomTree => random_tree(n, rng),
        Family::RandomInterval => return Ok(Instance::Interval(random_interval_model(n, rng)?)),
        Family::Gp4(inner) => {
            let h = generate_with(inner, n, rng)?.graph();
            gp4_from(&h)?.gadget
        }
    };
    Ok(Instance::Graph(g))
}

pub fn random_tree<R: Rng>(n: usize, rng: &mut R) -> Graph {
    let edges: Vec<_> = (2..=n).map(|v| (rng.gen_range(1..v), v)).collect();
    Graph::new(n, &edges).expect("tree edges are in range")
}

pub fn gnp_connected<R: Rng>(n: usize, p: f64, rng: &mut R) -> Result<Graph> {
    for _ in 0..MAX_ATTEMPTS {
        let mut edges = Vec::new();
        for u in 1..=n {
            for v in u + 1..=n {
                if rng.gen_bool(p) {
                    edges.push((u, v));
                }
            }
        }
        let g = Graph::new(n, &edges)?;
        if g.is_connected() {
            return Ok(g);
        }
    }
    Err(Error::RetriesExhausted(MAX_ATTEMPTS))
}

/// Connected interval model whose `2n` endpoints are exactly `1..=2n`.
///
/// Raw intervals get random starts and lengths up to a per-sample span, so
/// both sparse chains and dense overlaps show up; endpoints are then replaced
/// by their ranks.
pub fn random_interval_model<R: Rng>(n: usize, rng: &mut R) -> Result<IntervalModel<i64>> {
    for _ in 0..MAX_ATTEMPTS {
        let width = 4 * n as i64;
        let span = rng.gen_range(1..=2 * n as i64);
        let raw: Vec<(i64, i64)> = (0..n)
            .map(|_| {
                let a = rng.gen_range(0..width);
                (a, a + rng.gen_range(1..=span))
            })
            .collect();
        // (value, interval, side) sorts ties deterministically and keeps a < b.
        let mut ends: Vec<(i64, usize, usize)> = raw
            .iter()
            .enumerate()
            .flat_map(|(i, &(a, b))| [(a, i, 0), (b, i, 1)])
            .collect();
        ends.sort_unstable();
        let mut ranked = vec![(0i64, 0i64); n];
        for (rank, &(_, i, side)) in ends.iter().enumerate() {
            let r = rank as i64 + 1;
            if side == 0 {
                ranked[i].0 = r;
            } else {
                ranked[i].1 = r;
            }
        }
        let model = IntervalModel::new(ranked)?;
        if model.to_graph().0.is_connected() {
            return Ok(model);
        }
    }
    Err(Error::RetriesExhausted(MAX_ATTEMPTS))
}

/// Random permutation of `1..=n`.
pub fn shuffled_ids<R: Rng>(n: usize, rng: &mut R) -> Vec<usize> {
    let mut ids: Vec<usize> = (1..=n).collect();
    ids.shuffle(rng);
    ids
}

/// Relabels `g` by a seeded random permutation.
pub fn relabel_randomly<R: Rng>(g: &Graph, rng: &mut R) -> Graph {
    let perm = shuffled_ids(g.n(), rng);
    let edges: Vec<_> = g
        .edges()
        .into_iter()
        .map(|(u, v)| (perm[u - 1], perm[v - 1]))
        .collect();
    Graph::new(g.n(), &edges).expect("permutation keeps ids in range")
}

/// One representative of every isomorphism class of trees on `n` vertices.
///
/// Rooted trees come from canonical level sequences, each successor obtained
/// by copying the subtree pattern ending at the last level above 2; free-tree
/// duplicates are removed by a center-rooted canonical string.
pub fn free_trees(n: usize) -> Vec<Graph> {
    if n == 0 {
        return Vec::new();
    }
    if n == 1 {
        return vec![Graph::new(1, &[]).unwrap()];
    }
    let mut levels: Vec<usize> = (1..=n).collect();
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    loop {
        let g = tree_from_levels(&levels);
        if seen.insert(tree_canonical_form(&g)) {
            out.push(g);
        }
        let Some(p) = (0..n).rev().find(|&i| levels[i] > 2) else {
            break;
        };
        let q = (0..p).rev().find(|&i| levels[i] == levels[p] - 1).unwrap();
        let shift = p - q;
        for i in p..n {
            levels[i] = levels[i - shift];
        }
    }
    out
}

fn tree_from_levels(levels: &[usize]) -> Graph {
    let mut edges = Vec::new();
    let mut last_at_level = vec![0usize; levels.len() + 2];
    for (i, &lv) in levels.iter().enumerate() {
        if lv > 1 {
            edges.push((last_at_level[lv - 1], i + 1));
        }
        last_at_level[lv] = i + 1;
    }
    Graph::new(levels.len(), &edges).expect("level sequence")
}

/// Isomorphism-invariant string for a tree.
pub fn tree_canonical_form(t: &Graph) -> String {
    let mut degree: Vec<usize> = (0..=t.n())
        .map(|v| if v == 0 { 0 } else { t.degree(v) })
        .collect();
    let mut layer: Vec<usize> = t.vertices().filter(|&v| degree[v] <= 1).collect();
    let mut left = t.n();
    while left > 2 {
        left -= layer.len();
        let mut next = Vec::new();
        for &v in &layer {
            for &w in t.neighbors(v) {
                degree[w] -= 1;
                if degree[w] == 1 {
                    next.push(w);
                }
            }
        }
        layer = next;
    }
    layer
        .iter()
        .map(|&c| rooted_form(t, c, 0))
        .min()
        .unwrap_or_default()
}

fn rooted_form(t: &Graph, v: usize, parent: usize) -> String {
    let mut kids: Vec<String> = t
        .neighbors(v)
        .iter()
        .filter(|&&w| w != parent)
        .map(|&w| rooted_form(t, w, v))
        .collect();
    kids.sort_unstable();
    format!("({})", kids.concat())
}
