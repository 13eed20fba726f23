//! Minimum semipaired domination on interval graphs.
//!
//! The solver sweeps the left-end ordering `v_1, ..., v_n` from the right.
//! Each step looks at the highest remaining vertex `v_i`, follows the
//! least-index-neighbor chain `j = F(i)`, `k = F(j)`, `r = F(k)`, commits one
//! pair (two pairs when `v_1` is left undominated), and then either finishes
//! or restarts on the prefix `v_1, ..., v_s` where `v_s` is the last earlier
//! non-neighbor of the pair's low end.

use std::cmp::Ordering;

use num_traits::Num;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::verify::SemipairedSolution;

/// Closed intervals with pairwise distinct endpoints.
#[derive(Debug, Clone, PartialEq)]
pub struct IntervalModel<T> {
    intervals: Vec<(T, T)>,
}

impl<T: Num + PartialOrd + Copy> IntervalModel<T> {
    pub fn new(intervals: Vec<(T, T)>) -> Result<Self> {
        if intervals.is_empty() {
            return Err(Error::EmptyGraph);
        }
        for (idx, &(a, b)) in intervals.iter().enumerate() {
            if a.partial_cmp(&b) != Some(Ordering::Less) {
                return Err(Error::InvalidInterval { index: idx + 1 });
            }
        }
        let mut ends: Vec<T> = intervals.iter().flat_map(|&(a, b)| [a, b]).collect();
        // NaN cannot survive the a < b check above, so the comparison is total here.
        ends.sort_by(|x, y| x.partial_cmp(y).unwrap());
        if ends.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::DuplicateEndpoint);
        }
        Ok(IntervalModel { intervals })
    }

    pub fn len(&self) -> usize {
        self.intervals.len()
    }

    pub fn is_empty(&self) -> bool {
        self.intervals.is_empty()
    }

    /// Interval of vertex `v` (1-based, model numbering).
    pub fn interval(&self, v: usize) -> (T, T) {
        self.intervals[v - 1]
    }

    pub fn intervals(&self) -> &[(T, T)] {
        &self.intervals
    }

    /// Model vertices sorted by left endpoint.
    pub fn left_end_order(&self) -> LeftEndOrdering {
        let mut order: Vec<usize> = (1..=self.len()).collect();
        order.sort_by(|&x, &y| self.interval(x).0.partial_cmp(&self.interval(y).0).unwrap());
        LeftEndOrdering::from_order_unchecked(order)
    }

    /// Intersection graph with vertex `i` standing for the `i`-th interval
    /// of the left-end ordering, together with that ordering.
    pub fn to_graph(&self) -> (Graph, LeftEndOrdering) {
        let ord = self.left_end_order();
        let sorted: Vec<(T, T)> = ord.order().iter().map(|&v| self.interval(v)).collect();
        let mut edges = Vec::new();
        for (i, &(_, b)) in sorted.iter().enumerate() {
            // Left endpoints increase, so overlaps with later intervals form a run.
            for (j, &(a2, _)) in sorted.iter().enumerate().skip(i + 1) {
                if a2 >= b {
                    break;
                }
                edges.push((i + 1, j + 1));
            }
        }
        let g = Graph::new(self.len(), &edges).expect("positions are in range");
        (g, ord)
    }

    /// Intersection graph in the model's own numbering.
    pub fn intersection_graph(&self) -> Graph {
        let (g, ord) = self.to_graph();
        let edges: Vec<(usize, usize)> = g
            .edges()
            .into_iter()
            .map(|(p, q)| (ord.vertex_at(p), ord.vertex_at(q)))
            .collect();
        Graph::new(self.len(), &edges).expect("model ids are in range")
    }
}

/// A vertex ordering `v_1, ..., v_n` (stored as vertex ids) and its inverse.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LeftEndOrdering {
    order: Vec<usize>,
    position: Vec<usize>,
}

impl LeftEndOrdering {
    /// Validates that `order` is a permutation of `1..=order.len()`.
    pub fn new(order: Vec<usize>) -> Result<Self> {
        let n = order.len();
        let mut seen = vec![false; n + 1];
        for &v in &order {
            if v == 0 || v > n || seen[v] {
                return Err(Error::InvalidOrdering);
            }
            seen[v] = true;
        }
        Ok(Self::from_order_unchecked(order))
    }

    pub fn identity(n: usize) -> Self {
        Self::from_order_unchecked((1..=n).collect())
    }

    fn from_order_unchecked(order: Vec<usize>) -> Self {
        let mut position = vec![0; order.len() + 1];
        for (i, &v) in order.iter().enumerate() {
            position[v] = i + 1;
        }
        LeftEndOrdering { order, position }
    }

    pub fn len(&self) -> usize {
        self.order.len()
    }

    pub fn is_empty(&self) -> bool {
        self.order.is_empty()
    }

    pub fn order(&self) -> &[usize] {
        &self.order
    }

    /// Vertex at position `i` (1-based).
    pub fn vertex_at(&self, i: usize) -> usize {
        self.order[i - 1]
    }

    pub fn position_of(&self, v: usize) -> usize {
        self.position[v]
    }

    /// Whether every vertex is adjacent to all vertices between itself and
    /// its highest neighbor. An ordering with this property exists exactly
    /// for interval graphs, and every left-end ordering has it.
    pub fn is_interval_ordering(&self, g: &Graph) -> bool {
        if self.len() != g.n() {
            return false;
        }
        (1..=self.len()).all(|i| {
            let v = self.vertex_at(i);
            let higher: Vec<usize> = g
                .neighbors(v)
                .iter()
                .map(|&w| self.position_of(w))
                .filter(|&p| p > i)
                .collect();
            higher
                .iter()
                .max()
                .is_none_or(|&top| top - i == higher.len())
        })
    }
}

/// `F` and `L` for every position of an ordering.
///
/// `first[i]` is the least position adjacent to `v_i` (`first[1] = 1`);
/// `last_non_neighbor[i]` is the greatest `q < i` with `v_q` not adjacent to
/// `v_i`, or 0 when there is none. Index 0 of both vectors is unused.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct IntervalIndices {
    pub first: Vec<usize>,
    pub last_non_neighbor: Vec<usize>,
}

impl IntervalIndices {
    pub fn f(&self, i: usize) -> usize {
        self.first[i]
    }

    pub fn l(&self, i: usize) -> usize {
        self.last_non_neighbor[i]
    }
}

pub fn compute_indices(g: &Graph, ord: &LeftEndOrdering) -> IntervalIndices {
    let n = g.n();
    let mut first = vec![0; n + 1];
    let mut last_non_neighbor = vec![0; n + 1];
    let mut mark = vec![0usize; n + 1];
    for i in 1..=n {
        let v = ord.vertex_at(i);
        let positions = g.neighbors(v).iter().map(|&w| ord.position_of(w));
        first[i] = if i == 1 {
            1
        } else {
            positions.clone().min().unwrap_or(i)
        };
        for p in positions.filter(|&p| p < i) {
            mark[p] = i;
        }
        let mut q = i - 1;
        while q > 0 && mark[q] == i {
            q -= 1;
        }
        last_non_neighbor[i] = q;
    }
    IntervalIndices {
        first,
        last_non_neighbor,
    }
}

/// How a step finishes once its pair is chosen, keyed on `L` of the pair's
/// low end.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Tail {
    /// `L = v_0`: the pair dominates the whole remaining prefix.
    Sentinel,
    /// `L = v_1`: only `v_1` is left, covered by the extra pair `{v_1, v_2}`.
    First,
    /// `L = v_s`, `s >= 2`: continue on `v_1, ..., v_s`.
    Recurse { s: usize },
}

/// Branch taken by one sweep step. Positions refer to the ordering.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Branch {
    /// `F(v_i) = v_1`: pair `{v_1, v_i}`.
    FirstNeighbor,
    /// `F(v_i) = v_j`, `F(v_j) = v_1`: pair `{v_1, v_j}`.
    SecondNeighbor { j: usize },
    /// Everything strictly between `k` and `j` is adjacent to `v_j` or `v_r`:
    /// pair `{v_j, v_r}`.
    GapCovered {
        j: usize,
        k: usize,
        r: usize,
        tail: Tail,
    },
    /// Some vertex between `k` and `j` is missed; `t` is the last one not
    /// adjacent to `v_j` and `b = F(t)`: pair `{v_j, v_b}`.
    GapUncovered {
        j: usize,
        k: usize,
        r: usize,
        t: usize,
        b: usize,
        tail: Tail,
    },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct IntervalStep {
    pub i: usize,
    pub branch: Branch,
    /// Pairs committed in this step, as positions.
    pub added: Vec<(usize, usize)>,
    /// Remaining prefix `v_1, ..., v_remaining` after the step.
    pub remaining: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct IntervalRun {
    /// Pairs in the graph's own vertex ids.
    pub solution: SemipairedSolution,
    pub trace: Vec<IntervalStep>,
}

/// Minimum semipaired dominating set of a connected interval graph, given an
/// interval ordering of its vertices.
pub fn semi_paired_dom_interval(g: &Graph, ord: &LeftEndOrdering) -> Result<IntervalRun> {
    g.require_connected_nontrivial()?;
    if !ord.is_interval_ordering(g) {
        return Err(Error::InvalidOrdering);
    }
    let idx = compute_indices(g, ord);
    let adjacent = |p: usize, q: usize| g.has_edge(ord.vertex_at(p), ord.vertex_at(q));

    let mut solution = SemipairedSolution::default();
    let mut trace = Vec::new();
    let mut top = g.n();
    while top > 0 {
        // Restarts only happen at s >= 2, so a single-vertex prefix never occurs.
        debug_assert!(top >= 2);
        let i = top;
        let j = idx.f(i);
        let (branch, added, remaining) = if j == 1 {
            (Branch::FirstNeighbor, vec![(1, i)], 0)
        } else if idx.f(j) == 1 {
            (Branch::SecondNeighbor { j }, vec![(1, j)], 0)
        } else {
            let k = idx.f(j);
            let r = idx.f(k);
            let covered = (k + 1..j).all(|l| adjacent(l, j) || adjacent(l, r));
            let (partner, t) = if covered {
                (r, 0)
            } else {
                let t = (k + 1..j)
                    .rev()
                    .find(|&l| !adjacent(l, j))
                    .expect("an uncovered vertex is not adjacent to v_j");
                (idx.f(t), t)
            };
            let (tail, mut added, remaining) = match idx.l(partner) {
                0 => (Tail::Sentinel, vec![], 0),
                1 => (Tail::First, vec![(1, 2)], 0),
                s => (Tail::Recurse { s }, vec![], s),
            };
            added.push((j, partner));
            let branch = if covered {
                Branch::GapCovered { j, k, r, tail }
            } else {
                Branch::GapUncovered {
                    j,
                    k,
                    r,
                    t,
                    b: partner,
                    tail,
                }
            };
            (branch, added, remaining)
        };
        debug_assert!(remaining < top);
        for &(p, q) in &added {
            solution.push(ord.vertex_at(p), ord.vertex_at(q));
        }
        trace.push(IntervalStep {
            i,
            branch,
            added: added.iter().map(|&(p, q)| (p.min(q), p.max(q))).collect(),
            remaining,
        });
        top = remaining;
    }
    Ok(IntervalRun { solution, trace })
}

/// Solves a model directly; the solution uses left-end positions as ids.
pub fn solve_model<T: Num + PartialOrd + Copy>(
    model: &IntervalModel<T>,
) -> Result<(Graph, IntervalRun)> {
    let (g, _) = model.to_graph();
    let run = semi_paired_dom_interval(&g, &LeftEndOrdering::identity(g.n()))?;
    Ok((g, run))
}

/// Solves a model keeping its own numbering: the returned graph and
/// solution use the model's vertex ids.
pub fn solve_model_in_model_ids<T: Num + PartialOrd + Copy>(
    model: &IntervalModel<T>,
) -> Result<(Graph, IntervalRun)> {
    let g = model.intersection_graph();
    let run = semi_paired_dom_interval(&g, &model.left_end_order())?;
    Ok((g, run))
}

/// One line per step, in the style of a hand trace.
pub fn format_trace(trace: &[IntervalStep]) -> String {
    let mut out = String::new();
    for (n, step) in trace.iter().enumerate() {
        let desc = match step.branch {
            Branch::FirstNeighbor => "F(v_i) = v_1".to_string(),
            Branch::SecondNeighbor { j } => format!("j={j}, F(v_j) = v_1"),
            Branch::GapCovered { j, k, r, tail } => {
                format!("j={j} k={k} r={r}, gap covered, {}", tail_text(tail))
            }
            Branch::GapUncovered {
                j,
                k,
                r,
                t,
                b,
                tail,
            } => format!(
                "j={j} k={k} r={r}, gap uncovered, t={t} b={b}, {}",
                tail_text(tail)
            ),
        };
        let added: Vec<String> = step
            .added
            .iter()
            .map(|(p, q)| format!("{{v{p},v{q}}}"))
            .collect();
        let remaining = match step.remaining {
            0 => "none".to_string(),
            s => format!("v1..v{s}"),
        };
        out.push_str(&format!(
            "iteration {}: i={} {}; add {}; remaining {}\n",
            n + 1,
            step.i,
            desc,
            added.join(" "),
            remaining
        ));
    }
    out
}

fn tail_text(tail: Tail) -> String {
    match tail {
        Tail::Sentinel => "L = v0".into(),
        Tail::First => "L = v1".into(),
        Tail::Recurse { s } => format!("L = v{s}"),
    }
}
