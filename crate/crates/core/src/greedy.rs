//! Greedy approximation: repeatedly take the pair of unselected vertices at
//! distance at most two that dominates the most new vertices.

use num_traits::Float;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::exact::OracleResult;
use crate::graph::{Graph, VertexSet};
use crate::verify::SemipairedSolution;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GreedyRound {
    pub pair: (usize, usize),
    /// Vertices first dominated in this round.
    pub covered: Vec<usize>,
    pub gain: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GreedyTrace {
    pub rounds: Vec<GreedyRound>,
    pub solution: SemipairedSolution,
}

/// Ties go to the lexicographically smallest `(min, max)` pair.
pub fn approx_semi_paired(g: &Graph) -> Result<GreedyTrace> {
    if let Some(v) = g.vertices().find(|&v| g.degree(v) == 0) {
        return Err(Error::IsolatedVertex(v));
    }
    let n = g.n();
    let closed: Vec<VertexSet> = std::iter::once(VertexSet::new(n))
        .chain(g.vertices().map(|v| g.closed_neighborhood(v)))
        .collect();
    let reach: Vec<Vec<usize>> = std::iter::once(Vec::new())
        .chain(
            g.vertices()
                .map(|u| g.vertices_within_2(u).iter().filter(|&v| v > u).collect()),
        )
        .collect();

    let mut covered = VertexSet::new(n);
    let mut selected = vec![false; n + 1];
    let mut rounds = Vec::new();
    let mut solution = SemipairedSolution::default();

    while covered.len() < n {
        let mut best: Option<(usize, usize, usize)> = None;
        for u in g.vertices().filter(|&u| !selected[u]) {
            for &v in reach[u].iter().filter(|&&v| !selected[v]) {
                let mut union = closed[u].clone();
                union.union_with(&closed[v]);
                let gain = union.count_missing_from(&covered);
                if best.is_none_or(|(_, _, b)| gain > b) {
                    best = Some((u, v, gain));
                }
            }
        }
        let (u, v, gain) = best.expect("an undominated vertex and a neighbor are always eligible");
        assert!(gain > 0, "uncovered vertices remain but no pair gains");
        let mut fresh: Vec<usize> = closed[u]
            .iter()
            .chain(closed[v].iter())
            .filter(|&w| covered.insert(w))
            .collect();
        fresh.sort_unstable();
        selected[u] = true;
        selected[v] = true;
        solution.push(u, v);
        rounds.push(GreedyRound {
            pair: (u, v),
            covered: fresh,
            gain,
        });
    }
    Ok(GreedyTrace { rounds, solution })
}

/// `H(b) = 1 + 1/2 + ... + 1/b`.
pub fn harmonic<F: Float>(b: usize) -> F {
    (1..=b).rev().fold(F::zero(), |acc, i| {
        acc + F::one() / F::from(i).expect("index fits the float type")
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct RatioCertificate<F> {
    pub delta: usize,
    /// `H(2Δ + 2)`.
    pub harmonic_bound: F,
    /// `1 + ln(2Δ + 2)`.
    pub log_bound: F,
    /// Greedy size over optimum, when an optimum is known.
    pub achieved: Option<F>,
}

impl<F: Float> RatioCertificate<F> {
    pub fn for_delta(delta: usize) -> Self {
        let b = 2 * delta + 2;
        RatioCertificate {
            delta,
            harmonic_bound: harmonic(b),
            log_bound: F::one() + F::from(b).expect("bound fits the float type").ln(),
            achieved: None,
        }
    }

    /// `H(2Δ+2) ≤ 1 + ln(2Δ+2)` and, if known, `achieved ≤ 1 + ln(2Δ+2)`.
    pub fn holds(&self) -> bool {
        self.harmonic_bound <= self.log_bound && self.achieved.is_none_or(|a| a <= self.log_bound)
    }
}

pub fn ratio_certificate<F: Float>(
    g: &Graph,
    greedy: &GreedyTrace,
    optimum: Option<&OracleResult>,
) -> RatioCertificate<F> {
    let mut cert = RatioCertificate::for_delta(g.max_degree());
    cert.achieved = optimum
        .map(|o| F::from(greedy.solution.cardinality()).unwrap() / F::from(o.cardinality).unwrap());
    cert
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::verify::verify_solution;

    #[test]
    fn star_one_round() {
        let t = approx_semi_paired(&Graph::star(4)).unwrap();
        assert_eq!(t.rounds.len(), 1);
        assert_eq!(t.solution.pairs(), &[(1, 2)]);
    }

    #[test]
    fn p2_and_isolated() {
        let t = approx_semi_paired(&Graph::path(2)).unwrap();
        assert_eq!(t.solution.pairs(), &[(1, 2)]);
        let g = Graph::new(3, &[(1, 2)]).unwrap();
        assert_eq!(approx_semi_paired(&g), Err(Error::IsolatedVertex(3)));
    }

    #[test]
    fn p6_rounds() {
        let g = Graph::path(6);
        let t = approx_semi_paired(&g).unwrap();
        // After {2,4}, both {3,5} and {5,6} gain only vertex 6; (3,5) is
        // lexicographically first.
        assert_eq!(t.rounds[0].pair, (2, 4));
        assert_eq!(t.rounds[0].gain, 5);
        assert_eq!(t.rounds[1].pair, (3, 5));
        assert_eq!(t.rounds[1].covered, vec![6]);
        assert_eq!(t.solution.cardinality(), 4);
        assert!(verify_solution(&g, &t.solution).unwrap().is_valid());
    }

    #[test]
    fn harmonic_values() {
        let c = RatioCertificate::<f64>::for_delta(2);
        assert!((c.harmonic_bound - 2.45).abs() < 1e-12);
        assert!((c.log_bound - (1.0 + 6f64.ln())).abs() < 1e-12);
        assert!((c.log_bound - 2.7918).abs() < 1e-4);
        assert!(c.holds());
    }
}
