//! Brute-force exact solvers: γ, γpr2, γpr and τ.
//!
//! Every solver enumerates vertex subsets by increasing cardinality and
//! lexicographically within a cardinality, so the witness is the
//! lexicographically smallest optimal set. Pruning only discards prefixes
//! that cannot be completed to a dominating set, which leaves the order of
//! the surviving candidates untouched.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};
use crate::verify::{find_pairing, SemipairedSolution};

/// Largest graph the oracles accept; subsets are held in a `u64`.
pub const MAX_ORACLE_VERTICES: usize = 64;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub enum Witness {
    Set(VertexSet),
    Pairing(SemipairedSolution),
}

impl Witness {
    pub fn vertices(&self) -> Vec<usize> {
        match self {
            Witness::Set(s) => s.to_vec(),
            Witness::Pairing(p) => p.vertices(),
        }
    }

    pub fn pairing(&self) -> Option<&SemipairedSolution> {
        match self {
            Witness::Pairing(p) => Some(p),
            Witness::Set(_) => None,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct OracleResult {
    pub cardinality: usize,
    pub witness: Witness,
    /// Complete candidate subsets examined.
    pub explored: u64,
}

impl OracleResult {
    /// The semipaired witness, for results of the paired-type oracles.
    pub fn solution(&self) -> Option<&SemipairedSolution> {
        self.witness.pairing()
    }
}

// Vertex v (1-based) lives in bit v-1.
struct Masks {
    n: usize,
    full: u64,
    closed: Vec<u64>,
    adj: Vec<u64>,
    close2: Vec<u64>,
    // must_by[c]: vertices whose closed neighborhood lies strictly below c.
    must_by: Vec<u64>,
    max_closed: u32,
}

impl Masks {
    fn new(g: &Graph) -> Result<Self> {
        let n = g.n();
        if n > MAX_ORACLE_VERTICES {
            return Err(Error::TooLarge {
                n,
                max: MAX_ORACLE_VERTICES,
            });
        }
        let full = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
        let mut adj = vec![0u64; n];
        for v in g.vertices() {
            for &w in g.neighbors(v) {
                adj[v - 1] |= 1 << (w - 1);
            }
        }
        let closed: Vec<u64> = (0..n).map(|i| adj[i] | 1 << i).collect();
        let close2: Vec<u64> = (0..n)
            .map(|i| {
                let mut m = closed[i];
                let mut nb = adj[i];
                while nb != 0 {
                    let j = nb.trailing_zeros() as usize;
                    nb &= nb - 1;
                    m |= closed[j];
                }
                m & !(1 << i)
            })
            .collect();
        let mut must_by = vec![0u64; n + 1];
        for (i, &c) in closed.iter().enumerate() {
            let top = 63 - c.leading_zeros() as usize;
            for slot in must_by.iter_mut().skip(top + 1) {
                *slot |= 1 << i;
            }
        }
        let max_closed = closed.iter().map(|c| c.count_ones()).max().unwrap_or(1);
        Ok(Masks {
            n,
            full,
            closed,
            adj,
            close2,
            must_by,
            max_closed,
        })
    }

    fn to_set(&self, mask: u64) -> VertexSet {
        let mut s = VertexSet::new(self.n);
        let mut m = mask;
        while m != 0 {
            s.insert(m.trailing_zeros() as usize + 1);
            m &= m - 1;
        }
        s
    }

    /// Lexicographically first dominating `k`-subset accepted by `accept`.
    fn first_dominating(
        &self,
        k: usize,
        accept: &dyn Fn(u64) -> bool,
        explored: &mut u64,
    ) -> Option<u64> {
        self.dominating_from(0, 0, 0, k, accept, explored)
    }

    fn dominating_from(
        &self,
        start: usize,
        chosen: u64,
        covered: u64,
        remaining: usize,
        accept: &dyn Fn(u64) -> bool,
        explored: &mut u64,
    ) -> Option<u64> {
        if remaining == 0 {
            *explored += 1;
            return (covered == self.full && accept(chosen)).then_some(chosen);
        }
        let uncovered = (self.full & !covered).count_ones() as usize;
        if uncovered > remaining * self.max_closed as usize {
            return None;
        }
        for c in start..=self.n - remaining {
            if self.must_by[c] & !covered != 0 {
                break;
            }
            let found = self.dominating_from(
                c + 1,
                chosen | 1 << c,
                covered | self.closed[c],
                remaining - 1,
                accept,
                explored,
            );
            if found.is_some() {
                return found;
            }
        }
        None
    }
}

/// Whether `set` splits into pairs `{i, j}` with `j` in `partners[i]`.
fn pairable(set: u64, partners: &[u64]) -> bool {
    if set == 0 {
        return true;
    }
    let i = set.trailing_zeros() as usize;
    let rest = set & !(1 << i);
    let mut cand = rest & partners[i];
    while cand != 0 {
        let j = cand.trailing_zeros() as usize;
        cand &= cand - 1;
        if pairable(rest & !(1 << j), partners) {
            return true;
        }
    }
    false
}

/// γpr2 by exhaustion over even cardinalities 2, 4, 6, ...
///
/// With `upper_bound`, cardinalities above it are not tried and
/// `Error::BoundExceeded` is returned if nothing smaller works.
pub fn exact_semi_pd(g: &Graph, upper_bound: Option<usize>) -> Result<OracleResult> {
    g.require_connected_nontrivial()?;
    let masks = Masks::new(g)?;
    let limit = upper_bound.unwrap_or(g.n()).min(g.n());
    let mut explored = 0;
    let accept = |set: u64| pairable(set, &masks.close2);
    for k in (2..=limit).step_by(2) {
        if let Some(mask) = masks.first_dominating(k, &accept, &mut explored) {
            let set = masks.to_set(mask);
            let pairing = find_pairing(g, &set).expect("mask search found a pairing");
            return Ok(OracleResult {
                cardinality: k,
                witness: Witness::Pairing(pairing),
                explored,
            });
        }
    }
    Err(Error::BoundExceeded(limit))
}

/// γ by exhaustion.
pub fn exact_domination(g: &Graph) -> Result<OracleResult> {
    let masks = Masks::new(g)?;
    let mut explored = 0;
    for k in 1..=g.n() {
        if let Some(mask) = masks.first_dominating(k, &|_| true, &mut explored) {
            return Ok(OracleResult {
                cardinality: k,
                witness: Witness::Set(masks.to_set(mask)),
                explored,
            });
        }
    }
    unreachable!("the full vertex set dominates")
}

/// γpr by exhaustion: the pairs must be edges.
pub fn exact_paired_domination(g: &Graph) -> Result<OracleResult> {
    if let Some(v) = g.vertices().find(|&v| g.degree(v) == 0) {
        return Err(Error::IsolatedVertex(v));
    }
    let masks = Masks::new(g)?;
    let mut explored = 0;
    let accept = |set: u64| pairable(set, &masks.adj);
    for k in (2..=g.n()).step_by(2) {
        if let Some(mask) = masks.first_dominating(k, &accept, &mut explored) {
            let mut pairs = Vec::new();
            pair_edges(mask, &masks.adj, &mut pairs);
            return Ok(OracleResult {
                cardinality: k,
                witness: Witness::Pairing(SemipairedSolution::new(pairs)),
                explored,
            });
        }
    }
    // A maximal matching dominates an isolate-free graph, so this is unreachable.
    Err(Error::BoundExceeded(g.n()))
}

fn pair_edges(set: u64, adj: &[u64], out: &mut Vec<(usize, usize)>) -> bool {
    if set == 0 {
        return true;
    }
    let i = set.trailing_zeros() as usize;
    let rest = set & !(1 << i);
    let mut cand = rest & adj[i];
    while cand != 0 {
        let j = cand.trailing_zeros() as usize;
        cand &= cand - 1;
        out.push((i + 1, j + 1));
        if pair_edges(rest & !(1 << j), adj, out) {
            return true;
        }
        out.pop();
    }
    false
}

/// τ by exhaustion.
pub fn exact_vertex_cover(g: &Graph) -> Result<OracleResult> {
    let masks = Masks::new(g)?;
    let mut explored = 0;
    for k in 0..=g.n() {
        if let Some(mask) = first_cover(&masks, 0, 0, k, &mut explored) {
            return Ok(OracleResult {
                cardinality: k,
                witness: Witness::Set(masks.to_set(mask)),
                explored,
            });
        }
    }
    unreachable!("the full vertex set covers every edge")
}

fn first_cover(
    masks: &Masks,
    start: usize,
    chosen: u64,
    remaining: usize,
    explored: &mut u64,
) -> Option<u64> {
    // Vertices below `start` are decided; an unchosen one needs all of its
    // neighbors chosen, and the ones below `start` are already fixed.
    let below = if start == 64 {
        u64::MAX
    } else {
        (1u64 << start) - 1
    };
    let mut out = below & !chosen;
    while out != 0 {
        let v = out.trailing_zeros() as usize;
        out &= out - 1;
        if masks.adj[v] & below & !chosen != 0 {
            return None;
        }
    }
    if remaining == 0 {
        *explored += 1;
        let covers = (0..masks.n).all(|v| chosen & 1 << v != 0 || masks.adj[v] & !chosen == 0);
        return covers.then_some(chosen);
    }
    for c in start..=masks.n - remaining {
        if let Some(found) = first_cover(masks, c + 1, chosen | 1 << c, remaining - 1, explored) {
            return Some(found);
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::verify::verify_solution;

    #[test]
    fn semi_pd_examples() {
        let r = exact_semi_pd(&Graph::path(2), None).unwrap();
        assert_eq!(r.cardinality, 2);
        assert_eq!(r.solution().unwrap().pairs(), &[(1, 2)]);

        let r = exact_semi_pd(&Graph::path(5), None).unwrap();
        assert_eq!(r.cardinality, 2);
        assert_eq!(r.solution().unwrap().pairs(), &[(2, 4)]);

        assert_eq!(exact_semi_pd(&Graph::path(6), None).unwrap().cardinality, 4);
    }

    #[test]
    fn semi_pd_guards() {
        let two = Graph::new(4, &[(1, 2), (3, 4)]).unwrap();
        assert_eq!(exact_semi_pd(&two, None), Err(Error::Disconnected));
        let single = Graph::new(1, &[]).unwrap();
        assert_eq!(exact_semi_pd(&single, None), Err(Error::TooFewVertices(1)));
        assert_eq!(
            exact_semi_pd(&Graph::path(6), Some(2)),
            Err(Error::BoundExceeded(2))
        );
        assert_eq!(
            exact_semi_pd(&Graph::path(6), Some(4)).unwrap().cardinality,
            4
        );
        assert!(matches!(
            exact_semi_pd(&Graph::path(65), None),
            Err(Error::TooLarge { .. })
        ));
    }

    #[test]
    fn domination_examples() {
        let r = exact_domination(&Graph::path(3)).unwrap();
        assert_eq!((r.cardinality, r.witness.vertices()), (1, vec![2]));
        let r = exact_domination(&Graph::path(6)).unwrap();
        assert_eq!((r.cardinality, r.witness.vertices()), (2, vec![2, 5]));
        assert_eq!(
            exact_domination(&Graph::complete(3)).unwrap().cardinality,
            1
        );
    }

    #[test]
    fn paired_examples() {
        assert_eq!(
            exact_paired_domination(&Graph::path(2))
                .unwrap()
                .cardinality,
            2
        );
        assert_eq!(
            exact_paired_domination(&Graph::path(5))
                .unwrap()
                .cardinality,
            4
        );
        let r = exact_paired_domination(&Graph::cycle(4)).unwrap();
        assert_eq!(r.cardinality, 2);
        assert_eq!(r.solution().unwrap().pairs(), &[(1, 2)]);
        let iso = Graph::new(3, &[(1, 2)]).unwrap();
        assert_eq!(exact_paired_domination(&iso), Err(Error::IsolatedVertex(3)));
    }

    #[test]
    fn vertex_cover_examples() {
        let r = exact_vertex_cover(&Graph::path(3)).unwrap();
        assert_eq!((r.cardinality, r.witness.vertices()), (1, vec![2]));
        assert_eq!(
            exact_vertex_cover(&Graph::complete(3)).unwrap().cardinality,
            2
        );
        assert_eq!(exact_vertex_cover(&Graph::path(4)).unwrap().cardinality, 2);
        let edgeless = Graph::new(3, &[]).unwrap();
        assert_eq!(exact_vertex_cover(&edgeless).unwrap().cardinality, 0);
    }

    #[test]
    fn witnesses_verify() {
        let g = Graph::new(7, &[(1, 2), (2, 3), (3, 4), (4, 5), (2, 6), (6, 7), (5, 7)]).unwrap();
        let r = exact_semi_pd(&g, None).unwrap();
        assert!(verify_solution(&g, r.solution().unwrap())
            .unwrap()
            .is_valid());
        let r = exact_paired_domination(&g).unwrap();
        let sol = r.solution().unwrap();
        assert!(verify_solution(&g, sol).unwrap().is_valid());
        assert!(sol.pairs().iter().all(|&(u, v)| g.has_edge(u, v)));
    }
}
