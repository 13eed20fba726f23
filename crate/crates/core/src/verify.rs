//! Semipaired solutions and their certificate checks.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::graph::{Graph, VertexSet};

/// A vertex set given together with its partition into semipaired pairs.
///
/// Pairs keep the order in which a solver produced them; each pair is stored
/// with its smaller id first.
#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize, Deserialize)]
pub struct SemipairedSolution {
    pairs: Vec<(usize, usize)>,
}

impl SemipairedSolution {
    pub fn new<I: IntoIterator<Item = (usize, usize)>>(pairs: I) -> Self {
        SemipairedSolution {
            pairs: pairs
                .into_iter()
                .map(|(u, v)| (u.min(v), u.max(v)))
                .collect(),
        }
    }

    pub fn push(&mut self, u: usize, v: usize) {
        self.pairs.push((u.min(v), u.max(v)));
    }

    pub fn pairs(&self) -> &[(usize, usize)] {
        &self.pairs
    }

    /// Number of vertices, counting repeats.
    pub fn cardinality(&self) -> usize {
        2 * self.pairs.len()
    }

    /// Member ids, sorted and deduplicated.
    pub fn vertices(&self) -> Vec<usize> {
        let mut v: Vec<usize> = self.pairs.iter().flat_map(|&(a, b)| [a, b]).collect();
        v.sort_unstable();
        v.dedup();
        v
    }

    pub fn vertex_set(&self, n: usize) -> Result<VertexSet> {
        VertexSet::from_ids(n, self.pairs.iter().flat_map(|&(a, b)| [a, b]))
    }

    /// Same solution with pairs sorted, for order-insensitive comparison.
    pub fn canonical(&self) -> SemipairedSolution {
        let mut pairs = self.pairs.clone();
        pairs.sort_unstable();
        SemipairedSolution { pairs }
    }
}

impl fmt::Display for SemipairedSolution {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .pairs
            .iter()
            .map(|(u, v)| format!("({u},{v})"))
            .collect();
        f.write_str(&parts.join(" "))
    }
}

/// First violated condition of a candidate solution.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Violation {
    /// A "pair" whose two entries coincide.
    OddStructure {
        vertex: usize,
    },
    VertexRepeated {
        vertex: usize,
    },
    PairTooFar {
        u: usize,
        v: usize,
    },
    NotDominating {
        witness: usize,
    },
}

impl Violation {
    pub fn kind(&self) -> &'static str {
        match self {
            Violation::OddStructure { .. } => "odd-structure",
            Violation::VertexRepeated { .. } => "vertex-repeated",
            Violation::PairTooFar { .. } => "pair-too-far",
            Violation::NotDominating { .. } => "not-dominating",
        }
    }
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Violation::OddStructure { vertex } => write!(f, "odd-structure ({vertex},{vertex})"),
            Violation::VertexRepeated { vertex } => write!(f, "vertex-repeated {vertex}"),
            Violation::PairTooFar { u, v } => write!(f, "pair-too-far ({u},{v})"),
            Violation::NotDominating { witness } => write!(f, "not-dominating {witness}"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Verdict {
    Valid,
    Invalid(Violation),
}

impl Verdict {
    pub fn is_valid(&self) -> bool {
        matches!(self, Verdict::Valid)
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Verdict::Valid => f.write_str("valid"),
            Verdict::Invalid(v) => write!(f, "invalid: {v}"),
        }
    }
}

/// Checks parity, repetition, pair distance and domination, in that order,
/// and reports the first failure.
pub fn verify_solution(g: &Graph, sol: &SemipairedSolution) -> Result<Verdict> {
    for &(u, v) in sol.pairs() {
        g.check_vertex(u)?;
        g.check_vertex(v)?;
    }
    if let Some(&(u, _)) = sol.pairs().iter().find(|(u, v)| u == v) {
        return Ok(Verdict::Invalid(Violation::OddStructure { vertex: u }));
    }
    let mut seen = VertexSet::new(g.n());
    for &(u, v) in sol.pairs() {
        for x in [u, v] {
            if !seen.insert(x) {
                return Ok(Verdict::Invalid(Violation::VertexRepeated { vertex: x }));
            }
        }
    }
    if let Some(&(u, v)) = sol.pairs().iter().find(|&&(u, v)| !g.within_two(u, v)) {
        return Ok(Verdict::Invalid(Violation::PairTooFar { u, v }));
    }
    match g.first_undominated(&seen) {
        Some(witness) => Ok(Verdict::Invalid(Violation::NotDominating { witness })),
        None => Ok(Verdict::Valid),
    }
}

/// Partitions `s` into pairs at distance at most two, if possible.
///
/// Backtracking: the lowest unpaired vertex is matched first, trying partners
/// in increasing id. Exponential in the worst case, which is fine for the
/// solution sizes this crate deals with. Domination is not checked.
pub fn find_pairing(g: &Graph, s: &VertexSet) -> Option<SemipairedSolution> {
    let members = s.to_vec();
    if members.len() % 2 == 1 {
        return None;
    }
    let k = members.len();
    let close: Vec<Vec<usize>> = (0..k)
        .map(|i| {
            (0..k)
                .filter(|&j| j != i && g.within_two(members[i], members[j]))
                .collect()
        })
        .collect();
    let mut partner = vec![usize::MAX; k];
    if !pair_from(&close, &mut partner, 0) {
        return None;
    }
    let pairs = (0..k)
        .filter(|&i| partner[i] > i)
        .map(|i| (members[i], members[partner[i]]));
    Some(SemipairedSolution::new(pairs))
}

fn pair_from(close: &[Vec<usize>], partner: &mut [usize], start: usize) -> bool {
    let Some(i) = (start..partner.len()).find(|&i| partner[i] == usize::MAX) else {
        return true;
    };
    for &j in &close[i] {
        if j > i && partner[j] == usize::MAX {
            partner[i] = j;
            partner[j] = i;
            if pair_from(close, partner, i + 1) {
                return true;
            }
            partner[i] = usize::MAX;
            partner[j] = usize::MAX;
        }
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn verify_examples() {
        let p5 = Graph::path(5);
        let sol = SemipairedSolution::new([(2, 4)]);
        assert_eq!(verify_solution(&p5, &sol).unwrap(), Verdict::Valid);

        let p4 = Graph::path(4);
        assert_eq!(
            verify_solution(&p4, &SemipairedSolution::new([(1, 4)])).unwrap(),
            Verdict::Invalid(Violation::PairTooFar { u: 1, v: 4 })
        );

        let c4 = Graph::cycle(4);
        assert!(verify_solution(&c4, &SemipairedSolution::new([(1, 2)]))
            .unwrap()
            .is_valid());
    }

    #[test]
    fn verify_reports_in_fixed_order() {
        let p6 = Graph::path(6);
        // Repetition is reported before the distance problem of (1,6).
        let sol = SemipairedSolution::new([(1, 6), (6, 4)]);
        assert_eq!(
            verify_solution(&p6, &sol).unwrap(),
            Verdict::Invalid(Violation::VertexRepeated { vertex: 6 })
        );
        let sol = SemipairedSolution::new([(3, 3)]);
        assert_eq!(
            verify_solution(&p6, &sol).unwrap(),
            Verdict::Invalid(Violation::OddStructure { vertex: 3 })
        );
        let sol = SemipairedSolution::new([(1, 2)]);
        assert_eq!(
            verify_solution(&p6, &sol).unwrap(),
            Verdict::Invalid(Violation::NotDominating { witness: 4 })
        );
        assert!(verify_solution(&p6, &SemipairedSolution::new([(1, 9)])).is_err());
    }

    #[test]
    fn pairing_examples() {
        let p5 = Graph::path(5);
        let s = VertexSet::from_ids(5, [2, 4]).unwrap();
        assert_eq!(
            find_pairing(&p5, &s),
            Some(SemipairedSolution::new([(2, 4)]))
        );

        let p4 = Graph::path(4);
        assert_eq!(
            find_pairing(&p4, &VertexSet::from_ids(4, [1, 4]).unwrap()),
            None
        );
        assert_eq!(
            find_pairing(&p5, &VertexSet::from_ids(5, [1, 2, 3]).unwrap()),
            None
        );
    }

    #[test]
    fn pairing_backtracks() {
        let p6 = Graph::path(6);
        let s = VertexSet::from_ids(6, [1, 2, 4, 6]).unwrap();
        assert_eq!(
            find_pairing(&p6, &s),
            Some(SemipairedSolution::new([(1, 2), (4, 6)]))
        );
        let s = VertexSet::from_ids(6, [1, 3, 4, 5]).unwrap();
        assert_eq!(
            find_pairing(&p6, &s),
            Some(SemipairedSolution::new([(1, 3), (4, 5)]))
        );
        // Star plus pendant: 1-2 and 1-3 both strand a pair at distance 3.
        let g = Graph::new(5, &[(1, 2), (1, 3), (1, 4), (4, 5)]).unwrap();
        let s = VertexSet::from_ids(5, [1, 2, 3, 5]).unwrap();
        assert_eq!(
            find_pairing(&g, &s),
            Some(SemipairedSolution::new([(1, 5), (2, 3)]))
        );
    }
}
