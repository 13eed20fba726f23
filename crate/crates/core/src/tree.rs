//! Linear-time sweep for trees.
//!
//! Vertices are visited in reverse BFS order from a pendant vertex, so every
//! vertex is handled before its parent. Two label arrays drive the sweep:
//! `L[v]` is 0 (not selected), 1 (selected, waiting for a partner) or 2
//! (selected and paired), and `M[v] = k` records that `v_k` still needs a
//! partner from `N[v]`.

use std::collections::VecDeque;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::verify::SemipairedSolution;

/// `alpha[i - 1]` is the graph id of `v_i`; `parent[i]` is the position of
/// `p(v_i)` (the root `v_n` is its own parent).
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RootedTreeOrder {
    pub alpha: Vec<usize>,
    pub parent: Vec<usize>,
}

impl RootedTreeOrder {
    pub fn len(&self) -> usize {
        self.alpha.len()
    }

    pub fn is_empty(&self) -> bool {
        self.alpha.is_empty()
    }

    /// The BFS order itself, starting at the pendant root.
    pub fn beta(&self) -> Vec<usize> {
        self.alpha.iter().rev().copied().collect()
    }

    pub fn vertex(&self, i: usize) -> usize {
        self.alpha[i - 1]
    }

    pub fn parent_of(&self, i: usize) -> usize {
        self.parent[i]
    }
}

pub fn bfs_order_from_pendant(t: &Graph) -> Result<RootedTreeOrder> {
    if !t.is_tree() {
        return Err(Error::NotATree);
    }
    if t.n() < 2 {
        return Err(Error::TooFewVertices(t.n()));
    }
    let n = t.n();
    let root = t
        .vertices()
        .find(|&v| t.degree(v) == 1)
        .ok_or(Error::NotATree)?;
    let mut beta = Vec::with_capacity(n);
    let mut parent_id = vec![0; n + 1];
    let mut seen = vec![false; n + 1];
    let mut queue = VecDeque::from([root]);
    seen[root] = true;
    parent_id[root] = root;
    while let Some(u) = queue.pop_front() {
        beta.push(u);
        for &w in t.neighbors(u) {
            if !seen[w] {
                seen[w] = true;
                parent_id[w] = u;
                queue.push_back(w);
            }
        }
    }
    let alpha: Vec<usize> = beta.into_iter().rev().collect();
    let mut pos = vec![0; n + 1];
    for (i, &v) in alpha.iter().enumerate() {
        pos[v] = i + 1;
    }
    let mut parent = vec![0; n + 1];
    for i in 1..=n {
        parent[i] = pos[parent_id[alpha[i - 1]]];
    }
    Ok(RootedTreeOrder { alpha, parent })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum TreeCase {
    /// Select `p(v_i)` unpaired and leave an obligation on its parent.
    SelectParent,
    /// Select `p(v_i)` as the partner of a waiting vertex.
    PairParent {
        waiting: usize,
    },
    /// Select `v_{n-1}` and `v_n` together.
    LastTwo,
    Dominated,
    /// Discharge `M[v_i]` by selecting `p(v_i)`.
    DischargeParent {
        waiting: usize,
    },
    /// `L[p(v_i)] = 1`, declared impossible; nothing is done.
    Unreachable {
        waiting: usize,
    },
    /// Discharge `M[v_i]` by selecting `v_i` itself.
    DischargeSelf {
        waiting: usize,
    },
    /// As above when `v_i` is already selected: the partner is the least
    /// unselected vertex of `N[v_i]`, or of `N[v_k]` if that is empty.
    DischargeNearby {
        waiting: usize,
        partner: usize,
    },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TreeStep {
    /// Position in `alpha`.
    pub i: usize,
    pub case: TreeCase,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TreeRun {
    pub order: RootedTreeOrder,
    pub solution: SemipairedSolution,
    pub trace: Vec<TreeStep>,
}

impl TreeRun {
    /// Number of times the case with `L[p(v_i)] = 1` was reached.
    pub fn unreachable_hits(&self) -> usize {
        self.trace
            .iter()
            .filter(|s| matches!(s.case, TreeCase::Unreachable { .. }))
            .count()
    }
}

struct Sweep<'a> {
    t: &'a Graph,
    order: &'a RootedTreeOrder,
    pos: Vec<usize>,
    l: Vec<u8>,
    m: Vec<usize>,
    dominated: Vec<bool>,
    pairs: Vec<(usize, usize)>,
}

impl Sweep<'_> {
    fn select(&mut self, i: usize) {
        debug_assert_eq!(self.l[i], 0, "v_{i} selected twice");
        let v = self.order.vertex(i);
        self.dominated[i] = true;
        for &w in self.t.neighbors(v) {
            self.dominated[self.pos[w]] = true;
        }
    }

    fn pair(&mut self, a: usize, b: usize) {
        self.l[a] = 2;
        self.l[b] = 2;
        self.pairs
            .push((self.order.vertex(a), self.order.vertex(b)));
    }

    /// Closed neighborhood of `v_i`, as positions.
    fn closed(&self, i: usize) -> Vec<usize> {
        let v = self.order.vertex(i);
        let mut out: Vec<usize> = self.t.neighbors(v).iter().map(|&w| self.pos[w]).collect();
        out.push(i);
        out
    }
}

pub fn semi_paired_dom_tree(t: &Graph) -> Result<SemipairedSolution> {
    Ok(semi_paired_dom_tree_run(t)?.solution)
}

pub fn semi_paired_dom_tree_run(t: &Graph) -> Result<TreeRun> {
    let order = bfs_order_from_pendant(t)?;
    let n = t.n();
    let mut pos = vec![0; n + 1];
    for (i, &v) in order.alpha.iter().enumerate() {
        pos[v] = i + 1;
    }
    let mut s = Sweep {
        t,
        order: &order,
        pos,
        l: vec![0; n + 1],
        m: vec![0; n + 1],
        dominated: vec![false; n + 1],
        pairs: Vec::new(),
    };
    let mut trace = Vec::with_capacity(n);

    for i in 1..=n {
        let p = order.parent_of(i);
        let case = if !s.dominated[i] {
            if i >= n - 1 {
                s.select(n - 1);
                s.select(n);
                s.pair(n - 1, n);
                TreeCase::LastTwo
            } else {
                let waiting = s.closed(p).into_iter().filter(|&r| s.m[r] != 0).min();
                match waiting {
                    None => {
                        s.select(p);
                        s.l[p] = 1;
                        s.m[order.parent_of(p)] = p;
                        TreeCase::SelectParent
                    }
                    Some(k) => {
                        let w = std::mem::take(&mut s.m[k]);
                        s.select(p);
                        s.pair(p, w);
                        TreeCase::PairParent { waiting: w }
                    }
                }
            }
        } else if s.m[i] == 0 {
            TreeCase::Dominated
        } else {
            let k = s.m[i];
            match s.l[p] {
                0 => {
                    s.m[i] = 0;
                    s.select(p);
                    s.pair(p, k);
                    TreeCase::DischargeParent { waiting: k }
                }
                1 => {
                    debug_assert!(false, "L[p(v_{i})] = 1 reached in case 4");
                    TreeCase::Unreachable { waiting: k }
                }
                _ if s.l[i] == 0 => {
                    s.m[i] = 0;
                    s.select(i);
                    s.pair(i, k);
                    TreeCase::DischargeSelf { waiting: k }
                }
                _ => {
                    // v_i entered D earlier through case 4 at one of its
                    // children. Every subtree below is finished, so any
                    // unselected vertex within reach of v_k serves equally.
                    s.m[i] = 0;
                    let partner = [i, k]
                        .into_iter()
                        .find_map(|c| s.closed(c).into_iter().filter(|&x| s.l[x] == 0).min())
                        .expect("the child that forced v_k into D stays unselected");
                    s.select(partner);
                    s.pair(partner, k);
                    TreeCase::DischargeNearby {
                        waiting: k,
                        partner,
                    }
                }
            }
        };
        trace.push(TreeStep { i, case });
    }

    if let Some(i) = (1..=n).find(|&i| s.l[i] == 1) {
        return Err(Error::InvalidSolution(format!(
            "vertex {} left without a partner",
            order.vertex(i)
        )));
    }
    let solution = SemipairedSolution::new(s.pairs);
    Ok(TreeRun {
        order,
        solution,
        trace,
    })
}
