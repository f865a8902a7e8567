//! Induced `2K2`, `rK2` (induced matchings) and `P_t` detection, plus the
//! edge/non-neighbour reformulation of `2K2`-freeness.
//!
//! All searches expand vertices in ascending id order and return the first
//! witness they meet, which is the lexicographically least one.

use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::Graph;

/// Longest induced path the search accepts.
pub const MAX_PATH_LEN: usize = 31;
/// Default node budget for [`find_induced_path`].
pub const DEFAULT_PATH_BUDGET: u64 = 50_000_000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ForbiddenError {
    #[error("induced matching size must be at least 1")]
    ZeroMatching,
    #[error("induced path length {0} outside 2..={MAX_PATH_LEN}")]
    PathLength(usize),
    #[error("induced path search exceeded its budget of {0} nodes")]
    Budget(u64),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum WitnessKind {
    TwoK2,
    RK2,
    PT,
}

/// Vertices realising an induced copy of `2K2`, `rK2` or `P_t`.
///
/// Matchings list their edges pairwise, `[a1, b1, a2, b2, ...]`; paths list
/// vertices in path order.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct InducedWitness {
    pub kind: WitnessKind,
    pub vertices: Vec<usize>,
    pub param: usize,
}

impl InducedWitness {
    /// Checks that the listed vertices induce exactly the claimed pattern.
    pub fn validate(&self, g: &Graph) -> bool {
        let vs = &self.vertices;
        let mut sorted = vs.clone();
        sorted.sort_unstable();
        sorted.dedup();
        if sorted.len() != vs.len() || vs.iter().any(|&v| v >= g.n()) {
            return false;
        }
        let expected = |i: usize, j: usize| -> bool {
            match self.kind {
                WitnessKind::TwoK2 | WitnessKind::RK2 => i / 2 == j / 2,
                WitnessKind::PT => i.abs_diff(j) == 1,
            }
        };
        let size_ok = match self.kind {
            WitnessKind::TwoK2 => self.param == 2 && vs.len() == 4,
            WitnessKind::RK2 => vs.len() == 2 * self.param,
            WitnessKind::PT => vs.len() == self.param,
        };
        size_ok && (0..vs.len()).all(|i| (i + 1..vs.len()).all(|j| g.has_edge(vs[i], vs[j]) == expected(i, j)))
    }
}

impl fmt::Display for InducedWitness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self.kind {
            WitnessKind::TwoK2 => "2K2".to_string(),
            WitnessKind::RK2 => format!("{}K2", self.param),
            WitnessKind::PT => format!("P{}", self.param),
        };
        write!(f, "{name}{:?}", self.vertices)
    }
}

/// `ab` and `cd` are disjoint edges with no edge between them.
#[inline]
fn independent_edges(g: &Graph, (a, b): (usize, usize), (c, d): (usize, usize)) -> bool {
    !(g.dominates(a, c) || g.dominates(a, d) || g.dominates(b, c) || g.dominates(b, d))
}

/// Least induced `2K2` as `[a, b, c, d]` with edges `ab`, `cd`, `a < b`,
/// `c < d`, `a < c`.
pub fn find_induced_2k2(g: &Graph) -> Option<InducedWitness> {
    let edges = g.edges();
    for (i, &e) in edges.iter().enumerate() {
        for &f in &edges[i + 1..] {
            if independent_edges(g, e, f) {
                return Some(InducedWitness { kind: WitnessKind::TwoK2, vertices: vec![e.0, e.1, f.0, f.1], param: 2 });
            }
        }
    }
    None
}

pub fn is_2k2_free(g: &Graph) -> bool {
    find_induced_2k2(g).is_none()
}

/// Least induced matching of size `r`, edges chosen in lexicographic order.
pub fn find_induced_rk2(g: &Graph, r: usize) -> Result<Option<InducedWitness>, ForbiddenError> {
    if r == 0 {
        return Err(ForbiddenError::ZeroMatching);
    }
    fn extend(g: &Graph, edges: &[(usize, usize)], from: usize, r: usize, chosen: &mut Vec<(usize, usize)>) -> bool {
        if chosen.len() == r {
            return true;
        }
        for i in from..edges.len() {
            if edges.len() - i < r - chosen.len() {
                break;
            }
            let e = edges[i];
            if chosen.iter().all(|&c| independent_edges(g, c, e)) {
                chosen.push(e);
                if extend(g, edges, i + 1, r, chosen) {
                    return true;
                }
                chosen.pop();
            }
        }
        false
    }
    let edges = g.edges();
    let mut chosen = Vec::with_capacity(r);
    Ok(extend(g, &edges, 0, r, &mut chosen).then(|| InducedWitness {
        kind: WitnessKind::RK2,
        vertices: chosen.iter().flat_map(|&(a, b)| [a, b]).collect(),
        param: r,
    }))
}

pub fn is_rk2_free(g: &Graph, r: usize) -> Result<bool, ForbiddenError> {
    Ok(find_induced_rk2(g, r)?.is_none())
}

pub fn find_induced_path(g: &Graph, t: usize) -> Result<Option<InducedWitness>, ForbiddenError> {
    find_induced_path_with_budget(g, t, DEFAULT_PATH_BUDGET)
}

/// Backtracking over partial induced paths; `budget` caps the number of
/// search nodes visited.
pub fn find_induced_path_with_budget(
    g: &Graph,
    t: usize,
    budget: u64,
) -> Result<Option<InducedWitness>, ForbiddenError> {
    if !(2..=MAX_PATH_LEN).contains(&t) {
        return Err(ForbiddenError::PathLength(t));
    }

    struct Search<'a> {
        g: &'a Graph,
        t: usize,
        path: Vec<usize>,
        on_path: Vec<bool>,
        nodes: u64,
        budget: u64,
    }

    impl Search<'_> {
        fn grow(&mut self) -> Result<bool, ForbiddenError> {
            self.nodes += 1;
            if self.nodes > self.budget {
                return Err(ForbiddenError::Budget(self.budget));
            }
            if self.path.len() == self.t {
                return Ok(true);
            }
            let last = *self.path.last().unwrap();
            let inner = &self.path[..self.path.len() - 1];
            let candidates: Vec<usize> = self
                .g
                .neighbors(last)
                .filter(|&w| !self.on_path[w] && inner.iter().all(|&p| !self.g.has_edge(p, w)))
                .collect();
            for w in candidates {
                self.path.push(w);
                self.on_path[w] = true;
                if self.grow()? {
                    return Ok(true);
                }
                self.on_path[w] = false;
                self.path.pop();
            }
            Ok(false)
        }
    }

    let mut s = Search { g, t, path: Vec::with_capacity(t), on_path: vec![false; g.n()], nodes: 0, budget };
    for v in 0..g.n() {
        s.path.push(v);
        s.on_path[v] = true;
        if s.grow()? {
            return Ok(Some(InducedWitness { kind: WitnessKind::PT, vertices: s.path, param: t }));
        }
        s.on_path[v] = false;
        s.path.pop();
    }
    Ok(None)
}

/// An edge `vw`, a vertex `u` adjacent to neither end, and a neighbour `x` of
/// `u` adjacent to neither end. Together `ux` and `vw` form an induced `2K2`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct CantMoveViolation {
    pub edge: (usize, usize),
    pub u: usize,
    pub x: usize,
}

impl fmt::Display for CantMoveViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "edge {}-{}, u={}, x={}", self.edge.0, self.edge.1, self.u, self.x)
    }
}

/// Least `(edge, u, x)` witnessing that some neighbour of a vertex outside
/// `N[v] ∪ N[w]` escapes both `N(v)` and `N(w)`.
pub fn cantmove_violation(g: &Graph) -> Option<CantMoveViolation> {
    for (v, w) in g.edges() {
        let outside = |z: usize| !g.dominates(v, z) && !g.dominates(w, z);
        for u in (0..g.n()).filter(|&u| outside(u)) {
            if let Some(x) = g.neighbors(u).find(|&x| outside(x)) {
                return Some(CantMoveViolation { edge: (v, w), u, x });
            }
        }
    }
    None
}
