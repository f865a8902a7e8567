//! Traps: vertices whose closed neighbourhood is covered by the closed
//! neighbourhoods of two other vertices.
//!
//! [`find_connected_trap`] is constructive. On a connected `2K2`-free graph it
//! either recognises `K1`, `K2` or `C5` or produces a trap whose two
//! dominators are adjacent, by induction on `G - N[u]` with `u` always the
//! least vertex of the current graph.

use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::forbidden::is_2k2_free;
use crate::graph::{Graph, SmallClass};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TrapError {
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    OutOfRange { vertex: usize, n: usize },
    #[error("trap candidates must be distinct and different from the trapped vertex")]
    NotDistinct,
    #[error("input graph must be connected")]
    Disconnected,
    #[error("input graph contains an induced 2K2")]
    Not2K2Free,
    #[error("G - N[{0}] is not a 5-cycle")]
    NotFiveCycleRemainder(usize),
    #[error("internal invariant violated: {0}")]
    Invariant(String),
}

/// A vertex `u` together with two other vertices whose closed
/// neighbourhoods cover `N[u]`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct TrapWitness {
    pub u: usize,
    /// Sorted, distinct.
    pub pair: (usize, usize),
    /// Exactly one of the pair is adjacent to `u`.
    pub type_one: bool,
    /// Both of the pair are adjacent to `u`.
    pub type_two: bool,
    /// The pair is adjacent.
    pub connected: bool,
}

impl fmt::Display for TrapWitness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let ty = match (self.type_one, self.type_two) {
            (true, _) => "I",
            (_, true) => "II",
            _ => "-",
        };
        write!(
            f,
            "{} trapped by {{{},{}}} type-{ty}{}",
            self.u,
            self.pair.0,
            self.pair.1,
            if self.connected { " connected" } else { "" }
        )
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "outcome", rename_all = "SCREAMING_SNAKE_CASE")]
pub enum TrapSearchResult {
    IsK1,
    IsK2,
    IsC5,
    Witness(TrapWitness),
}

impl TrapSearchResult {
    pub fn witness(&self) -> Option<&TrapWitness> {
        match self {
            TrapSearchResult::Witness(w) => Some(w),
            _ => None,
        }
    }
}

fn check_vertex(g: &Graph, v: usize) -> Result<(), TrapError> {
    if v >= g.n() {
        Err(TrapError::OutOfRange { vertex: v, n: g.n() })
    } else {
        Ok(())
    }
}

/// `Some` iff `N[u] ⊆ N[x1] ∪ N[x2]`, with the classification flags filled in.
pub fn is_trap_by(g: &Graph, u: usize, x1: usize, x2: usize) -> Result<Option<TrapWitness>, TrapError> {
    for v in [u, x1, x2] {
        check_vertex(g, v)?;
    }
    if x1 == u || x2 == u || x1 == x2 {
        return Err(TrapError::NotDistinct);
    }
    Ok(trap_unchecked(g, u, x1, x2))
}

fn trap_unchecked(g: &Graph, u: usize, x1: usize, x2: usize) -> Option<TrapWitness> {
    // Word-wise N(u) ⊆ N[x1] ∪ N[x2], then u ∈ N[x1] ∪ N[x2].
    let bit = |x: usize, w: usize| if x / 64 == w { 1u64 << (x % 64) } else { 0 };
    let covered = (0..g.row(u).len()).all(|w| {
        let cover = g.row(x1)[w] | g.row(x2)[w] | bit(x1, w) | bit(x2, w);
        g.row(u)[w] & !cover == 0
    }) && (g.has_edge(u, x1) || g.has_edge(u, x2));
    if !covered {
        return None;
    }
    let adjacent = g.has_edge(u, x1) as u8 + g.has_edge(u, x2) as u8;
    Some(TrapWitness {
        u,
        pair: (x1.min(x2), x1.max(x2)),
        type_one: adjacent == 1,
        type_two: adjacent == 2,
        connected: g.has_edge(x1, x2),
    })
}

/// Every trap triple, ascending by `(u, x1, x2)` with `x1 < x2`.
pub fn enumerate_traps(g: &Graph) -> Vec<TrapWitness> {
    let n = g.n();
    let mut out = Vec::new();
    for u in 0..n {
        for x1 in (0..n).filter(|&x| x != u) {
            for x2 in (x1 + 1..n).filter(|&x| x != u) {
                if let Some(w) = trap_unchecked(g, u, x1, x2) {
                    out.push(w);
                }
            }
        }
    }
    out
}

fn require_connected_2k2_free(g: &Graph) -> Result<(), TrapError> {
    if !g.is_connected() {
        return Err(TrapError::Disconnected);
    }
    if !is_2k2_free(g) {
        return Err(TrapError::Not2K2Free);
    }
    Ok(())
}

fn validated(g: &Graph, u: usize, x1: usize, x2: usize, branch: &str) -> Result<TrapWitness, TrapError> {
    match trap_unchecked(g, u, x1, x2) {
        Some(w) if w.connected && x1 != x2 && u != x1 && u != x2 => Ok(w),
        _ => Err(TrapError::Invariant(format!("{branch}: ({u}; {{{x1},{x2}}}) is not a connected trap"))),
    }
}

/// Cycle order `a_1..a_5` of a 5-cycle given as a vertex set: start at the
/// least vertex, step to its smaller cycle neighbour, continue around.
fn cycle_order(g: &Graph, verts: &[usize]) -> Vec<usize> {
    let on_cycle = |x: usize| verts.contains(&x);
    let mut order = vec![verts[0]];
    let mut prev = usize::MAX;
    let mut cur = verts[0];
    while order.len() < verts.len() {
        let next = g.neighbors(cur).find(|&x| on_cycle(x) && x != prev && !order.contains(&x)).unwrap();
        prev = cur;
        cur = next;
        order.push(cur);
    }
    order
}

/// Connected trap for a connected `2K2`-free `g` where `G - N[u]` is a
/// 5-cycle `a_1..a_5`. Branches are tried in order:
///
/// 1. some `v ∈ N(u)` sees three consecutive `a_{i-1}, a_i, a_{i+1}`:
///    `a_i` is trapped by `{u, v}`;
/// 2. two vertices of `N(u)` see the same cycle vertices: the first is
///    trapped by the second and `u`;
/// 3. otherwise the least `b ∈ N(u)` sees exactly `a_i, a_{i+2}, a_{i+3}`,
///    and `u` is trapped by `{b, a_i}`.
pub fn five_cycle_trap_witness(g: &Graph, u: usize) -> Result<TrapWitness, TrapError> {
    check_vertex(g, u)?;
    require_connected_2k2_free(g)?;
    let (h, map) = g.delete_closed_neighborhood(u);
    if h.classify_small() != SmallClass::C5 {
        return Err(TrapError::NotFiveCycleRemainder(u));
    }
    let a = cycle_order(g, &map);
    let nu: Vec<usize> = g.neighbors(u).collect();
    let sees = |v: usize| -> [bool; 5] { std::array::from_fn(|i| g.has_edge(v, a[i])) };

    for &v in &nu {
        let s = sees(v);
        if let Some(i) = (0..5).find(|&i| s[(i + 4) % 5] && s[i] && s[(i + 1) % 5]) {
            return validated(g, a[i], u, v, "three consecutive cycle neighbours");
        }
    }

    let patterns: Vec<[bool; 5]> = nu.iter().map(|&v| sees(v)).collect();
    for i in 0..nu.len() {
        for j in i + 1..nu.len() {
            if patterns[i] == patterns[j] {
                return validated(g, nu[i], nu[j], u, "equal cycle neighbourhoods");
            }
        }
    }

    let b = *nu.first().ok_or_else(|| TrapError::Invariant("N(u) is empty".into()))?;
    let s = sees(b);
    let i = (0..5)
        .find(|&i| s[i] && !s[(i + 1) % 5] && s[(i + 2) % 5] && s[(i + 3) % 5] && !s[(i + 4) % 5])
        .ok_or_else(|| TrapError::Invariant(format!("vertex {b} has no a_i, a_i+2, a_i+3 pattern")))?;
    validated(g, u, b, a[i], "distinct cycle neighbourhoods")
}

/// Classifies a connected `2K2`-free graph as `K1`, `K2`, `C5`, or returns a
/// validated connected trap.
pub fn find_connected_trap(g: &Graph) -> Result<TrapSearchResult, TrapError> {
    require_connected_2k2_free(g)?;
    match g.classify_small() {
        SmallClass::K1 => return Ok(TrapSearchResult::IsK1),
        SmallClass::K2 => return Ok(TrapSearchResult::IsK2),
        SmallClass::C5 => return Ok(TrapSearchResult::IsC5),
        _ => {}
    }
    search(g)
}

fn search(g: &Graph) -> Result<TrapSearchResult, TrapError> {
    let n = g.n();
    if n == 1 {
        return Ok(TrapSearchResult::IsK1);
    }
    if n == 2 {
        return Ok(TrapSearchResult::IsK2);
    }
    let u = 0;
    let (h, map) = g.delete_closed_neighborhood(u);

    if h.is_empty() {
        let mut nb = g.neighbors(u);
        let (x1, x2) = (nb.next().unwrap(), nb.next().unwrap());
        return validated(g, x1, u, x2, "u dominates G").map(TrapSearchResult::Witness);
    }

    let comps = h.components();
    if let Some(single) = comps.iter().find(|c| c.len() == 1) {
        let y = map[single[0]];
        let t = g.neighbors(y).next().ok_or_else(|| TrapError::Invariant(format!("vertex {y} is isolated in G")))?;
        return validated(g, y, u, t, "isolated vertex in G - N[u]").map(TrapSearchResult::Witness);
    }
    if comps.len() > 1 {
        return Err(TrapError::Invariant("G - N[u] has two components with edges".into()));
    }

    if h.n() == 2 {
        return single_edge_case(g, u, map[0], map[1]);
    }

    if h.classify_small() == SmallClass::C5 {
        return five_cycle_trap_witness(g, u).map(TrapSearchResult::Witness);
    }

    match search(&h)? {
        TrapSearchResult::Witness(w) => {
            let lifted = validated(g, map[w.u], map[w.pair.0], map[w.pair.1], "lifted from G - N[u]")?;
            Ok(TrapSearchResult::Witness(lifted))
        }
        other => Err(TrapError::Invariant(format!("G - N[u] on {} vertices classified as {other:?}", h.n()))),
    }
}

/// `G - N[u]` is the single edge `x1 x2`.
fn single_edge_case(g: &Graph, u: usize, x1: usize, x2: usize) -> Result<TrapSearchResult, TrapError> {
    let nu: Vec<usize> = g.neighbors(u).collect();
    if let Some(&t) = nu.iter().find(|&&t| g.has_edge(t, x1) && g.has_edge(t, x2)) {
        return validated(g, x1, t, u, "common neighbour of the edge").map(TrapSearchResult::Witness);
    }
    let mut side_a: Vec<usize> = nu.iter().copied().filter(|&t| g.has_edge(t, x1)).collect();
    let mut side_b: Vec<usize> = nu.iter().copied().filter(|&t| g.has_edge(t, x2)).collect();
    let mut x1 = x1;
    if side_a.len() < side_b.len() {
        std::mem::swap(&mut side_a, &mut side_b);
        x1 = x2;
    }
    if side_a.len() + side_b.len() != nu.len() {
        return Err(TrapError::Invariant("a neighbour of u sees neither end of the edge".into()));
    }
    let witness = match (side_a.len(), side_b.len()) {
        // G is the path u - a - x1 - x2; its endpoint u is trapped by a and x1.
        (1, 0) => validated(g, u, side_a[0], x1, "path on four vertices")?,
        (1, 1) => {
            let (a, b) = (side_a[0], side_b[0]);
            if !g.has_edge(a, b) {
                return Ok(TrapSearchResult::IsC5);
            }
            validated(g, u, a, b, "u between adjacent sides")?
        }
        _ => validated(g, side_a[0], side_a[1], u, "two neighbours of x1")?,
    };
    Ok(TrapSearchResult::Witness(witness))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn star() -> Graph {
        Graph::from_edge_list(4, &[(0, 1), (0, 2), (0, 3)]).unwrap()
    }

    /// u = 0, hub v = 1, a_i = i + 1 for i = 1..=5.
    fn wheel_with_pendant() -> Graph {
        let mut edges = vec![(0, 1)];
        for i in 0..5 {
            edges.push((1, 2 + i));
            edges.push((2 + i, 2 + (i + 1) % 5));
        }
        Graph::from_edge_list(7, &edges).unwrap()
    }

    #[test]
    fn trap_membership() {
        let w = is_trap_by(&star(), 1, 0, 2).unwrap().unwrap();
        assert_eq!(w, TrapWitness { u: 1, pair: (0, 2), type_one: true, type_two: false, connected: true });

        let w = is_trap_by(&wheel_with_pendant(), 2, 1, 0).unwrap().unwrap();
        assert!(w.type_one && w.connected && !w.type_two);

        let c5 = Graph::cycle(5);
        let w = is_trap_by(&c5, 0, 1, 4).unwrap().unwrap();
        assert!(w.type_two && !w.type_one && !w.connected);
        assert_eq!(is_trap_by(&c5, 0, 2, 3).unwrap(), None);

        assert_eq!(is_trap_by(&c5, 0, 0, 1), Err(TrapError::NotDistinct));
        assert_eq!(is_trap_by(&c5, 0, 1, 1), Err(TrapError::NotDistinct));
        assert_eq!(is_trap_by(&c5, 0, 1, 9), Err(TrapError::OutOfRange { vertex: 9, n: 5 }));
    }

    #[test]
    fn enumeration() {
        assert!(enumerate_traps(&Graph::petersen()).is_empty());

        let c5 = enumerate_traps(&Graph::cycle(5));
        assert!(c5.iter().any(|w| w.u == 0 && w.pair == (1, 4)));
        // per vertex: its two neighbours (type-II), or one neighbour plus the
        // far end of the opposite edge (type-I)
        assert_eq!(c5.len(), 15);
        assert_eq!(c5.iter().filter(|w| w.type_two).count(), 5);
        assert!(c5.iter().all(|w| w.type_one != w.type_two));

        let k3 = enumerate_traps(&Graph::complete(3));
        assert_eq!(k3.len(), 3);
        assert!(k3.iter().all(|w| w.connected && w.type_two));

        let all = enumerate_traps(&wheel_with_pendant());
        let keys: Vec<_> = all.iter().map(|w| (w.u, w.pair)).collect();
        let mut sorted = keys.clone();
        sorted.sort();
        assert_eq!(keys, sorted);
    }

    #[test]
    fn corner_extends_to_trap() {
        // N[leaf] ⊆ N[center]: any z adjacent to the center completes a trap.
        let s = star();
        for z in [2, 3] {
            assert!(is_trap_by(&s, 1, 0, z).unwrap().is_some());
        }
        let k5 = Graph::complete(5);
        for z in 2..5 {
            assert!(is_trap_by(&k5, 0, 1, z).unwrap().unwrap().connected);
        }
    }

    #[test]
    fn five_cycle_branch_three_consecutive() {
        let w = five_cycle_trap_witness(&wheel_with_pendant(), 0).unwrap();
        assert_eq!((w.u, w.pair), (2, (0, 1)));
        assert!(w.connected);

        // duplicate hub 7, also adjacent to the pendant
        let mut edges = wheel_with_pendant().edges();
        edges.push((0, 7));
        edges.push((1, 7));
        edges.extend((2..7).map(|a| (a, 7)));
        let g = Graph::from_edge_list(8, &edges).unwrap();
        assert!(is_2k2_free(&g));
        let w = five_cycle_trap_witness(&g, 0).unwrap();
        assert_eq!((w.u, w.pair), (2, (0, 1)));
    }

    #[test]
    fn five_cycle_branch_distinct_patterns() {
        // C5 on 0..5, b = 5 sees a_0, a_2, a_3, u = 6 hangs on b.
        let mut edges: Vec<_> = (0..5).map(|i| (i, (i + 1) % 5)).collect();
        edges.extend([(5, 0), (5, 2), (5, 3), (6, 5)]);
        let g = Graph::from_edge_list(7, &edges).unwrap();
        assert!(is_2k2_free(&g));
        let w = five_cycle_trap_witness(&g, 6).unwrap();
        assert_eq!((w.u, w.pair), (6, (0, 5)));
        assert!(w.connected && w.type_one);
    }

    #[test]
    fn five_cycle_branch_equal_patterns() {
        // two b-vertices 5, 6 with identical cycle neighbourhoods {0,2,3},
        // both adjacent to u = 7 and to each other.
        let mut edges: Vec<_> = (0..5).map(|i| (i, (i + 1) % 5)).collect();
        for b in [5, 6] {
            edges.extend([(b, 0), (b, 2), (b, 3), (b, 7)]);
        }
        edges.push((5, 6));
        let g = Graph::from_edge_list(8, &edges).unwrap();
        assert!(is_2k2_free(&g));
        let w = five_cycle_trap_witness(&g, 7).unwrap();
        assert_eq!((w.u, w.pair), (5, (6, 7)));
    }

    #[test]
    fn five_cycle_preconditions() {
        assert_eq!(five_cycle_trap_witness(&Graph::path(5), 0), Err(TrapError::Not2K2Free));
        assert_eq!(five_cycle_trap_witness(&Graph::complete(4), 0), Err(TrapError::NotFiveCycleRemainder(0)));
        let disconnected = Graph::from_edge_list(3, &[(0, 1)]).unwrap();
        assert_eq!(five_cycle_trap_witness(&disconnected, 0), Err(TrapError::Disconnected));
    }

    #[test]
    fn trichotomy_small_cases() {
        assert_eq!(find_connected_trap(&Graph::cycle(5)).unwrap(), TrapSearchResult::IsC5);
        assert_eq!(find_connected_trap(&Graph::complete(2)).unwrap(), TrapSearchResult::IsK2);
        assert_eq!(find_connected_trap(&Graph::empty(1)).unwrap(), TrapSearchResult::IsK1);

        let w = *find_connected_trap(&Graph::path(4)).unwrap().witness().unwrap();
        assert_eq!((w.u, w.pair), (0, (1, 2)));
        assert!(w.connected);

        let w = *find_connected_trap(&wheel_with_pendant()).unwrap().witness().unwrap();
        assert!(w.connected);
        assert!(is_trap_by(&wheel_with_pendant(), w.u, w.pair.0, w.pair.1).unwrap().is_some());

        assert_eq!(find_connected_trap(&Graph::path(5)), Err(TrapError::Not2K2Free));
        assert_eq!(find_connected_trap(&Graph::empty(2)), Err(TrapError::Disconnected));
    }
}
