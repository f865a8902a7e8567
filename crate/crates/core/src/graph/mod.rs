//! Simple undirected graphs over dense vertex ids `0..n`, stored as one
//! adjacency bitset row per vertex.
//!
//! Every other module works over [`Graph`]. Values are immutable once built;
//! derived graphs (vertex deletion, induced subgraphs) come back together
//! with the order-preserving map from new ids to the ids of the source graph.

mod edgelist;
mod graph6;

use std::collections::VecDeque;
use std::fmt;

use thiserror::Error;

pub use edgelist::{emit_edge_list, parse_edge_list, EdgeListError};
pub use graph6::{emit_graph6, parse_graph6, parse_graph6_with, Graph6Error, Graph6ErrorKind, Parsed};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("endpoint {vertex} out of range for a graph on {n} vertices")]
    OutOfRange { vertex: usize, n: usize },
    #[error("loop at vertex {0}")]
    Loop(usize),
}

/// Immutable simple undirected graph.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    words: usize,
    rows: Vec<u64>,
}

/// Small isomorphism classes singled out by the trap trichotomy.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, serde::Serialize, serde::Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum SmallClass {
    K1,
    K2,
    C5,
    Path,
    Complete,
    Other,
}

/// Length of the longest shortest path, or `Infinite` for disconnected graphs.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum Diameter {
    Finite(usize),
    Infinite,
}

impl Diameter {
    pub fn finite(self) -> Option<usize> {
        match self {
            Diameter::Finite(d) => Some(d),
            Diameter::Infinite => None,
        }
    }
}

impl fmt::Display for Diameter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Diameter::Finite(d) => write!(f, "{d}"),
            Diameter::Infinite => f.write_str("inf"),
        }
    }
}

#[inline]
fn words_for(n: usize) -> usize {
    n.div_ceil(64)
}

impl Graph {
    /// The edgeless graph on `n` vertices. `n = 0` gives the empty graph.
    pub fn empty(n: usize) -> Self {
        let words = words_for(n);
        Graph { n, words, rows: vec![0; n * words] }
    }

    pub fn from_edge_list(n: usize, edges: &[(usize, usize)]) -> Result<Self, GraphError> {
        let mut g = Graph::empty(n);
        for &(u, v) in edges {
            for w in [u, v] {
                if w >= n {
                    return Err(GraphError::OutOfRange { vertex: w, n });
                }
            }
            if u == v {
                return Err(GraphError::Loop(u));
            }
            g.set_edge(u, v);
        }
        Ok(g)
    }

    /// Builds a graph from a bitmask over vertex pairs, bit `i` standing for
    /// the `i`-th pair in graph6 order `(0,1), (0,2), (1,2), (0,3), ...`.
    ///
    /// Panics if `n > 11` (the pair count would not fit into 64 bits).
    pub fn from_pair_mask(n: usize, mask: u64) -> Self {
        assert!(n <= 11, "pair mask only covers graphs with at most 11 vertices");
        let mut g = Graph::empty(n);
        let mut bit = 0;
        for k in 1..n {
            for j in 0..k {
                if mask >> bit & 1 == 1 {
                    g.set_edge(j, k);
                }
                bit += 1;
            }
        }
        g
    }

    /// Named constructors used throughout tests and examples.
    pub fn path(n: usize) -> Self {
        let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        Graph::from_edge_list(n, &edges).expect("valid path")
    }

    pub fn cycle(n: usize) -> Self {
        assert!(n >= 3);
        let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Graph::from_edge_list(n, &edges).expect("valid cycle")
    }

    pub fn complete(n: usize) -> Self {
        let mut g = Graph::empty(n);
        for v in 1..n {
            for u in 0..v {
                g.set_edge(u, v);
            }
        }
        g
    }

    pub fn petersen() -> Self {
        let mut edges = Vec::with_capacity(15);
        for i in 0..5 {
            edges.push((i, (i + 1) % 5));
            edges.push((i, i + 5));
            edges.push((5 + i, 5 + (i + 2) % 5));
        }
        Graph::from_edge_list(10, &edges).expect("valid Petersen graph")
    }

    pub(crate) fn set_edge(&mut self, u: usize, v: usize) {
        self.rows[u * self.words + v / 64] |= 1 << (v % 64);
        self.rows[v * self.words + u / 64] |= 1 << (u % 64);
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    pub fn edge_count(&self) -> usize {
        let total: u32 = self.rows.iter().map(|w| w.count_ones()).sum();
        total as usize / 2
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.rows[u * self.words + v / 64] >> (v % 64) & 1 == 1
    }

    /// `true` when `v ∈ N[u]`.
    #[inline]
    pub fn dominates(&self, u: usize, v: usize) -> bool {
        u == v || self.has_edge(u, v)
    }

    pub(crate) fn row(&self, u: usize) -> &[u64] {
        &self.rows[u * self.words..(u + 1) * self.words]
    }

    pub fn degree(&self, u: usize) -> usize {
        self.row(u).iter().map(|w| w.count_ones() as usize).sum()
    }

    /// Open neighbourhood `N(u)` in ascending order.
    pub fn neighbors(&self, u: usize) -> Neighbors<'_> {
        Neighbors { row: self.row(u), word: 0, bits: self.row(u).first().copied().unwrap_or(0) }
    }

    /// Closed neighbourhood `N[u]` in ascending order.
    pub fn closed_neighborhood(&self, u: usize) -> Vec<usize> {
        let mut out: Vec<usize> = self.neighbors(u).collect();
        let at = out.partition_point(|&v| v < u);
        out.insert(at, u);
        out
    }

    /// All edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for u in 0..self.n {
            out.extend(self.neighbors(u).filter(|&v| v > u).map(|v| (u, v)));
        }
        out
    }

    /// Least edge in lexicographic order.
    pub fn first_edge(&self) -> Option<(usize, usize)> {
        (0..self.n).find_map(|u| self.neighbors(u).find(|&v| v > u).map(|v| (u, v)))
    }

    /// Subgraph induced by `keep` (any order, no duplicates). Returns the
    /// graph on `0..keep.len()` and the map from new ids to old ids, sorted
    /// ascending so that relabelling preserves order.
    pub fn induced_subgraph(&self, keep: &[usize]) -> (Graph, Vec<usize>) {
        let mut map = keep.to_vec();
        map.sort_unstable();
        map.dedup();
        let mut h = Graph::empty(map.len());
        for (i, &a) in map.iter().enumerate() {
            for (j, &b) in map.iter().enumerate().skip(i + 1) {
                if self.has_edge(a, b) {
                    h.set_edge(i, j);
                }
            }
        }
        (h, map)
    }

    /// `G - S` for an arbitrary vertex set `S`.
    pub fn delete_vertices(&self, remove: &[usize]) -> (Graph, Vec<usize>) {
        let mut gone = vec![false; self.n];
        for &v in remove {
            gone[v] = true;
        }
        let keep: Vec<usize> = (0..self.n).filter(|&v| !gone[v]).collect();
        self.induced_subgraph(&keep)
    }

    pub fn delete_vertex(&self, x: usize) -> (Graph, Vec<usize>) {
        self.delete_vertices(&[x])
    }

    /// `G - N[u]`, possibly the empty graph.
    pub fn delete_closed_neighborhood(&self, u: usize) -> (Graph, Vec<usize>) {
        self.delete_vertices(&self.closed_neighborhood(u))
    }

    /// Connected components, each sorted, ordered by smallest member.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.n];
        let mut out = Vec::new();
        for s in 0..self.n {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            let mut comp = vec![s];
            let mut i = 0;
            while i < comp.len() {
                let u = comp[i];
                i += 1;
                for v in self.neighbors(u) {
                    if !seen[v] {
                        seen[v] = true;
                        comp.push(v);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    /// Connected with at least one vertex.
    pub fn is_connected(&self) -> bool {
        self.n > 0 && self.distances_from(0).iter().all(Option::is_some)
    }

    /// BFS distances from `s`; `None` for unreachable vertices.
    pub fn distances_from(&self, s: usize) -> Vec<Option<usize>> {
        let mut dist = vec![None; self.n];
        dist[s] = Some(0);
        let mut queue = VecDeque::from([s]);
        while let Some(u) = queue.pop_front() {
            let d = dist[u].unwrap() + 1;
            for v in self.neighbors(u) {
                if dist[v].is_none() {
                    dist[v] = Some(d);
                    queue.push_back(v);
                }
            }
        }
        dist
    }

    pub fn diameter(&self) -> Diameter {
        let mut best = 0;
        for s in 0..self.n {
            for d in self.distances_from(s) {
                match d {
                    Some(d) => best = best.max(d),
                    None => return Diameter::Infinite,
                }
            }
        }
        Diameter::Finite(best)
    }

    /// First step of a shortest path from `from` to the nearest vertex
    /// satisfying `target`, least id among equally short options. Returns
    /// `from` itself when it already is a target, `None` if unreachable.
    pub fn step_toward(&self, from: usize, target: impl Fn(usize) -> bool) -> Option<usize> {
        if target(from) {
            return Some(from);
        }
        // Layered BFS; `hop[v]` is the least first step over all shortest
        // routes from `from` to `v`.
        let mut dist = vec![usize::MAX; self.n];
        let mut hop = vec![usize::MAX; self.n];
        dist[from] = 0;
        let mut frontier = vec![from];
        while !frontier.is_empty() {
            let mut next = Vec::new();
            for &u in &frontier {
                for v in self.neighbors(u) {
                    let h = if u == from { v } else { hop[u] };
                    if dist[v] == usize::MAX {
                        dist[v] = dist[u] + 1;
                        hop[v] = h;
                        next.push(v);
                    } else if dist[v] == dist[u] + 1 {
                        hop[v] = hop[v].min(h);
                    }
                }
            }
            if let Some(best) = next.iter().copied().filter(|&v| target(v)).min_by_key(|&v| (hop[v], v)) {
                return Some(hop[best]);
            }
            frontier = next;
        }
        None
    }

    /// Proper 2-colouring (`false`/`true` per vertex) if the graph is bipartite.
    pub fn two_colouring(&self) -> Option<Vec<bool>> {
        let mut colour: Vec<Option<bool>> = vec![None; self.n];
        for s in 0..self.n {
            if colour[s].is_some() {
                continue;
            }
            colour[s] = Some(false);
            let mut stack = vec![s];
            while let Some(u) = stack.pop() {
                let c = colour[u].unwrap();
                for v in self.neighbors(u) {
                    match colour[v] {
                        None => {
                            colour[v] = Some(!c);
                            stack.push(v);
                        }
                        Some(cv) if cv == c => return None,
                        Some(_) => {}
                    }
                }
            }
        }
        Some(colour.into_iter().map(Option::unwrap).collect())
    }

    /// Classification with precedence K1 > K2 > COMPLETE > C5 > PATH > OTHER.
    pub fn classify_small(&self) -> SmallClass {
        let n = self.n;
        let m = self.edge_count();
        if n == 1 {
            return SmallClass::K1;
        }
        if n == 2 && m == 1 {
            return SmallClass::K2;
        }
        if n >= 3 && m == n * (n - 1) / 2 {
            return SmallClass::Complete;
        }
        if n == 0 || !self.is_connected() {
            return SmallClass::Other;
        }
        let max_deg = (0..n).map(|u| self.degree(u)).max().unwrap_or(0);
        if n == 5 && m == 5 && (0..n).all(|u| self.degree(u) == 2) {
            return SmallClass::C5;
        }
        if m == n - 1 && max_deg <= 2 {
            return SmallClass::Path;
        }
        SmallClass::Other
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges())
    }
}

/// Iterator over set bits of an adjacency row.
pub struct Neighbors<'a> {
    row: &'a [u64],
    word: usize,
    bits: u64,
}

impl Iterator for Neighbors<'_> {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        loop {
            if self.bits != 0 {
                let b = self.bits.trailing_zeros() as usize;
                self.bits &= self.bits - 1;
                return Some(self.word * 64 + b);
            }
            self.word += 1;
            if self.word >= self.row.len() {
                return None;
            }
            self.bits = self.row[self.word];
        }
    }
}
