//! Exact `k`-cop game solving by retrograde analysis.
//!
//! A state is a sorted multiset of cop positions, a robber position and the
//! side to move. Cops place first, the robber places second, then the cops
//! move; each cop may stay or step to a neighbour, all cops moving at once.
//! Capture is position coincidence, checked after every half-turn.
//!
//! Winning states for the cops are the least fixed point of the one-step
//! operators, computed by a worklist that runs outward from the capture
//! states in rounds of increasing `steps` (cop turns until capture under
//! minimax play). Robber-to-move states keep a counter of unresolved
//! successors and resolve when it reaches zero.

mod policy;
mod sim;

use thiserror::Error;

use crate::graph::Graph;

pub use policy::{best_robber_policy, extract_cop_policy, CopPolicy, RobberPolicy};
pub use sim::{simulate_game, CopStrategy, GameTrace, RobberStrategy, SimulationError, Snapshot};

/// Marker for states the cops cannot force.
pub const UNREACHABLE: u32 = u32::MAX;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SolverError {
    #[error("the game needs a connected graph with at least one vertex")]
    Disconnected,
    #[error("at least one cop is required")]
    NoCops,
    #[error("graph is not {0}-cop-win")]
    NotCopWin(usize),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Side {
    Cops,
    Robber,
}

/// Result of [`cop_number`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, serde::Serialize, serde::Deserialize)]
pub enum CopNumber {
    Exactly(usize),
    /// More than the given bound.
    Exceeds(usize),
}

impl CopNumber {
    pub fn value(self) -> Option<usize> {
        match self {
            CopNumber::Exactly(k) => Some(k),
            CopNumber::Exceeds(_) => None,
        }
    }

    /// `c(G) <= k`, when decidable from this answer.
    pub fn at_most(self, k: usize) -> Option<bool> {
        match self {
            CopNumber::Exactly(c) => Some(c <= k),
            CopNumber::Exceeds(bound) if k <= bound => Some(false),
            CopNumber::Exceeds(_) => None,
        }
    }
}

impl std::fmt::Display for CopNumber {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CopNumber::Exactly(k) => write!(f, "{k}"),
            CopNumber::Exceeds(k) => write!(f, ">{k}"),
        }
    }
}

/// Ranking of sorted cop multisets of a fixed size.
///
/// A sorted tuple `a_0 <= ... <= a_{k-1}` maps to the strictly increasing
/// `b_i = a_i + i` and is ranked colexicographically, `sum C(b_i, i + 1)`.
#[derive(Debug, Clone)]
pub(crate) struct TupleSpace {
    n: usize,
    k: usize,
    binom: Vec<Vec<u64>>,
}

impl TupleSpace {
    pub(crate) fn new(n: usize, k: usize) -> Self {
        let rows = n + k;
        let mut binom = vec![vec![0u64; k + 1]; rows + 1];
        for m in 0..=rows {
            binom[m][0] = 1;
            for j in 1..=k.min(m) {
                binom[m][j] = binom[m - 1][j - 1] + binom[m - 1][j];
            }
        }
        TupleSpace { n, k, binom }
    }

    /// Number of multisets of size `size <= k`.
    fn count(&self, size: usize) -> usize {
        if size == 0 {
            return 1;
        }
        self.binom[self.n + size - 1][size] as usize
    }

    pub(crate) fn len(&self) -> usize {
        self.count(self.k)
    }

    #[inline]
    pub(crate) fn rank(&self, sorted: &[u32]) -> usize {
        sorted.iter().enumerate().map(|(i, &a)| self.binom[a as usize + i][i + 1]).sum::<u64>() as usize
    }

    /// Every sorted `k`-tuple, indexed by rank, flattened.
    fn all(&self) -> Vec<u32> {
        let k = self.k;
        let total = self.len();
        let mut flat = vec![0u32; total * k];
        let mut cur = vec![0u32; k];
        loop {
            let r = self.rank(&cur);
            flat[r * k..(r + 1) * k].copy_from_slice(&cur);
            // next sorted tuple in lexicographic order
            let Some(i) = (0..k).rev().find(|&i| (cur[i] as usize) < self.n - 1) else { break };
            let v = cur[i] + 1;
            cur[i..].fill(v);
        }
        flat
    }
}

/// Retrograde solution of the `k`-cop game on one graph.
#[derive(Debug, Clone)]
pub struct SolveTable {
    n: usize,
    k: usize,
    space: TupleSpace,
    tuples: Vec<u32>,
    closed: Vec<Vec<u32>>,
    succ_start: Vec<u32>,
    succ: Vec<u32>,
    steps: Vec<u32>,
}

#[inline]
fn state_index(n: usize, t: usize, r: usize, side: Side) -> usize {
    (t * n + r) * 2 + (side == Side::Robber) as usize
}

impl SolveTable {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn tuple_count(&self) -> usize {
        self.space.len()
    }

    /// Total number of game states, `C(n+k-1, k) * n * 2`.
    pub fn state_count(&self) -> usize {
        self.steps.len()
    }

    pub(crate) fn space(&self) -> &TupleSpace {
        &self.space
    }

    pub(crate) fn tuple(&self, t: usize) -> &[u32] {
        &self.tuples[t * self.k..(t + 1) * self.k]
    }

    pub(crate) fn successors(&self, t: usize) -> &[u32] {
        &self.succ[self.succ_start[t] as usize..self.succ_start[t + 1] as usize]
    }

    pub(crate) fn closed(&self, v: usize) -> &[u32] {
        &self.closed[v]
    }

    #[inline]
    pub(crate) fn raw_steps(&self, t: usize, r: usize, side: Side) -> u32 {
        self.steps[state_index(self.n, t, r, side)]
    }

    pub(crate) fn rank_of(&self, cops: &[usize]) -> usize {
        let mut sorted: Vec<u32> = cops.iter().map(|&c| c as u32).collect();
        sorted.sort_unstable();
        self.space.rank(&sorted)
    }

    /// Cop turns until capture under minimax play, `None` if the robber
    /// escapes forever. `cops` may be in any order.
    pub fn steps(&self, cops: &[usize], robber: usize, side: Side) -> Option<u32> {
        assert_eq!(cops.len(), self.k, "expected {} cops", self.k);
        let s = self.raw_steps(self.rank_of(cops), robber, side);
        (s != UNREACHABLE).then_some(s)
    }

    pub fn is_winning(&self, cops: &[usize], robber: usize, side: Side) -> bool {
        self.steps(cops, robber, side).is_some()
    }

    /// Worst-case capture time of placement `t` over all robber replies.
    fn placement_value(&self, t: usize) -> u32 {
        (0..self.n).map(|r| self.raw_steps(t, r, Side::Cops)).max().unwrap_or(0)
    }

    /// Steps-optimal winning placement, least lexicographic among ties.
    pub fn best_placement(&self) -> Option<(Vec<usize>, u32)> {
        let mut best: Option<(u32, &[u32])> = None;
        for t in 0..self.tuple_count() {
            let v = self.placement_value(t);
            if v == UNREACHABLE {
                continue;
            }
            let tup = self.tuple(t);
            if best.is_none_or(|(bv, bt)| (v, tup) < (bv, bt)) {
                best = Some((v, tup));
            }
        }
        best.map(|(v, t)| (t.iter().map(|&c| c as usize).collect(), v))
    }

    /// Some placement beats every robber placement.
    pub fn cops_win(&self) -> bool {
        (0..self.tuple_count()).any(|t| self.placement_value(t) != UNREACHABLE)
    }

    /// `min` over placements of `max` over robber replies of `steps`.
    pub fn capture_time(&self) -> Option<u32> {
        self.best_placement().map(|(_, v)| v)
    }
}

fn require_game_graph(g: &Graph) -> Result<(), SolverError> {
    if !g.is_connected() {
        return Err(SolverError::Disconnected);
    }
    Ok(())
}

/// Builds the full solve table for `k` cops on a connected graph.
pub fn solve(g: &Graph, k: usize) -> Result<SolveTable, SolverError> {
    require_game_graph(g)?;
    if k == 0 {
        return Err(SolverError::NoCops);
    }
    Ok(solve_unchecked(g, k))
}

pub(crate) fn solve_unchecked(g: &Graph, k: usize) -> SolveTable {
    let n = g.n();
    let space = TupleSpace::new(n, k);
    let tuples = space.all();
    let closed: Vec<Vec<u32>> =
        (0..n).map(|v| g.closed_neighborhood(v).into_iter().map(|x| x as u32).collect()).collect();
    let (succ_start, succ) = cop_moves(&space, &tuples, &closed);
    let tcount = space.len();

    let mut steps = vec![UNREACHABLE; tcount * n * 2];
    let mut pending: Vec<u32> = Vec::with_capacity(tcount * n);
    let mut cops_round: Vec<(u32, u32)> = Vec::new();
    let mut robber_round: Vec<(u32, u32)> = Vec::new();
    for t in 0..tcount {
        let tup = &tuples[t * k..(t + 1) * k];
        for r in 0..n {
            pending.push(closed[r].len() as u32);
            if tup.contains(&(r as u32)) {
                steps[state_index(n, t, r, Side::Cops)] = 0;
                steps[state_index(n, t, r, Side::Robber)] = 0;
                cops_round.push((t as u32, r as u32));
                robber_round.push((t as u32, r as u32));
            }
        }
    }

    let mut level = 0u32;
    loop {
        // Cops-to-move states worth `level`: the robber may have moved here.
        for &(t, r) in &cops_round {
            let t = t as usize;
            for &rp in &closed[r as usize] {
                let rp = rp as usize;
                let idx = state_index(n, t, rp, Side::Robber);
                if steps[idx] != UNREACHABLE {
                    continue;
                }
                let c = &mut pending[t * n + rp];
                *c -= 1;
                if *c == 0 {
                    steps[idx] = level;
                    robber_round.push((t as u32, rp as u32));
                }
            }
        }
        // Robber-to-move states worth `level`: cops reach them in one move.
        let mut next = Vec::new();
        for &(t, r) in &robber_round {
            let r = r as usize;
            let (a, b) = (succ_start[t as usize] as usize, succ_start[t as usize + 1] as usize);
            for &tp in &succ[a..b] {
                let idx = state_index(n, tp as usize, r, Side::Cops);
                if steps[idx] == UNREACHABLE {
                    steps[idx] = level + 1;
                    next.push((tp, r as u32));
                }
            }
        }
        if next.is_empty() {
            break;
        }
        cops_round = next;
        robber_round.clear();
        level += 1;
    }

    SolveTable { n, k, space, tuples, closed, succ_start, succ, steps }
}

/// Successor multisets of every cop tuple, as CSR arrays of ranks. Moves are
/// symmetric (stay or step along an edge), so these double as predecessors.
///
/// Successors are grown one cop at a time, deduplicating partial multisets
/// at every stage through per-size stamp arrays.
fn cop_moves(space: &TupleSpace, tuples: &[u32], closed: &[Vec<u32>]) -> (Vec<u32>, Vec<u32>) {
    let k = space.k;
    let tcount = space.len();
    let mut stamps: Vec<Vec<u32>> = (0..=k).map(|s| vec![0u32; space.count(s)]).collect();
    let mut epoch = 0u32;
    let mut start = Vec::with_capacity(tcount + 1);
    let mut out: Vec<u32> = Vec::new();
    let mut stage: Vec<u32> = Vec::new();
    let mut next: Vec<u32> = Vec::new();
    let mut ranks: Vec<u32> = Vec::new();
    let mut buf = vec![0u32; k];

    for t in 0..tcount {
        start.push(out.len() as u32);
        let tup = &tuples[t * k..(t + 1) * k];
        stage.clear();
        for size in 0..k {
            epoch += 1;
            next.clear();
            ranks.clear();
            let parts = stage.len().checked_div(size).unwrap_or(1);
            for p in 0..parts {
                let part = &stage[p * size..(p + 1) * size];
                for &d in &closed[tup[size] as usize] {
                    let at = part.partition_point(|&x| x <= d);
                    buf[..at].copy_from_slice(&part[..at]);
                    buf[at] = d;
                    buf[at + 1..=size].copy_from_slice(&part[at..]);
                    let r = space.rank(&buf[..=size]);
                    let stamp = &mut stamps[size + 1][r];
                    if *stamp != epoch {
                        *stamp = epoch;
                        next.extend_from_slice(&buf[..=size]);
                        ranks.push(r as u32);
                    }
                }
            }
            std::mem::swap(&mut stage, &mut next);
        }
        out.extend_from_slice(&ranks);
    }
    start.push(out.len() as u32);
    (start, out)
}

/// Decides whether `k` cops can force capture, returning the table as well.
pub fn is_k_cop_win(g: &Graph, k: usize) -> Result<(bool, SolveTable), SolverError> {
    let table = solve(g, k)?;
    Ok((table.cops_win(), table))
}

/// Least `k <= k_max` such that `k` cops win. `c(K1) = 1`.
pub fn cop_number(g: &Graph, k_max: usize) -> Result<CopNumber, SolverError> {
    require_game_graph(g)?;
    if k_max == 0 {
        return Err(SolverError::NoCops);
    }
    for k in 1..=k_max {
        if solve_unchecked(g, k).cops_win() {
            return Ok(CopNumber::Exactly(k));
        }
    }
    Ok(CopNumber::Exceeds(k_max))
}

/// Minimax capture time in cop turns from the best placement.
pub fn capture_time(g: &Graph, k: usize) -> Result<u32, SolverError> {
    solve(g, k)?.capture_time().ok_or(SolverError::NotCopWin(k))
}
