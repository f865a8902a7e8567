//! Optimal strategies read off a [`SolveTable`].

use crate::graph::Graph;

use super::sim::{CopStrategy, GameTrace, RobberStrategy};
use super::{solve, Side, SolveTable, SolverError, TupleSpace, UNREACHABLE};

/// Optimal cop play: a placement and, for every winning cops-to-move state,
/// where each cop goes.
#[derive(Debug, Clone)]
pub struct CopPolicy {
    n: usize,
    k: usize,
    space: TupleSpace,
    placement: Vec<usize>,
    /// Per `(tuple, robber)`: destinations aligned with the sorted tuple.
    moves: Vec<Option<Box<[u32]>>>,
}

impl CopPolicy {
    pub fn cop_count(&self) -> usize {
        self.k
    }

    pub fn placement(&self) -> &[usize] {
        &self.placement
    }

    /// Destinations for `cops` (any order; output aligned with the input)
    /// when the robber sits on `robber` and the cops are to move. `None` on
    /// states the cops do not win or where the robber is already caught.
    pub fn move_for(&self, cops: &[usize], robber: usize) -> Option<Vec<usize>> {
        assert_eq!(cops.len(), self.k);
        let mut order: Vec<usize> = (0..self.k).collect();
        order.sort_by_key(|&i| (cops[i], i));
        let sorted: Vec<u32> = order.iter().map(|&i| cops[i] as u32).collect();
        let t = self.space.rank(&sorted);
        let dest = self.moves[t * self.n + robber].as_ref()?;
        let mut out = vec![0; self.k];
        for (slot, &i) in order.iter().enumerate() {
            out[i] = dest[slot] as usize;
        }
        Some(out)
    }
}

/// Lexicographically least assignment of the multiset `target` to the cops
/// of `from` such that each cop stays or steps to a neighbour.
fn assign(table: &SolveTable, from: &[u32], target: &[u32]) -> Option<Vec<u32>> {
    fn go(table: &SolveTable, from: &[u32], target: &[u32], used: &mut [bool], out: &mut Vec<u32>) -> bool {
        let i = out.len();
        if i == from.len() {
            return true;
        }
        for j in 0..target.len() {
            if used[j] || (j > 0 && target[j] == target[j - 1] && !used[j - 1]) {
                continue;
            }
            if table.closed(from[i] as usize).contains(&target[j]) {
                used[j] = true;
                out.push(target[j]);
                if go(table, from, target, used, out) {
                    return true;
                }
                out.pop();
                used[j] = false;
            }
        }
        false
    }
    let mut used = vec![false; target.len()];
    let mut out = Vec::with_capacity(from.len());
    go(table, from, target, &mut used, &mut out).then_some(out)
}

impl SolveTable {
    /// Policy from this table; errors when the cops do not win.
    pub fn cop_policy(&self) -> Result<CopPolicy, SolverError> {
        let (placement, _) = self.best_placement().ok_or(SolverError::NotCopWin(self.k))?;
        let (n, k) = (self.n, self.k);
        let mut moves = vec![None; self.tuple_count() * n];
        for t in 0..self.tuple_count() {
            let from = self.tuple(t);
            for r in 0..n {
                let here = self.raw_steps(t, r, Side::Cops);
                if here == UNREACHABLE || here == 0 {
                    continue;
                }
                let best = self
                    .successors(t)
                    .iter()
                    .map(|&s| s as usize)
                    .min_by_key(|&s| (self.raw_steps(s, r, Side::Robber), self.tuple(s)))
                    .expect("every tuple can stay put");
                debug_assert_eq!(self.raw_steps(best, r, Side::Robber) + 1, here);
                let dest = assign(self, from, self.tuple(best)).expect("successor reachable by construction");
                moves[t * n + r] = Some(dest.into_boxed_slice());
            }
        }
        Ok(CopPolicy { n, k, space: self.space().clone(), placement, moves })
    }
}

/// Solves the `k`-cop game and extracts a steps-optimal cop policy.
pub fn extract_cop_policy(g: &Graph, k: usize) -> Result<CopPolicy, SolverError> {
    solve(g, k)?.cop_policy()
}

/// Robber play that escapes whenever possible and otherwise delays capture
/// as long as possible; least vertex id among equally good options.
#[derive(Debug, Clone)]
pub struct RobberPolicy {
    n: usize,
    k: usize,
    space: TupleSpace,
    /// Per tuple.
    placement: Vec<u32>,
    /// Per `(tuple, robber)`.
    moves: Vec<u32>,
}

impl RobberPolicy {
    pub fn cop_count(&self) -> usize {
        self.k
    }

    fn rank(&self, cops: &[usize]) -> usize {
        let mut sorted: Vec<u32> = cops.iter().map(|&c| c as u32).collect();
        sorted.sort_unstable();
        self.space.rank(&sorted)
    }

    pub fn placement_against(&self, cops: &[usize]) -> usize {
        self.placement[self.rank(cops)] as usize
    }

    pub fn move_for(&self, cops: &[usize], robber: usize) -> usize {
        self.moves[self.rank(cops) * self.n + robber] as usize
    }
}

/// Reads the robber's best replies off `table`. Escaping states
/// (`UNREACHABLE`) rank above every finite step count.
pub fn best_robber_policy(table: &SolveTable) -> RobberPolicy {
    let (n, k) = (table.n(), table.k());
    let tcount = table.tuple_count();
    let mut placement = Vec::with_capacity(tcount);
    let mut moves = Vec::with_capacity(tcount * n);
    let best_of = |t: usize, options: &mut dyn Iterator<Item = u32>| -> u32 {
        let mut best = (0u32, u32::MAX);
        for v in options {
            let s = table.raw_steps(t, v as usize, Side::Cops);
            if best.1 == u32::MAX || s > best.0 {
                best = (s, v);
            }
        }
        best.1
    };
    for t in 0..tcount {
        placement.push(best_of(t, &mut (0..n as u32)));
        for r in 0..n {
            moves.push(best_of(t, &mut table.closed(r).iter().copied()));
        }
    }
    RobberPolicy { n, k, space: table.space().clone(), placement, moves }
}

impl CopStrategy for CopPolicy {
    fn cop_count(&self) -> usize {
        self.k
    }

    fn place(&mut self) -> Vec<usize> {
        self.placement.clone()
    }

    fn next_move(&mut self, trace: &GameTrace) -> Vec<usize> {
        let now = trace.current();
        self.move_for(&now.cops, now.robber).unwrap_or_else(|| now.cops.clone())
    }
}

impl RobberStrategy for RobberPolicy {
    fn place(&mut self, cops: &[usize]) -> usize {
        self.placement_against(cops)
    }

    fn next_move(&mut self, trace: &GameTrace) -> usize {
        let now = trace.current();
        self.move_for(&now.cops, now.robber)
    }
}
