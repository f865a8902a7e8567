//! Scripted cop strategies: the 3-cop edge freeze for `2K2`-free graphs and
//! the recursive `(2r-2)`-cop guard strategy for `rK2`-free graphs.

use serde::Serialize;
use thiserror::Error;

use crate::forbidden::{find_induced_2k2, find_induced_rk2, ForbiddenError, InducedWitness};
use crate::graph::Graph;
use crate::solver::{extract_cop_policy, CopPolicy, CopStrategy, GameTrace, SolverError};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Phase {
    Guard,
    Walker,
    Recursed,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum StrategyError {
    #[error("the strategy needs a connected graph")]
    Disconnected,
    #[error("graph contains an induced {0}")]
    Forbidden(InducedWitness),
    #[error("guard strategy needs r >= 2, got {0}")]
    BadR(usize),
    #[error(transparent)]
    Detection(#[from] ForbiddenError),
    #[error("base policy: {0}")]
    Base(#[from] SolverError),
}

/// A cop strategy that also reports per-cop roles and self-checks.
pub trait ScriptedStrategy: CopStrategy {
    fn phases(&self) -> Vec<Phase>;
    /// Cop turns on which the script's own invariant failed. Zero in every
    /// sound run.
    fn invariant_breaks(&self) -> usize;
}

/// Moves every cop that sees the robber onto it; `None` if no cop does.
fn capture_move(g: &Graph, cops: &[usize], robber: usize) -> Option<Vec<usize>> {
    cops.iter()
        .any(|&c| g.dominates(c, robber))
        .then(|| cops.iter().map(|&c| if g.dominates(c, robber) { robber } else { c }).collect())
}

fn step(g: &Graph, from: usize, to: usize) -> usize {
    g.step_toward(from, |x| x == to).expect("connected graph")
}

/// Two cops on the least edge hold it; a third walks to the robber.
#[derive(Debug, Clone)]
pub struct FreezeStrategy {
    g: Graph,
    edge: Option<(usize, usize)>,
    breaks: usize,
}

impl FreezeStrategy {
    pub fn guarded_edge(&self) -> Option<(usize, usize)> {
        self.edge
    }
}

/// Builds the freeze strategy. An edgeless (single-vertex) graph gets all
/// three cops on its only vertex.
pub fn freeze_edge_strategy(g: &Graph) -> Result<FreezeStrategy, StrategyError> {
    if !g.is_connected() {
        return Err(StrategyError::Disconnected);
    }
    if let Some(w) = find_induced_2k2(g) {
        return Err(StrategyError::Forbidden(w));
    }
    Ok(FreezeStrategy { g: g.clone(), edge: g.first_edge(), breaks: 0 })
}

impl CopStrategy for FreezeStrategy {
    fn cop_count(&self) -> usize {
        3
    }

    fn place(&mut self) -> Vec<usize> {
        match self.edge {
            Some((v, w)) => vec![v, w, v],
            None => vec![0; 3],
        }
    }

    fn next_move(&mut self, trace: &GameTrace) -> Vec<usize> {
        let now = trace.current();
        let (g, r) = (&self.g, now.robber);
        if let Some(mv) = capture_move(g, &now.cops, r) {
            return mv;
        }
        let Some((v, w)) = self.edge else { return now.cops.clone() };
        let guarded = |x: usize| g.dominates(v, x) || g.dominates(w, x);
        if now.cops[0] == v && now.cops[1] == w && g.neighbors(r).any(|x| !guarded(x)) {
            self.breaks += 1;
        }
        vec![v, w, step(g, now.cops[2], r)]
    }
}

impl ScriptedStrategy for FreezeStrategy {
    fn phases(&self) -> Vec<Phase> {
        vec![Phase::Guard, Phase::Guard, Phase::Walker]
    }

    fn invariant_breaks(&self) -> usize {
        self.breaks
    }
}

/// Supplies optimal 2-cop policies for the `2K2`-free arenas reached at the
/// bottom of the guard recursion.
pub trait BasePolicy {
    fn two_cop_policy(&mut self, g: &Graph) -> Result<CopPolicy, SolverError>;
}

/// Base policies straight from the exact solver.
#[derive(Debug, Clone, Copy, Default)]
pub struct SolverBase;

impl BasePolicy for SolverBase {
    fn two_cop_policy(&mut self, g: &Graph) -> Result<CopPolicy, SolverError> {
        extract_cop_policy(g, 2)
    }
}

#[derive(Debug, Clone)]
struct Level {
    /// Sorted vertices of `G` the robber is confined to.
    arena: Vec<usize>,
    inside: Vec<bool>,
    /// Least edge of the arena, held by cops `2l` and `2l + 1`.
    edge: Option<(usize, usize)>,
}

impl Level {
    fn new(g: &Graph, arena: Vec<usize>) -> Self {
        let mut inside = vec![false; g.n()];
        for &v in &arena {
            inside[v] = true;
        }
        let (sub, map) = g.induced_subgraph(&arena);
        let edge = sub.first_edge().map(|(a, b)| (map[a], map[b]));
        Level { arena, inside, edge }
    }
}

#[derive(Debug, Clone)]
struct BaseGame {
    map: Vec<usize>,
    local: Vec<usize>,
    policy: CopPolicy,
    started: bool,
}

/// The recursive guard strategy with `2r - 2` cops.
///
/// Level `l` confines the robber to an arena that is `(r - l)K2`-free. While
/// `r - l > 2`, cops `2l` and `2l + 1` hold the arena's least edge and the
/// next arena is the robber's component of what that edge leaves unguarded.
/// At `r - l = 2` the last two cops walk to the base policy's placement in
/// the arena and then play it.
pub struct GuardStrategy<B: BasePolicy = SolverBase> {
    g: Graph,
    r: usize,
    base: B,
    levels: Vec<Level>,
    game: Option<BaseGame>,
    restarts: usize,
    off_policy: usize,
    base_error: Option<SolverError>,
}

pub fn rk2_guard_strategy(g: &Graph, r: usize) -> Result<GuardStrategy, StrategyError> {
    rk2_guard_strategy_with(g, r, SolverBase)
}

pub fn rk2_guard_strategy_with<B: BasePolicy>(g: &Graph, r: usize, base: B) -> Result<GuardStrategy<B>, StrategyError> {
    if r < 2 {
        return Err(StrategyError::BadR(r));
    }
    if !g.is_connected() {
        return Err(StrategyError::Disconnected);
    }
    if let Some(w) = find_induced_rk2(g, r)? {
        return Err(StrategyError::Forbidden(w));
    }
    let mut s = GuardStrategy {
        g: g.clone(),
        r,
        base,
        levels: vec![Level::new(g, (0..g.n()).collect())],
        game: None,
        restarts: 0,
        off_policy: 0,
        base_error: None,
    };
    if r == 2 {
        s.start_base()?;
    }
    Ok(s)
}

impl<B: BasePolicy> GuardStrategy<B> {
    pub fn restarts(&self) -> usize {
        self.restarts
    }

    /// The innermost arena established so far.
    pub fn arena(&self) -> &[usize] {
        &self.levels.last().expect("top level always present").arena
    }

    pub fn base_error(&self) -> Option<&SolverError> {
        self.base_error.as_ref()
    }

    fn depth(&self) -> usize {
        self.levels.len() - 1
    }

    fn remaining(&self) -> usize {
        self.r - self.depth()
    }

    fn start_base(&mut self) -> Result<(), SolverError> {
        let arena = &self.levels.last().unwrap().arena;
        let (sub, map) = self.g.induced_subgraph(arena);
        let policy = self.base.two_cop_policy(&sub)?;
        let mut local = vec![usize::MAX; self.g.n()];
        for (i, &v) in map.iter().enumerate() {
            local[v] = i;
        }
        self.game = Some(BaseGame { map, local, policy, started: false });
        Ok(())
    }

    /// Brings the level stack in line with the robber's position: drops
    /// levels the robber has left, then opens every level whose guards are
    /// already in place.
    fn sync(&mut self, cops: &[usize], robber: usize) {
        if !self.levels.last().unwrap().inside[robber] {
            self.restarts += 1;
            self.game = None;
            while !self.levels.last().unwrap().inside[robber] {
                self.levels.pop();
            }
        }
        while self.remaining() > 2 && self.game.is_none() {
            let l = self.depth();
            let level = self.levels.last().unwrap();
            let Some((u, v)) = level.edge else { return };
            if cops[2 * l] != u || cops[2 * l + 1] != v {
                return;
            }
            let open: Vec<usize> =
                level.arena.iter().copied().filter(|&x| !self.g.dominates(u, x) && !self.g.dominates(v, x)).collect();
            let (sub, map) = self.g.induced_subgraph(&open);
            let at = map.binary_search(&robber).expect("robber outside guarded sets");
            let comp = sub.components().into_iter().find(|c| c.contains(&at)).unwrap();
            let next = Level::new(&self.g, comp.into_iter().map(|i| map[i]).collect());
            self.levels.push(next);
        }
        if self.remaining() == 2 && self.game.is_none() && self.base_error.is_none() {
            if let Err(e) = self.start_base() {
                self.base_error = Some(e);
            }
        }
    }

    fn base_moves(&mut self, cops: &[usize], robber: usize, out: &mut [usize]) {
        let l = self.depth();
        let (a, b) = (2 * l, 2 * l + 1);
        let Some(game) = self.game.as_mut() else {
            out[a] = step(&self.g, cops[a], robber);
            out[b] = step(&self.g, cops[b], robber);
            return;
        };
        let target = game.policy.placement();
        let (ta, tb) = (game.map[target[0]], game.map[target[1]]);
        if !game.started && cops[a] == ta && cops[b] == tb {
            game.started = true;
        }
        if !game.started {
            out[a] = step(&self.g, cops[a], ta);
            out[b] = step(&self.g, cops[b], tb);
            return;
        }
        let local = [game.local[cops[a]], game.local[cops[b]]];
        match game.policy.move_for(&local, game.local[robber]) {
            Some(mv) => {
                out[a] = game.map[mv[0]];
                out[b] = game.map[mv[1]];
            }
            None => {
                self.off_policy += 1;
                out[a] = step(&self.g, cops[a], robber);
                out[b] = step(&self.g, cops[b], robber);
            }
        }
    }
}

impl<B: BasePolicy> CopStrategy for GuardStrategy<B> {
    fn cop_count(&self) -> usize {
        2 * self.r - 2
    }

    fn place(&mut self) -> Vec<usize> {
        if let Some(game) = &self.game {
            return game.policy.placement().iter().map(|&c| game.map[c]).collect();
        }
        match self.levels[0].edge {
            Some((u, v)) => {
                let mut cops = vec![u; self.cop_count()];
                cops[1] = v;
                cops
            }
            None => vec![0; self.cop_count()],
        }
    }

    fn next_move(&mut self, trace: &GameTrace) -> Vec<usize> {
        let now = trace.current();
        let (cops, robber) = (&now.cops, now.robber);
        if let Some(mv) = capture_move(&self.g, cops, robber) {
            return mv;
        }
        self.sync(cops, robber);
        let mut out = cops.clone();
        let l = self.depth();
        if self.remaining() == 2 {
            self.base_moves(cops, robber, &mut out);
            return out;
        }
        let mut first_walker = 2 * l;
        if let Some((u, v)) = self.levels[l].edge {
            out[2 * l] = step(&self.g, cops[2 * l], u);
            out[2 * l + 1] = step(&self.g, cops[2 * l + 1], v);
            first_walker += 2;
        }
        for c in first_walker..cops.len() {
            out[c] = step(&self.g, cops[c], robber);
        }
        out
    }
}

impl<B: BasePolicy> ScriptedStrategy for GuardStrategy<B> {
    fn phases(&self) -> Vec<Phase> {
        let l = self.depth();
        let mut phases = vec![Phase::Walker; self.cop_count()];
        for p in phases.iter_mut().take(2 * l) {
            *p = Phase::Guard;
        }
        if self.remaining() > 2 && self.levels[l].edge.is_some() {
            phases[2 * l] = Phase::Guard;
            phases[2 * l + 1] = Phase::Guard;
        }
        if self.game.as_ref().is_some_and(|g| g.started) {
            phases[2 * l] = Phase::Recursed;
            phases[2 * l + 1] = Phase::Recursed;
        }
        phases
    }

    fn invariant_breaks(&self) -> usize {
        self.restarts + self.off_policy + usize::from(self.base_error.is_some())
    }
}
