//! Game simulation between arbitrary cop and robber strategies.

use thiserror::Error;

use crate::graph::Graph;

/// Positions after a half-turn. Cop order is the strategy's own cop order.
#[derive(Debug, Clone, PartialEq, Eq, serde::Serialize)]
pub struct Snapshot {
    pub cops: Vec<usize>,
    pub robber: usize,
}

impl Snapshot {
    pub fn captured(&self) -> bool {
        self.cops.contains(&self.robber)
    }
}

/// Every position from the placements onwards, one snapshot per half-turn.
#[derive(Debug, Clone, Default, serde::Serialize)]
pub struct GameTrace {
    pub positions: Vec<Snapshot>,
    /// Cop turns played when the robber was caught (`0` at placement).
    pub captured_at: Option<usize>,
    pub cop_turns: usize,
}

impl GameTrace {
    pub fn current(&self) -> &Snapshot {
        self.positions.last().expect("trace starts with the placements")
    }

    pub fn captured(&self) -> bool {
        self.captured_at.is_some()
    }
}

pub trait CopStrategy {
    fn cop_count(&self) -> usize;
    fn place(&mut self) -> Vec<usize>;
    /// Called with the cops to move; returns one destination per cop.
    fn next_move(&mut self, trace: &GameTrace) -> Vec<usize>;
}

pub trait RobberStrategy {
    fn place(&mut self, cops: &[usize]) -> usize;
    fn next_move(&mut self, trace: &GameTrace) -> usize;
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SimulationError {
    #[error("turn {turn}: cop strategy returned {got} positions for {expected} cops")]
    Arity { turn: usize, expected: usize, got: usize },
    #[error("turn {turn}: cop {cop} cannot move from {from} to {to} (state {state:?})")]
    IllegalCopMove { turn: usize, cop: usize, from: usize, to: usize, state: Snapshot },
    #[error("turn {turn}: robber cannot move from {from} to {to} (state {state:?})")]
    IllegalRobberMove { turn: usize, from: usize, to: usize, state: Snapshot },
    #[error("placement on vertex {0} outside the graph")]
    Placement(usize),
}

/// Plays until capture or until `turn_cap` cop turns have been made.
pub fn simulate_game(
    g: &Graph,
    cops: &mut dyn CopStrategy,
    robber: &mut dyn RobberStrategy,
    turn_cap: usize,
) -> Result<GameTrace, SimulationError> {
    let k = cops.cop_count();
    let placed = cops.place();
    if placed.len() != k {
        return Err(SimulationError::Arity { turn: 0, expected: k, got: placed.len() });
    }
    if let Some(&bad) = placed.iter().find(|&&c| c >= g.n()) {
        return Err(SimulationError::Placement(bad));
    }
    let r = robber.place(&placed);
    if r >= g.n() {
        return Err(SimulationError::Placement(r));
    }
    let mut trace = GameTrace::default();
    trace.positions.push(Snapshot { cops: placed, robber: r });
    if trace.current().captured() {
        trace.captured_at = Some(0);
        return Ok(trace);
    }

    for turn in 1..=turn_cap {
        let next = cops.next_move(&trace);
        let now = trace.current();
        if next.len() != k {
            return Err(SimulationError::Arity { turn, expected: k, got: next.len() });
        }
        for (cop, (&from, &to)) in now.cops.iter().zip(&next).enumerate() {
            if to >= g.n() || !g.dominates(from, to) {
                return Err(SimulationError::IllegalCopMove { turn, cop, from, to, state: now.clone() });
            }
        }
        let robber_at = now.robber;
        trace.positions.push(Snapshot { cops: next, robber: robber_at });
        trace.cop_turns = turn;
        if trace.current().captured() {
            trace.captured_at = Some(turn);
            return Ok(trace);
        }

        let to = robber.next_move(&trace);
        let now = trace.current();
        if to >= g.n() || !g.dominates(now.robber, to) {
            return Err(SimulationError::IllegalRobberMove { turn, from: now.robber, to, state: now.clone() });
        }
        let snap = Snapshot { cops: now.cops.clone(), robber: to };
        trace.positions.push(snap);
        if trace.current().captured() {
            trace.captured_at = Some(turn);
            return Ok(trace);
        }
    }
    Ok(trace)
}
