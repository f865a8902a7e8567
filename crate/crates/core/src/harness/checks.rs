//! The verification menu. Each check maps a graph to an [`Outcome`].

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::forbidden::{cantmove_violation, find_induced_2k2, find_induced_path, find_induced_rk2, InducedWitness};
use crate::graph::{Graph, SmallClass};
use crate::solver::{best_robber_policy, cop_number, simulate_game, solve, CopNumber, SolverError};
use crate::strategies::{freeze_edge_strategy, rk2_guard_strategy, ScriptedStrategy};
use crate::traps::{find_connected_trap, is_trap_by, TrapSearchResult};

pub const DEFAULT_PT: usize = 5;
pub const DEFAULT_R: usize = 3;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Check {
    TheoremMain,
    Trichotomy,
    Diameter3,
    CantmoveEquiv,
    BipartiteDom,
    PtBound(usize),
    Rk2Bound(usize),
    FreezeSim,
    Rk2Sim(usize),
    Degree1Invariance,
    ShadowBound,
}

impl Check {
    pub fn all() -> Vec<Check> {
        vec![
            Check::TheoremMain,
            Check::Trichotomy,
            Check::Diameter3,
            Check::CantmoveEquiv,
            Check::BipartiteDom,
            Check::PtBound(DEFAULT_PT),
            Check::Rk2Bound(DEFAULT_R),
            Check::FreezeSim,
            Check::Rk2Sim(DEFAULT_R),
            Check::Degree1Invariance,
            Check::ShadowBound,
        ]
    }

    fn base_name(self) -> &'static str {
        match self {
            Check::TheoremMain => "THEOREM_MAIN",
            Check::Trichotomy => "TRICHOTOMY",
            Check::Diameter3 => "DIAMETER3",
            Check::CantmoveEquiv => "CANTMOVE_EQUIV",
            Check::BipartiteDom => "BIPARTITE_DOM",
            Check::PtBound(_) => "PT_BOUND",
            Check::Rk2Bound(_) => "RK2_BOUND",
            Check::FreezeSim => "FREEZE_SIM",
            Check::Rk2Sim(_) => "RK2_SIM",
            Check::Degree1Invariance => "DEGREE1_INVARIANCE",
            Check::ShadowBound => "SHADOW_BOUND",
        }
    }
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Check::PtBound(p) | Check::Rk2Bound(p) | Check::Rk2Sim(p) => write!(f, "{}({p})", self.base_name()),
            _ => f.write_str(self.base_name()),
        }
    }
}

impl Serialize for Check {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl FromStr for Check {
    type Err = String;

    /// Accepts `NAME` or `NAME(p)`, case-insensitively.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim().to_ascii_uppercase();
        let (name, param) = match s.split_once('(') {
            Some((name, rest)) => {
                let inner = rest.strip_suffix(')').ok_or_else(|| format!("unclosed parameter in {s:?}"))?;
                let p: usize = inner.trim().parse().map_err(|_| format!("bad parameter in {s:?}"))?;
                (name.trim().to_string(), Some(p))
            }
            None => (s.clone(), None),
        };
        let check = match name.as_str() {
            "PT_BOUND" => Check::PtBound(param.unwrap_or(DEFAULT_PT)),
            "RK2_BOUND" => Check::Rk2Bound(param.unwrap_or(DEFAULT_R)),
            "RK2_SIM" => Check::Rk2Sim(param.unwrap_or(DEFAULT_R)),
            other => {
                let c = Check::all()
                    .into_iter()
                    .find(|c| c.base_name() == other)
                    .ok_or_else(|| format!("unknown check {other:?}"))?;
                if param.is_some() {
                    return Err(format!("{other} takes no parameter"));
                }
                c
            }
        };
        match check {
            Check::PtBound(t) if t < 3 => Err(format!("PT_BOUND needs t >= 3, got {t}")),
            Check::Rk2Bound(r) | Check::Rk2Sim(r) if r < 2 => Err(format!("{name} needs r >= 2, got {r}")),
            c => Ok(c),
        }
    }
}

/// Parses a comma-separated list; `ALL` expands to the full menu.
/// Parenthesised parameters may contain no commas, so splitting is safe.
pub fn parse_check_list(list: &str) -> Result<Vec<Check>, String> {
    let mut out: Vec<Check> = Vec::new();
    for item in list.split(',').map(str::trim).filter(|s| !s.is_empty()) {
        let items = if item.eq_ignore_ascii_case("ALL") { Check::all() } else { vec![item.parse()?] };
        for c in items {
            if !out.contains(&c) {
                out.push(c);
            }
        }
    }
    if out.is_empty() {
        return Err("no checks selected".into());
    }
    Ok(out)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "outcome", content = "detail", rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Outcome {
    Pass,
    Fail(String),
    Skipped(String),
    Error(String),
}

impl Outcome {
    pub fn tag(&self) -> &'static str {
        match self {
            Outcome::Pass => "PASS",
            Outcome::Fail(_) => "FAIL",
            Outcome::Skipped(_) => "SKIPPED",
            Outcome::Error(_) => "ERROR",
        }
    }

    pub fn detail(&self) -> Option<&str> {
        match self {
            Outcome::Pass => None,
            Outcome::Fail(s) | Outcome::Skipped(s) | Outcome::Error(s) => Some(s),
        }
    }

    fn pass_if(ok: bool, witness: impl FnOnce() -> String) -> Outcome {
        if ok {
            Outcome::Pass
        } else {
            Outcome::Fail(witness())
        }
    }
}

fn skip(reason: &str) -> Outcome {
    Outcome::Skipped(reason.to_string())
}

/// Per-graph facts shared between checks.
pub struct Subject<'a> {
    pub g: &'a Graph,
    k_max: usize,
    connected: bool,
    two_k2: Option<Option<InducedWitness>>,
    copnum: Option<Result<CopNumber, SolverError>>,
}

impl<'a> Subject<'a> {
    pub fn new(g: &'a Graph, k_max: usize) -> Self {
        Subject { g, k_max, connected: g.n() > 0 && g.is_connected(), two_k2: None, copnum: None }
    }

    fn two_k2(&mut self) -> Option<&InducedWitness> {
        let g = self.g;
        self.two_k2.get_or_insert_with(|| find_induced_2k2(g)).as_ref()
    }

    /// Cop number searched up to `max(k_max, at_least)`.
    fn copnum(&mut self, at_least: usize) -> Result<CopNumber, SolverError> {
        let want = self.k_max.max(at_least);
        let stale = match &self.copnum {
            Some(Ok(CopNumber::Exceeds(k))) => *k < want,
            Some(_) => false,
            None => true,
        };
        if stale {
            self.copnum = Some(cop_number(self.g, want));
        }
        self.copnum.clone().unwrap()
    }

    /// Connected and `2K2`-free, or the reason to skip.
    fn require_2k2_free(&mut self) -> Result<(), Outcome> {
        if !self.connected {
            return Err(skip("disconnected"));
        }
        match self.two_k2() {
            Some(w) => Err(Outcome::Skipped(format!("contains {w}"))),
            None => Ok(()),
        }
    }

    pub fn run(&mut self, check: Check) -> Outcome {
        let r = match check {
            Check::TheoremMain => self.theorem_main(),
            Check::Trichotomy => self.trichotomy(),
            Check::Diameter3 => self.diameter3(),
            Check::CantmoveEquiv => Ok(self.cantmove_equiv()),
            Check::BipartiteDom => self.bipartite_dom(),
            Check::PtBound(t) => self.pt_bound(t),
            Check::Rk2Bound(r) => self.rk2_bound(r),
            Check::FreezeSim => self.freeze_sim(),
            Check::Rk2Sim(r) => self.rk2_sim(r),
            Check::Degree1Invariance => self.degree1(),
            Check::ShadowBound => self.shadow(),
        };
        r.unwrap_or_else(|o| o)
    }

    fn bound(&mut self, bound: usize) -> Result<Outcome, Outcome> {
        let c = self.copnum(bound).map_err(|e| Outcome::Error(e.to_string()))?;
        Ok(Outcome::pass_if(c.at_most(bound) == Some(true), || format!("c(G) = {c}, bound {bound}")))
    }

    fn theorem_main(&mut self) -> Result<Outcome, Outcome> {
        self.require_2k2_free()?;
        self.bound(2)
    }

    fn trichotomy(&mut self) -> Result<Outcome, Outcome> {
        self.require_2k2_free()?;
        let g = self.g;
        let class = g.classify_small();
        let found = find_connected_trap(g).map_err(|e| Outcome::Error(e.to_string()))?;
        let expected = match class {
            SmallClass::K1 => Some(TrapSearchResult::IsK1),
            SmallClass::K2 => Some(TrapSearchResult::IsK2),
            SmallClass::C5 => Some(TrapSearchResult::IsC5),
            _ => None,
        };
        Ok(match (expected, found) {
            (Some(e), f) => Outcome::pass_if(e == f, || format!("classified {class:?} but search gave {f:?}")),
            (None, TrapSearchResult::Witness(w)) => {
                let recheck = is_trap_by(g, w.u, w.pair.0, w.pair.1).ok().flatten();
                Outcome::pass_if(recheck == Some(w) && w.connected, || format!("invalid witness {w}"))
            }
            (None, f) => Outcome::Fail(format!("classified {class:?} but search gave {f:?}")),
        })
    }

    fn diameter3(&mut self) -> Result<Outcome, Outcome> {
        self.require_2k2_free()?;
        let d = self.g.diameter();
        Ok(Outcome::pass_if(d.finite().is_some_and(|d| d <= 3), || format!("diameter {d}")))
    }

    fn cantmove_equiv(&mut self) -> Outcome {
        let violation = cantmove_violation(self.g);
        let two_k2 = self.two_k2().cloned();
        match (violation, two_k2) {
            (None, None) | (Some(_), Some(_)) => Outcome::Pass,
            (Some(v), None) => Outcome::Fail(format!("2K2-free but robber can move: {v}")),
            (None, Some(w)) => Outcome::Fail(format!("contains {w} but no robber can move")),
        }
    }

    fn bipartite_dom(&mut self) -> Result<Outcome, Outcome> {
        self.require_2k2_free()?;
        let g = self.g;
        if g.n() < 2 {
            return Err(skip("fewer than two vertices"));
        }
        let Some(colour) = g.two_colouring() else { return Err(skip("not bipartite")) };
        for side in [false, true] {
            let other: Vec<usize> = (0..g.n()).filter(|&v| colour[v] != side).collect();
            let ok = (0..g.n()).any(|x| colour[x] == side && other.iter().all(|&y| g.has_edge(x, y)));
            if !ok {
                let class: Vec<usize> = (0..g.n()).filter(|&v| colour[v] == side).collect();
                return Ok(Outcome::Fail(format!("no vertex of {class:?} sees all of {other:?}")));
            }
        }
        Ok(Outcome::Pass)
    }

    fn pt_bound(&mut self, t: usize) -> Result<Outcome, Outcome> {
        if !self.connected {
            return Err(skip("disconnected"));
        }
        match find_induced_path(self.g, t) {
            Err(e) => Err(Outcome::Error(e.to_string())),
            Ok(Some(w)) => Err(Outcome::Skipped(format!("contains {w}"))),
            Ok(None) => self.bound(t - 2),
        }
    }

    fn require_rk2_free(&mut self, r: usize) -> Result<(), Outcome> {
        if !self.connected {
            return Err(skip("disconnected"));
        }
        match find_induced_rk2(self.g, r) {
            Err(e) => Err(Outcome::Error(e.to_string())),
            Ok(Some(w)) => Err(Outcome::Skipped(format!("contains {w}"))),
            Ok(None) => Ok(()),
        }
    }

    fn rk2_bound(&mut self, r: usize) -> Result<Outcome, Outcome> {
        self.require_rk2_free(r)?;
        self.bound(2 * r - 2)
    }

    fn scripted_game(&self, cops: &mut dyn ScriptedStrategy, cap: usize) -> Outcome {
        let g = self.g;
        let table = match solve(g, cops.cop_count()) {
            Ok(t) => t,
            Err(e) => return Outcome::Error(e.to_string()),
        };
        let mut robber = best_robber_policy(&table);
        match simulate_game(g, cops, &mut robber, cap) {
            Err(e) => Outcome::Fail(e.to_string()),
            Ok(_) if cops.invariant_breaks() > 0 => {
                Outcome::Fail(format!("strategy invariant broke {} times", cops.invariant_breaks()))
            }
            Ok(trace) if !trace.captured() => {
                Outcome::Fail(format!("no capture in {cap} cop turns, robber at {}", trace.current().robber))
            }
            Ok(_) => Outcome::Pass,
        }
    }

    fn freeze_sim(&mut self) -> Result<Outcome, Outcome> {
        self.require_2k2_free()?;
        let mut s = freeze_edge_strategy(self.g).map_err(|e| Outcome::Error(e.to_string()))?;
        Ok(self.scripted_game(&mut s, 2 * self.g.n()))
    }

    fn rk2_sim(&mut self, r: usize) -> Result<Outcome, Outcome> {
        self.require_rk2_free(r)?;
        let mut s = rk2_guard_strategy(self.g, r).map_err(|e| Outcome::Error(e.to_string()))?;
        Ok(self.scripted_game(&mut s, 2 * self.g.n() * r))
    }

    /// Vertices `x` with `G - x` connected and nonempty, paired with `G - x`.
    fn removable(&self, pick: impl Fn(usize) -> bool) -> Vec<(usize, Graph)> {
        let g = self.g;
        (0..g.n())
            .filter(|&x| pick(x))
            .filter_map(|x| {
                let (h, _) = g.delete_vertex(x);
                (h.n() > 0 && h.is_connected()).then_some((x, h))
            })
            .collect()
    }

    fn degree1(&mut self) -> Result<Outcome, Outcome> {
        if !self.connected {
            return Err(skip("disconnected"));
        }
        let g = self.g;
        let cases = self.removable(|x| g.degree(x) == 1);
        if cases.is_empty() {
            return Err(skip("no removable degree-1 vertex"));
        }
        let c = self.copnum(1).map_err(|e| Outcome::Error(e.to_string()))?;
        for (x, h) in cases {
            let ch = cop_number(&h, self.k_max).map_err(|e| Outcome::Error(e.to_string()))?;
            match (c.value(), ch.value()) {
                (Some(a), Some(b)) if a == b => {}
                (Some(_), Some(_)) => return Ok(Outcome::Fail(format!("c(G) = {c} but c(G - {x}) = {ch}"))),
                _ => return Err(Outcome::Error(format!("cop number above k_max = {}", self.k_max))),
            }
        }
        Ok(Outcome::Pass)
    }

    fn shadow(&mut self) -> Result<Outcome, Outcome> {
        if !self.connected {
            return Err(skip("disconnected"));
        }
        let g = self.g;
        let shadowed = |x: usize| (0..g.n()).any(|u| u != x && g.neighbors(x).all(|y| g.has_edge(u, y)));
        let cases = self.removable(shadowed);
        if cases.is_empty() {
            return Err(skip("no removable shadowed vertex"));
        }
        let c = self.copnum(1).map_err(|e| Outcome::Error(e.to_string()))?;
        for (x, h) in cases {
            let ch = cop_number(&h, self.k_max).map_err(|e| Outcome::Error(e.to_string()))?;
            let Some(b) = ch.value() else {
                return Err(Outcome::Error(format!("cop number above k_max = {}", self.k_max)));
            };
            if c.at_most(b.max(2)) != Some(true) {
                return Ok(Outcome::Fail(format!("c(G) = {c} but c(G - {x}) = {ch}")));
            }
        }
        Ok(Outcome::Pass)
    }
}
