//! Python bindings: graphs, the solver, trap and forbidden-subgraph
//! detection, scripted strategies and the verification harness.

use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;
use pyo3::types::PyAny;

use copwin::forbidden::{self, InducedWitness};
use copwin::graph::{emit_edge_list, emit_graph6, parse_graph6_with, Diameter};
use copwin::harness::{self, parse_check_list, verify_graph};
use copwin::solver::{self, best_robber_policy, simulate_game, solve, CopNumber};
use copwin::strategies::{freeze_edge_strategy, rk2_guard_strategy, ScriptedStrategy};
use copwin::traps::{self, TrapSearchResult, TrapWitness};
use copwin::Graph;

fn value_error(e: impl std::fmt::Display) -> PyErr {
    PyValueError::new_err(e.to_string())
}

#[pyclass(name = "Graph", module = "copwin", frozen, eq, from_py_object)]
#[derive(Clone, PartialEq)]
pub struct PyGraph {
    inner: Graph,
}

#[pymethods]
impl PyGraph {
    #[new]
    #[pyo3(signature = (n, edges = Vec::new()))]
    fn new(n: usize, edges: Vec<(usize, usize)>) -> PyResult<Self> {
        Graph::from_edge_list(n, &edges).map(|inner| PyGraph { inner }).map_err(value_error)
    }

    #[staticmethod]
    #[pyo3(signature = (text, strict = true))]
    fn from_graph6(text: &str, strict: bool) -> PyResult<Self> {
        parse_graph6_with(text, strict).map(|p| PyGraph { inner: p.graph }).map_err(value_error)
    }

    #[staticmethod]
    fn path(n: usize) -> Self {
        PyGraph { inner: Graph::path(n) }
    }

    #[staticmethod]
    fn cycle(n: usize) -> Self {
        PyGraph { inner: Graph::cycle(n) }
    }

    #[staticmethod]
    fn complete(n: usize) -> Self {
        PyGraph { inner: Graph::complete(n) }
    }

    #[staticmethod]
    fn petersen() -> Self {
        PyGraph { inner: Graph::petersen() }
    }

    fn to_graph6(&self) -> PyResult<String> {
        if self.inner.is_empty() || self.inner.n() >= 1 << 18 {
            return Err(PyValueError::new_err("graph6 covers 1 <= n < 262144"));
        }
        Ok(emit_graph6(&self.inner))
    }

    fn to_edge_list(&self) -> String {
        emit_edge_list(&self.inner)
    }

    #[getter]
    fn n(&self) -> usize {
        self.inner.n()
    }

    fn edges(&self) -> Vec<(usize, usize)> {
        self.inner.edges()
    }

    fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.inner.n() && v < self.inner.n() && self.inner.has_edge(u, v)
    }

    fn is_connected(&self) -> bool {
        self.inner.n() > 0 && self.inner.is_connected()
    }

    /// `None` for disconnected graphs.
    fn diameter(&self) -> Option<usize> {
        match self.inner.diameter() {
            Diameter::Finite(d) => Some(d),
            Diameter::Infinite => None,
        }
    }

    fn classify_small(&self) -> String {
        format!("{:?}", self.inner.classify_small()).to_uppercase()
    }

    fn __repr__(&self) -> String {
        match self.inner.n() {
            0 => "Graph(n=0)".into(),
            _ => format!("Graph.from_graph6({:?})", emit_graph6(&self.inner)),
        }
    }

    fn __len__(&self) -> usize {
        self.inner.n()
    }
}

fn witness(w: Option<InducedWitness>) -> Option<Vec<usize>> {
    w.map(|w| w.vertices)
}

/// Least `k <= k_max` with `is_k_cop_win(g, k)`, or `None` if there is none.
#[pyfunction]
#[pyo3(signature = (g, k_max = 4))]
fn cop_number(g: &PyGraph, k_max: usize) -> PyResult<Option<usize>> {
    match solver::cop_number(&g.inner, k_max).map_err(value_error)? {
        CopNumber::Exactly(k) => Ok(Some(k)),
        CopNumber::Exceeds(_) => Ok(None),
    }
}

#[pyfunction]
fn is_k_cop_win(g: &PyGraph, k: usize) -> PyResult<bool> {
    solver::is_k_cop_win(&g.inner, k).map(|(win, _)| win).map_err(value_error)
}

#[pyfunction]
fn capture_time(g: &PyGraph, k: usize) -> PyResult<u32> {
    solver::capture_time(&g.inner, k).map_err(value_error)
}

#[pyfunction]
fn find_induced_2k2(g: &PyGraph) -> Option<Vec<usize>> {
    witness(forbidden::find_induced_2k2(&g.inner))
}

#[pyfunction]
fn is_2k2_free(g: &PyGraph) -> bool {
    forbidden::is_2k2_free(&g.inner)
}

#[pyfunction]
fn find_induced_rk2(g: &PyGraph, r: usize) -> PyResult<Option<Vec<usize>>> {
    forbidden::find_induced_rk2(&g.inner, r).map(witness).map_err(value_error)
}

#[pyfunction]
fn find_induced_path(g: &PyGraph, t: usize) -> PyResult<Option<Vec<usize>>> {
    forbidden::find_induced_path(&g.inner, t).map(witness).map_err(value_error)
}

/// `(v, w, u, x)`: with cops on edge `vw`, the robber on `u` can step to `x`.
#[pyfunction]
fn cantmove_violation(g: &PyGraph) -> Option<(usize, usize, usize, usize)> {
    forbidden::cantmove_violation(&g.inner).map(|c| (c.edge.0, c.edge.1, c.u, c.x))
}

fn trap_tuple(w: &TrapWitness) -> (usize, usize, usize, &'static str, bool) {
    let kind = if w.type_two { "II" } else { "I" };
    (w.u, w.pair.0, w.pair.1, kind, w.connected)
}

/// Every trap as `(u, x1, x2, type, connected)`.
#[pyfunction]
fn enumerate_traps(g: &PyGraph) -> Vec<(usize, usize, usize, &'static str, bool)> {
    traps::enumerate_traps(&g.inner).iter().map(trap_tuple).collect()
}

/// `"IS_K1"`, `"IS_K2"`, `"IS_C5"`, or a trap tuple as in `enumerate_traps`.
#[pyfunction]
fn find_connected_trap(py: Python<'_>, g: &PyGraph) -> PyResult<Py<PyAny>> {
    let found = traps::find_connected_trap(&g.inner).map_err(value_error)?;
    let obj = match found {
        TrapSearchResult::IsK1 => "IS_K1".into_pyobject(py)?.into_any(),
        TrapSearchResult::IsK2 => "IS_K2".into_pyobject(py)?.into_any(),
        TrapSearchResult::IsC5 => "IS_C5".into_pyobject(py)?.into_any(),
        TrapSearchResult::Witness(w) => trap_tuple(&w).into_pyobject(py)?.into_any(),
    };
    Ok(obj.unbind())
}

fn json_to_py(py: Python<'_>, text: String) -> PyResult<Py<PyAny>> {
    Ok(py.import("json")?.call_method1("loads", (text,))?.unbind())
}

/// Plays `"freeze"` or `"rk2"` against the optimal robber; returns the trace
/// as a dict with `positions`, `captured_at`, `cop_turns`, `phases` and
/// `invariant_breaks`.
#[pyfunction]
#[pyo3(signature = (g, strategy, r = 3, cap = None))]
fn simulate(py: Python<'_>, g: &PyGraph, strategy: &str, r: usize, cap: Option<usize>) -> PyResult<Py<PyAny>> {
    let g = &g.inner;
    let (mut script, default_cap): (Box<dyn ScriptedStrategy>, usize) = match strategy {
        "freeze" => (Box::new(freeze_edge_strategy(g).map_err(value_error)?), 2 * g.n()),
        "rk2" => (Box::new(rk2_guard_strategy(g, r).map_err(value_error)?), 2 * g.n() * r),
        other => return Err(PyValueError::new_err(format!("unknown strategy {other:?}"))),
    };
    let table = solve(g, script.cop_count()).map_err(value_error)?;
    let mut robber = best_robber_policy(&table);
    let trace = simulate_game(g, script.as_mut(), &mut robber, cap.unwrap_or(default_cap)).map_err(value_error)?;
    let report = serde_json::json!({
        "positions": trace.positions,
        "captured_at": trace.captured_at,
        "cop_turns": trace.cop_turns,
        "phases": script.phases(),
        "invariant_breaks": script.invariant_breaks(),
    });
    json_to_py(py, report.to_string())
}

/// Runs the named checks on each graph; returns one record dict per graph.
#[pyfunction]
#[pyo3(signature = (graphs, checks = "ALL", k_max = 4))]
fn verify(py: Python<'_>, graphs: Vec<PyGraph>, checks: &str, k_max: usize) -> PyResult<Vec<Py<PyAny>>> {
    let checks = parse_check_list(checks).map_err(value_error)?;
    graphs
        .iter()
        .enumerate()
        .map(|(i, g)| {
            let record = verify_graph(i, &g.inner, &checks, k_max);
            json_to_py(py, serde_json::to_string(&record).map_err(value_error)?)
        })
        .collect()
}

#[pyfunction]
fn enumerate_connected_graphs(n: usize) -> PyResult<Vec<PyGraph>> {
    Ok(harness::enumerate_connected_graphs(n).map_err(value_error)?.map(|inner| PyGraph { inner }).collect())
}

#[pymodule(name = "copwin")]
fn copwin_module(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyGraph>()?;
    m.add_function(wrap_pyfunction!(cop_number, m)?)?;
    m.add_function(wrap_pyfunction!(is_k_cop_win, m)?)?;
    m.add_function(wrap_pyfunction!(capture_time, m)?)?;
    m.add_function(wrap_pyfunction!(find_induced_2k2, m)?)?;
    m.add_function(wrap_pyfunction!(is_2k2_free, m)?)?;
    m.add_function(wrap_pyfunction!(find_induced_rk2, m)?)?;
    m.add_function(wrap_pyfunction!(find_induced_path, m)?)?;
    m.add_function(wrap_pyfunction!(cantmove_violation, m)?)?;
    m.add_function(wrap_pyfunction!(enumerate_traps, m)?)?;
    m.add_function(wrap_pyfunction!(find_connected_trap, m)?)?;
    m.add_function(wrap_pyfunction!(simulate, m)?)?;
    m.add_function(wrap_pyfunction!(verify, m)?)?;
    m.add_function(wrap_pyfunction!(enumerate_connected_graphs, m)?)?;
    Ok(())
}
