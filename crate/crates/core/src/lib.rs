//! Cops and robbers on small graphs, with a focus on `2K2`-free graphs.
//!
//! - [`graph`]: adjacency-bitset graphs, graph6 and edge-list I/O.
//! - [`forbidden`]: induced `2K2`, `rK2` and `P_t` detection.
//! - [`traps`]: trap classification and a constructive connected-trap finder.
//! - [`solver`]: exact `k`-cop game solving by retrograde analysis.
//! - [`strategies`]: scripted edge-freeze and guard strategies.
//! - [`harness`]: batch verification over graph corpora.

pub mod forbidden;
pub mod graph;
pub mod harness;
pub mod solver;
pub mod strategies;
pub mod traps;

pub use graph::{Graph, SmallClass};
