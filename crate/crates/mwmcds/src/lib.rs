//! Solver library for the minimum-weight minimum connected dominating set
//! problem: a greedy-seeded simulated annealer over a scalarized
//! size/weight objective, an exhaustive exact solver for validation, and a
//! benchmark-instance generator with a data-transfer energy model.
//!
//! See the `examples/` directory for one runnable example per capability
//! (`cargo run --example solve_gsa`, etc.) and the `mwmcds` binary for the
//! file-based command-line interface.

pub mod annealer;
pub mod bench;
pub mod cli;
pub mod construct;
pub mod graph;
pub mod instance;
pub mod neighborhood;
pub mod objective;
pub mod oracle;

pub use annealer::{run, RunResult, SAParams};
pub use graph::{Graph, VertexSet};
pub use objective::{eval_scalarized, ObjectiveValue, ScalarWeights};
