pub mod classify;
pub mod error;
pub mod graph;
pub mod reduce;
pub mod solve;
pub mod verify;

pub use classify::{build_chain, classify, Chain, Classification, ModificationKind};
pub use error::{Error, Result};
pub use graph::Graph;
pub use reduce::{replay_chain, Instance, ReductionOp, ReductionStep};
pub use solve::{solve_branching, solve_bruteforce, EditSet, SolveResult};
