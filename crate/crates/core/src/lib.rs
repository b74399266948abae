//! Exact solvers for connected degree-parity editing on undirected graphs
//! and connected degree-balance editing on directed graphs, with edge (arc)
//! additions and optionally deletions.

pub mod cdbe;
pub mod cdpe;
pub mod error;
pub mod fjoin;
pub mod generate;
pub mod graph;
pub mod instance;
pub mod matching;
pub mod oracle;
pub mod solution;
pub mod tjoin;
pub mod verify;

pub use error::{Error, Result};
pub use graph::{Digraph, Graph};
pub use instance::{BalanceInstance, OperationSet, ParityInstance, StructuralCounts};
pub use solution::{
    DirectedEditSolution, DirectedSolveOutcome, EditSolution, Outcome, SolveOutcome, Verdict,
};
