//! Edit solutions and solver outcomes.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::graph::edge;
use crate::instance::StructuralCounts;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Verdict {
    Solved,
    NoInstance,
}

/// Undirected edits; pairs are stored normalised.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct EditSolution {
    pub additions: BTreeSet<(usize, usize)>,
    pub deletions: BTreeSet<(usize, usize)>,
}

impl EditSolution {
    pub fn new(
        additions: impl IntoIterator<Item = (usize, usize)>,
        deletions: impl IntoIterator<Item = (usize, usize)>,
    ) -> Self {
        EditSolution {
            additions: additions.into_iter().map(|(u, v)| edge(u, v)).collect(),
            deletions: deletions.into_iter().map(|(u, v)| edge(u, v)).collect(),
        }
    }

    pub fn size(&self) -> usize {
        self.additions.len() + self.deletions.len()
    }
}

/// Directed edits as ordered pairs.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct DirectedEditSolution {
    pub additions: BTreeSet<(usize, usize)>,
    pub deletions: BTreeSet<(usize, usize)>,
}

impl DirectedEditSolution {
    pub fn new(
        additions: impl IntoIterator<Item = (usize, usize)>,
        deletions: impl IntoIterator<Item = (usize, usize)>,
    ) -> Self {
        DirectedEditSolution {
            additions: additions.into_iter().collect(),
            deletions: deletions.into_iter().collect(),
        }
    }

    pub fn size(&self) -> usize {
        self.additions.len() + self.deletions.len()
    }
}

/// Result of one solver call: the optimum with a witness, or a no-instance
/// verdict, plus the structural quantities the optimum was derived from.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome<S> {
    opt: Option<usize>,
    solution: Option<S>,
    counts: StructuralCounts,
    join_size: Option<usize>,
    budget: Option<usize>,
}

pub type SolveOutcome = Outcome<EditSolution>;
pub type DirectedSolveOutcome = Outcome<DirectedEditSolution>;

impl<S> Outcome<S> {
    pub(crate) fn solved(
        opt: usize,
        solution: S,
        counts: StructuralCounts,
        join_size: Option<usize>,
        budget: Option<usize>,
    ) -> Self {
        Outcome {
            opt: Some(opt),
            solution: Some(solution),
            counts,
            join_size,
            budget,
        }
    }

    pub(crate) fn no_instance(
        counts: StructuralCounts,
        join_size: Option<usize>,
        budget: Option<usize>,
    ) -> Self {
        Outcome {
            opt: None,
            solution: None,
            counts,
            join_size,
            budget,
        }
    }

    pub fn verdict(&self) -> Verdict {
        if self.opt.is_some() {
            Verdict::Solved
        } else {
            Verdict::NoInstance
        }
    }

    pub fn opt(&self) -> Option<usize> {
        self.opt
    }

    pub fn solution(&self) -> Option<&S> {
        self.solution.as_ref()
    }

    pub fn counts(&self) -> &StructuralCounts {
        &self.counts
    }

    /// Size of the minimum join the optimum was derived from, when one was
    /// computed.
    pub fn join_size(&self) -> Option<usize> {
        self.join_size
    }

    pub fn budget(&self) -> Option<usize> {
        self.budget
    }

    /// `opt <= k` when a budget was given; a no-instance is never feasible.
    pub fn feasible_within_budget(&self) -> Option<bool> {
        self.budget
            .map(|k| self.opt.is_some_and(|opt| opt <= k))
    }
}
