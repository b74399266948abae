//! JSON records written by `solve` and read back by `verify`.

use degedit::{Outcome, StructuralCounts, Verdict};
use serde::{Deserialize, Serialize};

use crate::format::Kind;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Counts {
    pub p: usize,
    pub q: usize,
    pub t: usize,
    /// Number of deficient vertices.
    #[serde(rename = "T")]
    pub deficient: usize,
    /// Size of the minimum join, when one exists.
    #[serde(rename = "F")]
    pub join: Option<usize>,
}

impl Counts {
    pub fn new(c: &StructuralCounts, join: Option<usize>) -> Self {
        Counts {
            p: c.p,
            q: c.q,
            t: c.t,
            deficient: c.deficient.len(),
            join,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ResultRecord {
    pub kind: String,
    pub opset: String,
    pub verdict: Verdict,
    pub opt: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub additions: Option<Vec<(usize, usize)>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub deletions: Option<Vec<(usize, usize)>>,
    pub counts: Counts,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub budget: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub feasible_within_budget: Option<bool>,
    pub millis: f64,
}

/// Additions and deletions as plain pair lists.
pub type EditLists = (Vec<(usize, usize)>, Vec<(usize, usize)>);

/// Anything carrying the two edit lists: a solver record or a hand-written
/// `{"additions": [...], "deletions": [...]}` file.
pub trait Edits {
    fn lists(&self) -> EditLists;
}

impl Edits for degedit::EditSolution {
    fn lists(&self) -> EditLists {
        (self.additions.iter().copied().collect(), self.deletions.iter().copied().collect())
    }
}

impl Edits for degedit::DirectedEditSolution {
    fn lists(&self) -> EditLists {
        (self.additions.iter().copied().collect(), self.deletions.iter().copied().collect())
    }
}

impl ResultRecord {
    pub fn from_outcome<S: Edits>(kind: Kind, opset: degedit::OperationSet, out: &Outcome<S>, millis: f64) -> Self {
        let (additions, deletions) = match out.solution().map(Edits::lists) {
            Some((a, d)) => (Some(a), Some(d)),
            None => (None, None),
        };
        ResultRecord {
            kind: kind.to_string(),
            opset: opset.to_string(),
            verdict: out.verdict(),
            opt: out.opt(),
            additions,
            deletions,
            counts: Counts::new(out.counts(), out.join_size()),
            budget: out.budget(),
            feasible_within_budget: out.feasible_within_budget(),
            millis,
        }
    }
}

/// The part of a solution file `verify` reads. Missing lists are empty.
#[derive(Debug, Clone, Default, PartialEq, Eq, Deserialize)]
pub struct SolutionFile {
    #[serde(default)]
    pub verdict: Option<Verdict>,
    #[serde(default)]
    pub opt: Option<usize>,
    #[serde(default)]
    pub additions: Vec<(usize, usize)>,
    #[serde(default)]
    pub deletions: Vec<(usize, usize)>,
}
