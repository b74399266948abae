//! Independent checking of claimed solutions.
//!
//! Relies on nothing but the graph types, so a solver bug in the join or
//! matching code cannot hide behind a checker that shares it.

use std::collections::BTreeSet;

use serde::Serialize;

use crate::graph::edge;
use crate::instance::{BalanceInstance, ParityInstance};
use crate::solution::{DirectedEditSolution, EditSolution};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum Failure {
    /// A pair is a loop or names a vertex outside the graph.
    InvalidPair { u: usize, v: usize },
    /// The same pair is both added and deleted.
    NotDisjoint { u: usize, v: usize },
    DeletionNotEdge { u: usize, v: usize },
    AdditionIsEdge { u: usize, v: usize },
    Disconnected { components: usize },
    ParityViolation { vertex: usize },
    BalanceViolation { vertex: usize },
    SizeMismatch { claimed: usize, actual: usize },
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct VerifyReport {
    pub failures: Vec<Failure>,
}

impl VerifyReport {
    pub fn valid(&self) -> bool {
        self.failures.is_empty()
    }
}

fn check_pairs<'a>(
    n: usize,
    pairs: impl IntoIterator<Item = &'a (usize, usize)>,
    failures: &mut Vec<Failure>,
) -> bool {
    let mut ok = true;
    for &(u, v) in pairs {
        if u == v || u >= n || v >= n {
            failures.push(Failure::InvalidPair { u, v });
            ok = false;
        }
    }
    ok
}

/// Checks legality of the edits, connectivity of `G + A - D`, the parity
/// target at every vertex and, when given, the claimed size.
pub fn verify_parity(
    inst: &ParityInstance,
    sol: &EditSolution,
    claimed_opt: Option<usize>,
) -> VerifyReport {
    let g = inst.graph();
    let n = g.n();
    let mut failures = Vec::new();
    let additions: BTreeSet<_> = sol.additions.iter().map(|&(u, v)| edge(u, v)).collect();
    let deletions: BTreeSet<_> = sol.deletions.iter().map(|&(u, v)| edge(u, v)).collect();
    if !check_pairs(n, additions.iter().chain(&deletions), &mut failures) {
        return VerifyReport { failures };
    }
    for &(u, v) in additions.intersection(&deletions) {
        failures.push(Failure::NotDisjoint { u, v });
    }
    for &(u, v) in &additions {
        if g.has_edge(u, v) {
            failures.push(Failure::AdditionIsEdge { u, v });
        }
    }
    for &(u, v) in &deletions {
        if !g.has_edge(u, v) {
            failures.push(Failure::DeletionNotEdge { u, v });
        }
    }
    let h = g.edited(&additions, &deletions);
    let components = h.components().count;
    if components > 1 {
        failures.push(Failure::Disconnected { components });
    }
    for v in 0..n {
        if (h.degree(v) % 2) as u8 != inst.delta()[v] {
            failures.push(Failure::ParityViolation { vertex: v });
        }
    }
    size_check(additions.len() + deletions.len(), claimed_opt, &mut failures);
    VerifyReport { failures }
}

/// Directed analogue: arc legality, weak connectivity and exact balance.
pub fn verify_balance(
    inst: &BalanceInstance,
    sol: &DirectedEditSolution,
    claimed_opt: Option<usize>,
) -> VerifyReport {
    let g = inst.digraph();
    let n = g.n();
    let mut failures = Vec::new();
    if !check_pairs(n, sol.additions.iter().chain(&sol.deletions), &mut failures) {
        return VerifyReport { failures };
    }
    for &(u, v) in sol.additions.intersection(&sol.deletions) {
        failures.push(Failure::NotDisjoint { u, v });
    }
    for &(u, v) in &sol.additions {
        if g.has_arc(u, v) {
            failures.push(Failure::AdditionIsEdge { u, v });
        }
    }
    for &(u, v) in &sol.deletions {
        if !g.has_arc(u, v) {
            failures.push(Failure::DeletionNotEdge { u, v });
        }
    }
    let h = g.edited(&sol.additions, &sol.deletions);
    let components = h.components().count;
    if components > 1 {
        failures.push(Failure::Disconnected { components });
    }
    for v in 0..n {
        if h.balance(v) != inst.delta()[v] {
            failures.push(Failure::BalanceViolation { vertex: v });
        }
    }
    size_check(sol.size(), claimed_opt, &mut failures);
    VerifyReport { failures }
}

fn size_check(actual: usize, claimed: Option<usize>, failures: &mut Vec<Failure>) {
    if let Some(claimed) = claimed {
        if claimed != actual {
            failures.push(Failure::SizeMismatch { claimed, actual });
        }
    }
}
