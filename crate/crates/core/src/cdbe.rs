//! Connected degree-balance editing on digraphs.
//!
//! A minimum directed f-join `F` in the operation multigraph gives the
//! cheapest balance fix; its arcs map back to additions `A_F` and deletions
//! `D_F` by provenance. Exchanges between join arcs then merge components
//! of `H = G + A_F - D_F` without growing `F`, and whatever components are
//! left are threaded onto one join arc.

use crate::error::{Error, Result};
use crate::fjoin::{build_gs_directed, min_f_join, DirectedFJoin};
use crate::graph::{edge, Components, Digraph};
use crate::instance::{balance_counts, BalanceInstance, OperationSet};
use crate::solution::{DirectedEditSolution, DirectedSolveOutcome};

/// Additions and deletions represented by an arc multiset: a single copy of
/// a missing arc is an addition, a single copy of a present arc stands for
/// deleting its reverse, and a doubled arc is both.
fn extract(g: &Digraph, arcs: &[(usize, usize)]) -> Result<DirectedEditSolution> {
    let n = g.n();
    let mut sorted = arcs.to_vec();
    sorted.sort_unstable();
    let mut sol = DirectedEditSolution::default();
    for group in sorted.chunk_by(|a, b| a == b) {
        let (u, v) = group[0];
        if u == v || u >= n || v >= n {
            return Err(Error::ArcNotInOperationGraph(u, v));
        }
        match (group.len(), g.has_arc(u, v), g.has_arc(v, u)) {
            (1, false, _) => {
                sol.additions.insert((u, v));
            }
            (1, true, true) => {
                sol.deletions.insert((v, u));
            }
            (2, false, true) => {
                sol.additions.insert((u, v));
                sol.deletions.insert((v, u));
            }
            _ => return Err(Error::ArcNotInOperationGraph(u, v)),
        }
    }
    Ok(sol)
}

/// `A_F` and `D_F` for a directed f-join of the operation multigraph of `g`.
pub fn extract_af_df(f: &DirectedFJoin, g: &Digraph) -> Result<DirectedEditSolution> {
    extract(g, f.arcs())
}

fn edited(g: &Digraph, arcs: &[(usize, usize)]) -> Digraph {
    let sol = extract(g, arcs).expect("join arcs come from the operation multigraph");
    g.edited(&sol.additions, &sol.deletions)
}

fn components_with(g: &Digraph, arcs: &[(usize, usize)]) -> Components {
    edited(g, arcs).components()
}

fn without(arcs: &[(usize, usize)], drop: &[usize]) -> Vec<(usize, usize)> {
    arcs.iter()
        .enumerate()
        .filter(|(i, _)| !drop.contains(i))
        .map(|(_, &a)| a)
        .collect()
}

/// One improving exchange on the join, if any.
fn improve_once(g: &Digraph, arcs: &[(usize, usize)]) -> Option<Vec<(usize, usize)>> {
    let h = edited(g, arcs);
    let comps = h.components();
    if comps.count <= 1 {
        return None;
    }
    let bridges = h.underlying().bridges();
    let improves = |cand: &[(usize, usize)]| components_with(g, cand).count < comps.count;

    // swap heads with an arc in another component; the first arc must be a
    // deletion stand-in or an addition whose removal keeps u and v joined
    for (i, &(u, v)) in arcs.iter().enumerate() {
        let doubled = arcs.iter().filter(|&&a| a == (u, v)).count() == 2;
        let active = doubled
            || g.has_arc(u, v)
            || !bridges.contains(&edge(u, v))
            || h.has_arc(v, u);
        if !active {
            continue;
        }
        for (j, &(u2, v2)) in arcs.iter().enumerate() {
            if comps.same(u, u2) {
                continue;
            }
            let mut cand = without(arcs, &[i, j]);
            cand.extend([(u, v2), (u2, v)]);
            if improves(&cand) {
                return Some(cand);
            }
        }
    }

    // reroute a non-separating length-two path through an outside vertex
    for (i, &(u, v)) in arcs.iter().enumerate() {
        for (j, &(v2, w)) in arcs.iter().enumerate() {
            if i == j || v2 != v || u == w {
                continue;
            }
            let rest = without(arcs, &[i, j]);
            if !components_with(g, &rest).same(u, v) {
                continue;
            }
            let Some(x) = (0..g.n()).find(|&x| !comps.same(x, v)) else {
                continue;
            };
            let mut cand = rest;
            cand.extend([(u, x), (x, w)]);
            if improves(&cand) {
                return Some(cand);
            }
        }
    }
    None
}

/// Exchanges arcs of a minimum directed f-join so that `G + A_F - D_F` has
/// as few components as the exchange rules can reach. The join keeps its
/// size and net balances, and never gains deletion stand-ins.
///
/// Fails with [`Error::ArcNotInOperationGraph`] when `f` uses an arc the
/// operation multigraph of `g` does not provide.
pub fn rewire_fjoin_for_connectivity(g: &Digraph, f: &DirectedFJoin) -> Result<DirectedFJoin> {
    extract(g, f.arcs())?;
    let mut arcs = f.arcs().to_vec();
    while let Some(next) = improve_once(g, &arcs) {
        arcs = next;
        arcs.sort_unstable();
    }
    Ok(DirectedFJoin::from_arcs(g.n(), arcs))
}

/// Replaces one copy of the smallest join arc `(u, v)` by a directed path
/// from `u` to `v` through a representative of every other component.
fn splice_components(g: &Digraph, arcs: &[(usize, usize)]) -> DirectedEditSolution {
    let mut arcs = arcs.to_vec();
    arcs.sort_unstable();
    let comps = components_with(g, &arcs);
    if comps.count > 1 && !arcs.is_empty() {
        let (u, v) = arcs.remove(0);
        let mut stops = vec![u];
        stops.extend(
            comps
                .representatives()
                .into_iter()
                .filter(|&r| !comps.same(r, u)),
        );
        stops.push(v);
        arcs.extend(stops.windows(2).map(|w| (w[0], w[1])));
    }
    extract(g, &arcs).expect("spliced arcs join distinct components")
}

pub fn solve_cdbe(inst: &BalanceInstance, s: OperationSet) -> DirectedSolveOutcome {
    let g = inst.digraph();
    let counts = balance_counts(inst);
    let budget = inst.budget();
    let gs = build_gs_directed(g, s);
    let excess = counts.excess.clone().expect("balance counts carry the excess");
    let Some(f) = min_f_join(&gs, &excess) else {
        return DirectedSolveOutcome::no_instance(counts, None, budget);
    };
    let join_size = Some(f.len());
    let (p, q, t) = (counts.p, counts.q, counts.t);

    if q == 0 {
        let sol = if p <= 1 {
            DirectedEditSolution::default()
        } else {
            let reps = g.components().representatives();
            let cycle = (0..p).map(|i| (reps[i], reps[(i + 1) % p]));
            DirectedEditSolution::new(cycle, [])
        };
        let opt = if p <= 1 { 0 } else { p };
        return DirectedSolveOutcome::solved(opt, sol, counts, join_size, budget);
    }

    // q >= 1 means some vertex has nonzero excess, so F is nonempty
    assert!(!f.is_empty());
    let opt = f.len().max(p + q - 1).max(p + t / 2);
    let f = rewire_fjoin_for_connectivity(g, &f).expect("minimum join lies in the operation multigraph");
    let sol = splice_components(g, f.arcs());
    DirectedSolveOutcome::solved(opt, sol, counts, join_size, budget)
}

/// Balance editing without the connectivity requirement: the optimum is
/// the size of a minimum directed f-join counted with multiplicity.
pub fn solve_dbe(inst: &BalanceInstance, s: OperationSet) -> DirectedSolveOutcome {
    let g = inst.digraph();
    let counts = balance_counts(inst);
    let budget = inst.budget();
    let gs = build_gs_directed(g, s);
    let excess = counts.excess.clone().expect("balance counts carry the excess");
    match min_f_join(&gs, &excess) {
        None => DirectedSolveOutcome::no_instance(counts, None, budget),
        Some(f) => {
            let sol = extract(g, f.arcs()).expect("minimum join lies in the operation multigraph");
            DirectedSolveOutcome::solved(f.len(), sol, counts, Some(f.len()), budget)
        }
    }
}
