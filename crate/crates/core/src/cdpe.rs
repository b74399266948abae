//! Connected degree-parity editing.
//!
//! Both solvers compute the optimum from closed-form case analysis over the
//! deficient set `T` and the component counts `p` (components avoiding `T`)
//! and `q` (components meeting `T`), then build a witness of exactly that
//! size. With additions only the case analysis is driven by a minimum
//! T-join in the complement; with deletions allowed, by a maximum matching
//! in the complement of `G[T]`.

use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::graph::{edge, Components, Graph};
use crate::instance::{parity_counts, OperationSet, ParityInstance};
use crate::matching::max_matching;
use crate::solution::{EditSolution, SolveOutcome};
use crate::tjoin::{build_gs, min_t_join, TJoin};

pub fn solve_cdpe(inst: &ParityInstance, s: OperationSet) -> SolveOutcome {
    match s {
        OperationSet::Add => solve_cdpe_ea(inst),
        OperationSet::AddDelete => solve_cdpe_ea_ed(inst),
    }
}

/// Closed walk `reps[0] - reps[1] - ... - reps[last] - reps[0]`.
fn cycle_through(reps: &[usize]) -> Vec<(usize, usize)> {
    (0..reps.len())
        .map(|i| edge(reps[i], reps[(i + 1) % reps.len()]))
        .collect()
}

/// Path `u - reps... - v` as edges.
fn chain(u: usize, reps: &[usize], v: usize) -> Vec<(usize, usize)> {
    let mut stops = Vec::with_capacity(reps.len() + 2);
    stops.push(u);
    stops.extend_from_slice(reps);
    stops.push(v);
    stops.windows(2).map(|w| edge(w[0], w[1])).collect()
}

/// Replaces the smallest join edge `uv` by a path from `u` to `v` through
/// one representative of every other component of `G + join`. Degree
/// parities are unchanged and the result is connected.
fn splice_components(g: &Graph, join: &[(usize, usize)]) -> Vec<(usize, usize)> {
    let mut join: Vec<_> = join.iter().map(|&(u, v)| edge(u, v)).collect();
    join.sort_unstable();
    let comps = g.edited(&join, &[]).components();
    if comps.count <= 1 || join.is_empty() {
        return join;
    }
    let (u, v) = join.remove(0);
    let others: Vec<usize> = comps
        .representatives()
        .into_iter()
        .filter(|&r| !comps.same(r, u))
        .collect();
    join.extend(chain(u, &others, v));
    join
}

fn components_with(g: &Graph, join: &[(usize, usize)]) -> Components {
    g.edited(join, &[]).components()
}

/// One improving swap on `join`, if any: rule one exchanges endpoints of a
/// non-bridge join edge and a join edge in another component; rule two
/// reroutes a non-separating pair `uv, vw` through an outside vertex.
fn improve_once(g: &Graph, join: &[(usize, usize)]) -> Option<Vec<(usize, usize)>> {
    let h = g.edited(join, &[]);
    let comps = h.components();
    if comps.count <= 1 {
        return None;
    }
    let bridges = h.bridges();
    let without = |drop: &[usize]| -> Vec<(usize, usize)> {
        join.iter()
            .enumerate()
            .filter(|(i, _)| !drop.contains(i))
            .map(|(_, &e)| e)
            .collect()
    };
    let improves = |cand: &[(usize, usize)]| components_with(g, cand).count < comps.count;

    for (i, &(u, v)) in join.iter().enumerate() {
        if bridges.contains(&(u, v)) {
            continue;
        }
        for (j, &(u2, v2)) in join.iter().enumerate() {
            if comps.same(u, u2) {
                continue;
            }
            let mut cand = without(&[i, j]);
            cand.extend([edge(u2, v), edge(u, v2)]);
            if improves(&cand) {
                return Some(cand);
            }
        }
    }

    for (i, &e1) in join.iter().enumerate() {
        for (j, &e2) in join.iter().enumerate().skip(i + 1) {
            let Some((u, v, w)) = shared_middle(e1, e2) else {
                continue;
            };
            let rest = without(&[i, j]);
            if !components_with(g, &rest).same(u, v) {
                continue;
            }
            let Some(x) = (0..g.n()).find(|&x| !comps.same(x, v)) else {
                continue;
            };
            let mut cand = rest;
            cand.extend([edge(u, x), edge(x, w)]);
            if improves(&cand) {
                return Some(cand);
            }
        }
    }
    None
}

/// For edges `uv` and `vw` sharing exactly one vertex, `(u, v, w)`.
fn shared_middle(a: (usize, usize), b: (usize, usize)) -> Option<(usize, usize, usize)> {
    let (a0, a1) = a;
    let (b0, b1) = b;
    if a0 == b0 && a1 != b1 {
        Some((a1, a0, b1))
    } else if a0 == b1 && a1 != b0 {
        Some((a1, a0, b0))
    } else if a1 == b0 && a0 != b1 {
        Some((a0, a1, b1))
    } else if a1 == b1 && a0 != b0 {
        Some((a0, a1, b0))
    } else {
        None
    }
}

/// Exchanges edges of a minimum T-join in the complement of `g` so that
/// `G + F` has as few components as the swap rules can reach. The result
/// is a join of the same size with the same odd-degree set.
///
/// Fails with [`Error::NotAJoin`] if some edge of `f` is a loop, out of
/// range or already an edge of `g`.
pub fn rewire_tjoin_for_connectivity(g: &Graph, f: &TJoin) -> Result<TJoin> {
    let n = g.n();
    for &(u, v) in f.edges() {
        if u == v || u >= n || v >= n || g.has_edge(u, v) {
            return Err(Error::NotAJoin);
        }
    }
    let mut join = f.edges().to_vec();
    while let Some(next) = improve_once(g, &join) {
        join = next;
        join.sort_unstable();
    }
    Ok(TJoin::from_edges(join))
}

/// Additions only.
pub fn solve_cdpe_ea(inst: &ParityInstance) -> SolveOutcome {
    let g = inst.graph();
    let counts = parity_counts(inst);
    let budget = inst.budget();
    let gs = build_gs(g, OperationSet::Add);
    let Some(f) = min_t_join(gs.base(), &counts.deficient) else {
        return SolveOutcome::no_instance(counts, None, budget);
    };
    let join_size = Some(f.len());
    let (p, q) = (counts.p, counts.q);

    if q == 0 {
        let comps = g.components();
        let (opt, additions) = match p {
            1 => (0, Vec::new()),
            2 => {
                let sets = comps.sets();
                let complete: Vec<bool> = sets.iter().map(|s| g.induced(s).is_complete()).collect();
                if complete[0] && complete[1] {
                    if sets[0].len() == 1 || sets[1].len() == 1 {
                        return SolveOutcome::no_instance(counts, join_size, budget);
                    }
                    let (a, b) = (sets[0][0], sets[0][1]);
                    let (c, d) = (sets[1][0], sets[1][1]);
                    (4, vec![edge(a, c), edge(c, b), edge(b, d), edge(d, a)])
                } else {
                    let open = if complete[0] { 1 } else { 0 };
                    let (x, y) = non_adjacent_pair(g, &sets[open]);
                    let z = sets[1 - open][0];
                    (3, vec![edge(x, y), edge(y, z), edge(x, z)])
                }
            }
            _ => (p, cycle_through(&comps.representatives())),
        };
        return SolveOutcome::solved(opt, EditSolution::new(additions, []), counts, join_size, budget);
    }

    let t = counts.deficient.len();
    let opt = f.len().max(p + q - 1).max(p + t / 2);
    let f = rewire_tjoin_for_connectivity(g, &f).expect("minimum join lies in the complement");
    let additions = splice_components(g, f.edges());
    SolveOutcome::solved(opt, EditSolution::new(additions, []), counts, join_size, budget)
}

/// Lexicographically smallest non-adjacent pair inside `set`.
fn non_adjacent_pair(g: &Graph, set: &[usize]) -> (usize, usize) {
    set.iter()
        .flat_map(|&x| set.iter().map(move |&y| (x, y)))
        .find(|&(x, y)| x < y && !g.has_edge(x, y))
        .expect("component is not complete")
}

/// Centre and sorted leaves if `G[T]` is a star `K_{1,r}` with `r >= 1`.
fn star_in(g: &Graph, t: &[usize]) -> Option<(usize, Vec<usize>)> {
    if t.len() < 2 {
        return None;
    }
    let inner = g.induced(t);
    if inner.m() != t.len() - 1 {
        return None;
    }
    let centre = (0..t.len()).find(|&i| inner.degree(i) == t.len() - 1)?;
    if t.len() > 2 && (0..t.len()).any(|i| i != centre && inner.degree(i) != 1) {
        return None;
    }
    let leaves = (0..t.len()).filter(|&i| i != centre).map(|i| t[i]).collect();
    Some((t[centre], leaves))
}

/// Additions and deletions.
pub fn solve_cdpe_ea_ed(inst: &ParityInstance) -> SolveOutcome {
    let g = inst.graph();
    let n = g.n();
    let counts = parity_counts(inst);
    let budget = inst.budget();
    let t = counts.deficient.clone();
    if t.len() % 2 == 1 {
        return SolveOutcome::no_instance(counts, None, budget);
    }
    // the minimum T-join of K_n is a perfect matching on T
    let join_size = Some(t.len() / 2);
    if n == 2 && ((g.m() == 1 && t.len() == 2) || (g.m() == 0 && t.is_empty())) {
        return SolveOutcome::no_instance(counts, join_size, budget);
    }
    let (p, q) = (counts.p, counts.q);
    let solved =
        |opt, a: Vec<_>, d: Vec<_>| SolveOutcome::solved(opt, EditSolution::new(a, d), counts.clone(), join_size, budget);

    if q == 0 {
        let comps = g.components();
        return match p {
            1 => solved(0, vec![], vec![]),
            2 => {
                let (x, y) = g.edges().next().expect("three vertices in two components");
                let z = comps
                    .representatives()
                    .into_iter()
                    .find(|&r| !comps.same(r, x))
                    .expect("two components");
                solved(3, vec![edge(x, z), edge(y, z)], vec![(x, y)])
            }
            _ => solved(p, cycle_through(&comps.representatives()), vec![]),
        };
    }

    if p == 0 && q == 1 {
        if let Some((v0, leaves)) = star_in(g, &t) {
            let bridges = g.bridges();
            if leaves.iter().all(|&v| bridges.contains(&edge(v0, v))) {
                let opt = t.len() / 2 + 1;
                let (a, d) = star_witness(g, v0, &leaves);
                return solved(opt, a, d);
            }
        }
    }

    let opt = (p + q - 1).max(p + t.len() / 2);
    let (a, d) = matching_witness(g, &t, p);
    solved(opt, a, d)
}

type EdgeSets = (Vec<(usize, usize)>, Vec<(usize, usize)>);

/// Witness when `G` is connected, `G[T]` is a star and its edges are all
/// bridges.
fn star_witness(g: &Graph, v0: usize, leaves: &[usize]) -> EdgeSets {
    if let [v1] = *leaves {
        // one side of the bridge v0v1 holds a third vertex adjacent to its end
        for (near, far) in [(v0, v1), (v1, v0)] {
            if let Some(&x) = g.neighbors(near).iter().find(|&&x| x != far) {
                return (vec![edge(x, far)], vec![edge(x, near)]);
            }
        }
        unreachable!("a connected graph on three or more vertices");
    }
    let v = |i: usize| leaves[i - 1];
    let r = leaves.len();
    let mut a = vec![edge(v(1), v(2)), edge(v(2), v(3))];
    for i in 2..=(r - 1) / 2 {
        a.push(edge(v(2 * i), v(2 * i + 1)));
    }
    (a, vec![edge(v0, v(2))])
}

/// Witness for the generic case, built around a maximum matching `M` in
/// the complement of `G[T]` and the set `U` of T-vertices it leaves
/// exposed.
fn matching_witness(g: &Graph, t: &[usize], p: usize) -> EdgeSets {
    let comps = g.components();
    let mut touched = vec![false; comps.count];
    for &v in t {
        touched[comps.label[v]] = true;
    }
    let reps: Vec<usize> = comps
        .representatives()
        .into_iter()
        .filter(|&r| !touched[comps.label[r]])
        .collect();
    debug_assert_eq!(reps.len(), p);

    let local = max_matching(&g.induced(t).complement());
    let m: Vec<(usize, usize)> = local.edges().iter().map(|&(i, j)| edge(t[i], t[j])).collect();
    let covered: BTreeSet<usize> = m.iter().flat_map(|&(a, b)| [a, b]).collect();
    let u: Vec<usize> = t.iter().copied().filter(|v| !covered.contains(v)).collect();

    if u.is_empty() {
        let join = TJoin::from_edges(m);
        let join = rewire_tjoin_for_connectivity(g, &join).expect("matching lies in the complement");
        return (splice_components(g, join.edges()), vec![]);
    }

    let (u1, u2) = (u[0], u[1]);
    if u.len() >= 4 {
        let pairs: Vec<_> = u.chunks(2).map(|c| edge(c[0], c[1])).collect();
        if p == 0 {
            return (m, pairs);
        }
        let mut a = m;
        a.extend(chain(u1, &reps, u2));
        return (a, pairs[1..].to_vec());
    }
    if p > 0 {
        let mut a = m;
        a.extend(chain(u1, &reps, u2));
        return (a, vec![]);
    }
    let h = g.edited(&m, &[]);
    if !h.bridges().contains(&edge(u1, u2)) {
        return (m, vec![edge(u1, u2)]);
    }

    // u1u2 is a bridge of G + M; put M on u1's side
    let split = h.edited(&[], &[edge(u1, u2)]).components();
    let (u1, u2) = match m.first() {
        Some(&(a, _)) if split.same(a, u2) => (u2, u1),
        _ => (u1, u2),
    };
    let mate: std::collections::BTreeMap<usize, usize> =
        m.iter().flat_map(|&(a, b)| [(a, b), (b, a)]).collect();
    let g_bridges = g.bridges();
    let x = t
        .iter()
        .copied()
        .find(|&x| x != u1 && x != u2 && g.has_edge(u1, x) && !g_bridges.contains(&edge(u1, x)))
        .expect("otherwise the star case applies");
    let y = mate[&x];
    let mut a: Vec<_> = m.into_iter().filter(|&e| e != edge(x, y)).collect();
    a.push(edge(y, u2));
    (a, vec![edge(u1, x)])
}

/// Degree-parity editing without the connectivity requirement: the optimum
/// is the size of a minimum T-join in the operation graph.
pub fn solve_dpe(inst: &ParityInstance, s: OperationSet) -> SolveOutcome {
    let g = inst.graph();
    let counts = parity_counts(inst);
    let budget = inst.budget();
    let gs = build_gs(g, s);
    match min_t_join(gs.base(), &counts.deficient) {
        None => SolveOutcome::no_instance(counts, None, budget),
        Some(f) => {
            let (d, a): (Vec<_>, Vec<_>) = f.edges().iter().partition(|&&(u, v)| g.has_edge(u, v));
            SolveOutcome::solved(f.len(), EditSolution::new(a, d), counts, Some(f.len()), budget)
        }
    }
}
