//! Minimum directed f-joins in the directed operation multigraph.
//!
//! The join is computed as a min-cost flow: a super-source feeds every
//! vertex with positive excess, every vertex with negative excess drains to
//! a super-sink, and each arc copy of the operation multigraph is a unit of
//! capacity at cost one. Successive shortest paths with Dijkstra and vertex
//! potentials give `O(t (m + n) log n)` for total absolute excess `t`.

use std::cmp::Reverse;
use std::collections::BinaryHeap;

use crate::graph::Digraph;
use crate::instance::OperationSet;

/// What a copy of an arc `(u, v)` in the operation multigraph stands for.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Provenance {
    /// Add the missing arc `(u, v)`.
    Add,
    /// Delete the existing arc `(v, u)`; same effect on the balances.
    DeleteReverse,
}

/// Operation multigraph: at most two copies of any arc, and a doubled arc
/// never has its reverse present.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DirectedOperationGraph {
    n: usize,
    add: Vec<bool>,
    del: Vec<bool>,
}

impl DirectedOperationGraph {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn multiplicity(&self, u: usize, v: usize) -> u8 {
        let i = u * self.n + v;
        self.add[i] as u8 + self.del[i] as u8
    }

    /// Provenance of every copy of `(u, v)`, addition copy first.
    pub fn provenance(&self, u: usize, v: usize) -> Vec<Provenance> {
        let i = u * self.n + v;
        let mut out = Vec::with_capacity(2);
        if self.add[i] {
            out.push(Provenance::Add);
        }
        if self.del[i] {
            out.push(Provenance::DeleteReverse);
        }
        out
    }

    /// Distinct arcs with their multiplicities, in lexicographic order.
    pub fn arcs(&self) -> impl Iterator<Item = ((usize, usize), u8)> + '_ {
        let n = self.n;
        (0..n * n).filter_map(move |i| {
            let c = self.add[i] as u8 + self.del[i] as u8;
            (c > 0).then_some(((i / n, i % n), c))
        })
    }

    /// Total number of arc copies.
    pub fn size(&self) -> usize {
        self.arcs().map(|(_, c)| c as usize).sum()
    }
}

pub fn build_gs_directed(g: &Digraph, s: OperationSet) -> DirectedOperationGraph {
    let n = g.n();
    let mut add = vec![false; n * n];
    let mut del = vec![false; n * n];
    for u in 0..n {
        for v in 0..n {
            if u == v {
                continue;
            }
            add[u * n + v] = !g.has_arc(u, v);
            del[u * n + v] = s.allows_deletion() && g.has_arc(v, u);
        }
    }
    DirectedOperationGraph { n, add, del }
}

/// A multiset of arcs whose net out-degree at every vertex equals the
/// prescribed excess, together with a decomposition into arc-disjoint
/// paths from positive- to negative-excess vertices.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct DirectedFJoin {
    arcs: Vec<(usize, usize)>,
    paths: Vec<Vec<usize>>,
}

impl DirectedFJoin {
    /// Wraps an arc multiset on `n` vertices, computing its decomposition.
    pub fn from_arcs(n: usize, arcs: impl IntoIterator<Item = (usize, usize)>) -> Self {
        let mut arcs: Vec<_> = arcs.into_iter().collect();
        arcs.sort_unstable();
        let paths = decompose(n, &arcs, &net_balance(n, &arcs));
        DirectedFJoin { arcs, paths }
    }

    /// Sorted arc multiset; a doubled arc appears twice.
    pub fn arcs(&self) -> &[(usize, usize)] {
        &self.arcs
    }

    /// Each path as its vertex sequence.
    pub fn paths(&self) -> &[Vec<usize>] {
        &self.paths
    }

    pub fn len(&self) -> usize {
        self.arcs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.arcs.is_empty()
    }
}

/// Out-degree minus in-degree of each vertex in the arc multiset.
pub fn net_balance(n: usize, arcs: &[(usize, usize)]) -> Vec<i64> {
    let mut b = vec![0i64; n];
    for &(u, v) in arcs {
        b[u] += 1;
        b[v] -= 1;
    }
    b
}

struct FlowArc {
    to: usize,
    cap: i64,
    cost: i64,
}

/// Residual network; arc `2i` is forward, `2i + 1` its reverse.
struct Network {
    arcs: Vec<FlowArc>,
    out: Vec<Vec<usize>>,
}

impl Network {
    fn new(nodes: usize) -> Self {
        Network {
            arcs: Vec::new(),
            out: vec![Vec::new(); nodes],
        }
    }

    fn link(&mut self, from: usize, to: usize, cap: i64, cost: i64) -> usize {
        let id = self.arcs.len();
        self.arcs.push(FlowArc { to, cap, cost });
        self.arcs.push(FlowArc {
            to: from,
            cap: 0,
            cost: -cost,
        });
        self.out[from].push(id);
        self.out[to].push(id + 1);
        id
    }

    fn flow_on(&self, id: usize) -> i64 {
        self.arcs[id + 1].cap
    }

    /// Pushes as much flow as possible from `s` to `t` along successively
    /// cheapest paths; returns the total flow.
    fn min_cost_max_flow(&mut self, s: usize, t: usize) -> i64 {
        let nodes = self.out.len();
        // all initial costs are non-negative, so zero potentials are valid
        let mut potential = vec![0i64; nodes];
        let mut total = 0;
        loop {
            let mut dist = vec![i64::MAX; nodes];
            let mut via = vec![usize::MAX; nodes];
            dist[s] = 0;
            let mut heap = BinaryHeap::from([Reverse((0i64, s))]);
            while let Some(Reverse((d, v))) = heap.pop() {
                if d > dist[v] {
                    continue;
                }
                for &id in &self.out[v] {
                    let a = &self.arcs[id];
                    if a.cap <= 0 {
                        continue;
                    }
                    let nd = d + a.cost + potential[v] - potential[a.to];
                    if nd < dist[a.to] {
                        dist[a.to] = nd;
                        via[a.to] = id;
                        heap.push(Reverse((nd, a.to)));
                    }
                }
            }
            if dist[t] == i64::MAX {
                return total;
            }
            for v in 0..nodes {
                if dist[v] != i64::MAX {
                    potential[v] += dist[v];
                }
            }
            let mut push = i64::MAX;
            let mut v = t;
            while v != s {
                let id = via[v];
                push = push.min(self.arcs[id].cap);
                v = self.arcs[id ^ 1].to;
            }
            let mut v = t;
            while v != s {
                let id = via[v];
                self.arcs[id].cap -= push;
                self.arcs[id ^ 1].cap += push;
                v = self.arcs[id ^ 1].to;
            }
            total += push;
        }
    }
}

/// Splits an arc multiset into walks, each starting at a vertex with
/// remaining surplus and following the smallest-index remaining arc. On an
/// acyclic multiset these are exactly the source-to-sink paths; anything
/// left over (cycles) is emitted as closed walks.
fn decompose(n: usize, arcs: &[(usize, usize)], excess: &[i64]) -> Vec<Vec<usize>> {
    let mut remaining = vec![0u32; n * n];
    for &(u, v) in arcs {
        remaining[u * n + v] += 1;
    }
    let mut surplus: Vec<i64> = excess.iter().map(|&f| f.max(0)).collect();
    let mut paths = Vec::new();
    loop {
        let start = match (0..n).find(|&v| surplus[v] > 0) {
            Some(v) => {
                surplus[v] -= 1;
                v
            }
            None => match (0..n * n).find(|&i| remaining[i] > 0) {
                Some(i) => i / n,
                None => return paths,
            },
        };
        let mut path = vec![start];
        let mut cur = start;
        while let Some(next) = (0..n).find(|&w| remaining[cur * n + w] > 0) {
            remaining[cur * n + next] -= 1;
            path.push(next);
            cur = next;
        }
        if path.len() > 1 {
            paths.push(path);
        }
    }
}

/// A minimum directed f-join for the per-vertex excess `f` (zero off the
/// deficient set), or `None` if none exists. `f` must have one entry per
/// vertex of `gs`.
pub fn min_f_join(gs: &DirectedOperationGraph, f: &[i64]) -> Option<DirectedFJoin> {
    let n = gs.n();
    assert_eq!(f.len(), n, "excess needs one entry per vertex");
    if f.iter().sum::<i64>() != 0 {
        return None;
    }
    let demand: i64 = f.iter().filter(|&&x| x > 0).sum();
    if demand == 0 {
        return Some(DirectedFJoin::default());
    }
    let (source, sink) = (n, n + 1);
    let mut net = Network::new(n + 2);
    for (v, &x) in f.iter().enumerate() {
        if x > 0 {
            net.link(source, v, x, 0);
        } else if x < 0 {
            net.link(v, sink, -x, 0);
        }
    }
    let ids: Vec<((usize, usize), usize)> = gs
        .arcs()
        .map(|((u, v), c)| ((u, v), net.link(u, v, c as i64, 1)))
        .collect();
    if net.min_cost_max_flow(source, sink) != demand {
        return None;
    }
    let mut arcs = Vec::new();
    for ((u, v), id) in ids {
        for _ in 0..net.flow_on(id) {
            arcs.push((u, v));
        }
    }
    let paths = decompose(n, &arcs, f);
    Some(DirectedFJoin { arcs, paths })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn operation_multigraph_examples() {
        let arc = Digraph::from_arcs(2, [(0, 1)]).unwrap();
        let gs = build_gs_directed(&arc, OperationSet::Add);
        assert_eq!(gs.arcs().collect::<Vec<_>>(), vec![((1, 0), 1)]);
        assert_eq!(gs.provenance(1, 0), vec![Provenance::Add]);

        let gs = build_gs_directed(&arc, OperationSet::AddDelete);
        assert_eq!(gs.arcs().collect::<Vec<_>>(), vec![((1, 0), 2)]);
        assert_eq!(
            gs.provenance(1, 0),
            vec![Provenance::Add, Provenance::DeleteReverse]
        );

        let two_cycle = Digraph::from_arcs(2, [(0, 1), (1, 0)]).unwrap();
        let gs = build_gs_directed(&two_cycle, OperationSet::AddDelete);
        assert_eq!(gs.arcs().collect::<Vec<_>>(), vec![((0, 1), 1), ((1, 0), 1)]);
        assert_eq!(gs.provenance(0, 1), vec![Provenance::DeleteReverse]);
        assert_eq!(gs.provenance(1, 0), vec![Provenance::DeleteReverse]);
    }

    #[test]
    fn doubled_arcs_exclude_reverse() {
        let g = Digraph::from_arcs(4, [(0, 1), (1, 2), (2, 1), (3, 0)]).unwrap();
        let gs = build_gs_directed(&g, OperationSet::AddDelete);
        for ((u, v), c) in gs.arcs() {
            assert!(c <= 2);
            if c == 2 {
                assert_eq!(gs.multiplicity(v, u), 0);
            }
        }
    }

    #[test]
    fn join_examples() {
        let arc = Digraph::from_arcs(2, [(0, 1)]).unwrap();
        let gs = build_gs_directed(&arc, OperationSet::Add);
        assert!(min_f_join(&gs, &[0, 0]).unwrap().is_empty());

        let j = min_f_join(&gs, &[-1, 1]).unwrap();
        assert_eq!(j.arcs(), &[(1, 0)]);
        assert_eq!(j.paths(), &[vec![1, 0]]);

        // operation graph with only (a,b), (b,c): complete digraph minus those
        let g = Digraph::from_arcs(3, [(1, 0), (2, 1), (0, 2), (2, 0)]).unwrap();
        let gs = build_gs_directed(&g, OperationSet::Add);
        assert_eq!(
            gs.arcs().map(|(a, _)| a).collect::<Vec<_>>(),
            vec![(0, 1), (1, 2)]
        );
        let j = min_f_join(&gs, &[1, 0, -1]).unwrap();
        assert_eq!(j.arcs(), &[(0, 1), (1, 2)]);
        assert_eq!(j.paths(), &[vec![0, 1, 2]]);
    }

    #[test]
    fn join_nonexistence() {
        let arc = Digraph::from_arcs(2, [(0, 1)]).unwrap();
        let gs = build_gs_directed(&arc, OperationSet::Add);
        assert!(min_f_join(&gs, &[1, 0]).is_none());
        // (0,1) exists so only (1,0) can be added
        assert!(min_f_join(&gs, &[1, -1]).is_none());
    }

    #[test]
    fn doubled_arc_carries_two_units() {
        let arc = Digraph::from_arcs(2, [(0, 1)]).unwrap();
        let gs = build_gs_directed(&arc, OperationSet::AddDelete);
        let j = min_f_join(&gs, &[-2, 2]).unwrap();
        assert_eq!(j.arcs(), &[(1, 0), (1, 0)]);
        assert_eq!(j.paths().len(), 2);
    }
}
