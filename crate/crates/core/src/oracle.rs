//! Exhaustive reference solvers for tiny instances.
//!
//! None of this shares code with the solvers beyond the graph types. Edits
//! are enumerated as bitmasks over a candidate universe of vertex pairs; an
//! addition of a non-edge and a deletion of an edge both toggle the pair,
//! so the edited graph is the instance graph XOR the chosen set.
//!
//! The `*_table` variants sweep every edit set once and index the best
//! size by the resulting degree-parity (or balance) vector, which makes
//! sweeps over all targets on one graph cheap.

use crate::fjoin::DirectedOperationGraph;
use crate::graph::{Digraph, Graph};
use crate::instance::{BalanceInstance, OperationSet, ParityInstance};
use crate::matching::WeightedCompleteGraph;

/// Largest edit size the per-instance oracles will try.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct OracleBudget {
    pub kmax: usize,
}

impl OracleBudget {
    /// `n + n/2 + 4`, above every closed-form parity optimum on `n`
    /// vertices. Balance targets can need more; see [`Self::unbounded`].
    pub fn for_vertices(n: usize) -> Self {
        OracleBudget { kmax: n + n / 2 + 4 }
    }

    /// Searches the whole candidate universe.
    pub fn unbounded() -> Self {
        OracleBudget { kmax: usize::MAX }
    }
}

/// Next integer with the same number of set bits (Gosper's hack).
fn next_same_popcount(x: u64) -> u64 {
    let c = x & x.wrapping_neg();
    let r = x + c;
    (((r ^ x) >> 2) / c) | r
}

/// Calls `visit` on every `bits`-bit mask with exactly `k` bits set, in
/// increasing order, until it returns `true`.
fn any_subset_of_size(bits: usize, k: usize, mut visit: impl FnMut(u64) -> bool) -> bool {
    assert!(bits < 64);
    if k > bits {
        return false;
    }
    if k == 0 {
        return visit(0);
    }
    let limit = 1u64 << bits;
    let mut x = (1u64 << k) - 1;
    while x < limit {
        if visit(x) {
            return true;
        }
        x = next_same_popcount(x);
    }
    false
}

/// Weak connectivity from symmetric adjacency bitmasks.
fn masks_connected(adj: &[u32]) -> bool {
    let n = adj.len();
    if n <= 1 {
        return true;
    }
    let all = if n == 32 { u32::MAX } else { (1u32 << n) - 1 };
    let mut seen = 1u32;
    let mut frontier = 1u32;
    while frontier != 0 {
        let mut next = 0;
        let mut f = frontier;
        while f != 0 {
            let v = f.trailing_zeros() as usize;
            f &= f - 1;
            next |= adj[v];
        }
        frontier = next & !seen;
        seen |= next;
    }
    seen == all
}

/// Candidate pairs for undirected edits: non-edges, plus edges when
/// deletion is allowed.
fn undirected_universe(g: &Graph, s: OperationSet) -> Vec<(usize, usize)> {
    let n = g.n();
    (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .filter(|&(u, v)| !g.has_edge(u, v) || s.allows_deletion())
        .collect()
}

fn directed_universe(g: &Digraph, s: OperationSet) -> Vec<(usize, usize)> {
    let n = g.n();
    (0..n)
        .flat_map(|u| (0..n).map(move |v| (u, v)))
        .filter(|&(u, v)| u != v && (!g.has_arc(u, v) || s.allows_deletion()))
        .collect()
}

fn graph_masks(g: &Graph) -> Vec<u32> {
    (0..g.n())
        .map(|v| g.neighbors(v).iter().fold(0u32, |m, &w| m | 1 << w))
        .collect()
}

/// Undirected state after toggling a subset of the universe.
struct ParityState {
    adj: Vec<u32>,
    parity: u32,
}

impl ParityState {
    fn new(g: &Graph) -> Self {
        let parity = (0..g.n()).fold(0u32, |m, v| m | (((g.degree(v) % 2) as u32) << v));
        ParityState {
            adj: graph_masks(g),
            parity,
        }
    }

    fn toggle(&mut self, (u, v): (usize, usize)) {
        self.adj[u] ^= 1 << v;
        self.adj[v] ^= 1 << u;
        self.parity ^= (1 << u) | (1 << v);
    }
}

fn parity_target(inst: &ParityInstance) -> u32 {
    inst.delta()
        .iter()
        .enumerate()
        .fold(0u32, |m, (v, &d)| m | ((d as u32) << v))
}

fn parity_search(inst: &ParityInstance, s: OperationSet, b: OracleBudget, connected: bool) -> Option<usize> {
    let g = inst.graph();
    assert!(g.n() <= 32, "oracle is for tiny graphs");
    let universe = undirected_universe(g, s);
    let target = parity_target(inst);
    let base = ParityState::new(g);
    (0..=b.kmax.min(universe.len())).find(|&k| {
        any_subset_of_size(universe.len(), k, |mask| {
            let mut st = ParityState {
                adj: base.adj.clone(),
                parity: base.parity,
            };
            let mut m = mask;
            while m != 0 {
                st.toggle(universe[m.trailing_zeros() as usize]);
                m &= m - 1;
            }
            st.parity == target && (!connected || masks_connected(&st.adj))
        })
    })
}

/// Smallest number of edits from `s` giving a connected graph with the
/// target parities, if at most `b.kmax`.
pub fn oracle_cdpe(inst: &ParityInstance, s: OperationSet, b: OracleBudget) -> Option<usize> {
    parity_search(inst, s, b, true)
}

/// As [`oracle_cdpe`] without the connectivity requirement.
pub fn oracle_dpe(inst: &ParityInstance, s: OperationSet, b: OracleBudget) -> Option<usize> {
    parity_search(inst, s, b, false)
}

/// Best edit size for every parity target on one graph: entry `mask` is
/// the optimum for `delta(v) = (mask >> v) & 1`.
pub fn parity_table(g: &Graph, s: OperationSet, connected: bool) -> Vec<Option<usize>> {
    let n = g.n();
    assert!(n <= 16, "table is exponential in n");
    let universe = undirected_universe(g, s);
    assert!(universe.len() < 32);
    let mut best = vec![None::<usize>; 1 << n];
    let mut st = ParityState::new(g);
    // Gray-code walk: one toggle per step
    for i in 0u64..(1u64 << universe.len()) {
        if i > 0 {
            st.toggle(universe[i.trailing_zeros() as usize]);
        }
        let gray = i ^ (i >> 1);
        let size = gray.count_ones() as usize;
        let slot = &mut best[st.parity as usize];
        if slot.is_none_or(|b| size < b) && (!connected || masks_connected(&st.adj)) {
            *slot = Some(size);
        }
    }
    best
}

/// Directed state after toggling a subset of ordered pairs.
struct BalanceState {
    out: Vec<u32>,
    inn: Vec<u32>,
    balance: Vec<i64>,
}

impl BalanceState {
    fn new(g: &Digraph) -> Self {
        let n = g.n();
        let out = (0..n)
            .map(|v| g.out_neighbors(v).iter().fold(0u32, |m, &w| m | 1 << w))
            .collect();
        let inn = (0..n)
            .map(|v| g.in_neighbors(v).iter().fold(0u32, |m, &w| m | 1 << w))
            .collect();
        BalanceState {
            out,
            inn,
            balance: (0..n).map(|v| g.balance(v)).collect(),
        }
    }

    fn toggle(&mut self, (u, v): (usize, usize)) {
        let sign = if self.out[u] >> v & 1 == 1 { -1 } else { 1 };
        self.out[u] ^= 1 << v;
        self.inn[v] ^= 1 << u;
        self.balance[u] += sign;
        self.balance[v] -= sign;
    }

    fn weakly_connected(&self) -> bool {
        let adj: Vec<u32> = self.out.iter().zip(&self.inn).map(|(o, i)| o | i).collect();
        masks_connected(&adj)
    }
}

fn balance_search(inst: &BalanceInstance, s: OperationSet, b: OracleBudget, connected: bool) -> Option<usize> {
    let g = inst.digraph();
    assert!(g.n() <= 8, "oracle is for tiny digraphs");
    let universe = directed_universe(g, s);
    let base = BalanceState::new(g);
    (0..=b.kmax.min(universe.len())).find(|&k| {
        any_subset_of_size(universe.len(), k, |mask| {
            let mut st = BalanceState {
                out: base.out.clone(),
                inn: base.inn.clone(),
                balance: base.balance.clone(),
            };
            let mut m = mask;
            while m != 0 {
                st.toggle(universe[m.trailing_zeros() as usize]);
                m &= m - 1;
            }
            st.balance == inst.delta() && (!connected || st.weakly_connected())
        })
    })
}

/// Smallest number of arc edits from `s` giving a weakly connected digraph
/// with the target balances, if at most `b.kmax`.
pub fn oracle_cdbe(inst: &BalanceInstance, s: OperationSet, b: OracleBudget) -> Option<usize> {
    balance_search(inst, s, b, true)
}

/// As [`oracle_cdbe`] without the connectivity requirement.
pub fn oracle_dbe(inst: &BalanceInstance, s: OperationSet, b: OracleBudget) -> Option<usize> {
    balance_search(inst, s, b, false)
}

/// Best edit size per balance vector over all edit sets of one digraph.
#[derive(Debug, Clone)]
pub struct BalanceTable {
    n: usize,
    radius: i64,
    best: Vec<Option<usize>>,
}

impl BalanceTable {
    fn index(&self, balance: &[i64]) -> Option<usize> {
        let width = 2 * self.radius + 1;
        let mut idx = 0usize;
        for &b in balance.iter().rev() {
            if b.abs() > self.radius {
                return None;
            }
            idx = idx * width as usize + (b + self.radius) as usize;
        }
        Some(idx)
    }

    fn with_radius(n: usize, radius: i64) -> Self {
        let width = (2 * radius + 1) as usize;
        BalanceTable {
            n,
            radius,
            best: vec![None; width.pow(n as u32)],
        }
    }

    fn offer(&mut self, balance: &[i64], size: usize) {
        if let Some(i) = self.index(balance) {
            if self.best[i].is_none_or(|b| size < b) {
                self.best[i] = Some(size);
            }
        }
    }

    /// Optimum for this balance vector, `None` if unreachable.
    pub fn lookup(&self, balance: &[i64]) -> Option<usize> {
        assert_eq!(balance.len(), self.n);
        self.index(balance).and_then(|i| self.best[i])
    }
}

pub fn balance_table(g: &Digraph, s: OperationSet, connected: bool) -> BalanceTable {
    let n = g.n();
    assert!(n <= 5, "table is exponential in n");
    let universe = directed_universe(g, s);
    let mut table = BalanceTable::with_radius(n, n.saturating_sub(1) as i64);
    let mut st = BalanceState::new(g);
    for i in 0u64..(1u64 << universe.len()) {
        if i > 0 {
            st.toggle(universe[i.trailing_zeros() as usize]);
        }
        let size = (i ^ (i >> 1)).count_ones() as usize;
        if !connected || st.weakly_connected() {
            table.offer(&st.balance, size);
        }
    }
    table
}

/// Minimum T-join sizes of one graph for every odd set: entry `mask` is the
/// smallest edge subset whose odd-degree vertices are exactly `mask`.
pub fn t_join_table(gs: &Graph) -> Vec<Option<usize>> {
    let n = gs.n();
    assert!(n <= 16);
    let edges: Vec<(usize, usize)> = gs.edges().collect();
    assert!(edges.len() <= 24, "enumeration over all edge subsets");
    let mut best = vec![None::<usize>; 1 << n];
    let mut odd = 0u32;
    for i in 0u64..(1u64 << edges.len()) {
        if i > 0 {
            let (u, v) = edges[i.trailing_zeros() as usize];
            odd ^= (1 << u) | (1 << v);
        }
        let size = (i ^ (i >> 1)).count_ones() as usize;
        let slot = &mut best[odd as usize];
        if slot.is_none_or(|b| size < b) {
            *slot = Some(size);
        }
    }
    best
}

/// Size of a minimum T-join of `gs` by full enumeration of edge subsets.
pub fn oracle_min_t_join(gs: &Graph, t: &[usize]) -> Option<usize> {
    let mask = t.iter().fold(0usize, |m, &v| m | 1 << v);
    t_join_table(gs)[mask]
}

/// Minimum directed f-join sizes by net balance, over every sub-multiset
/// of the operation multigraph.
pub fn f_join_table(gs: &DirectedOperationGraph) -> BalanceTable {
    let n = gs.n();
    assert!(n <= 5);
    let arcs: Vec<((usize, usize), u8)> = gs.arcs().collect();
    let mut table = BalanceTable::with_radius(n, 2 * n.saturating_sub(1) as i64);
    let mut counts = vec![0u8; arcs.len()];
    let mut balance = vec![0i64; n];
    let mut size = 0usize;
    loop {
        table.offer(&balance, size);
        // mixed-radix increment
        let mut i = 0;
        loop {
            if i == arcs.len() {
                return table;
            }
            let ((u, v), mult) = arcs[i];
            if counts[i] < mult {
                counts[i] += 1;
                balance[u] += 1;
                balance[v] -= 1;
                size += 1;
                break;
            }
            let c = counts[i] as i64;
            balance[u] -= c;
            balance[v] += c;
            size -= counts[i] as usize;
            counts[i] = 0;
            i += 1;
        }
    }
}

/// Size of a minimum directed f-join by enumeration.
pub fn oracle_min_f_join(gs: &DirectedOperationGraph, f: &[i64]) -> Option<usize> {
    f_join_table(gs).lookup(f)
}

/// Maximum matching size by dynamic programming over vertex subsets.
pub fn oracle_max_matching_size(g: &Graph) -> usize {
    let n = g.n();
    assert!(n <= 20);
    let adj = graph_masks(g);
    let mut dp = vec![0u8; 1 << n];
    for set in 1usize..1 << n {
        let i = set.trailing_zeros() as usize;
        let rest = set & !(1 << i);
        let mut best = dp[rest];
        let mut cand = adj[i] as usize & rest;
        while cand != 0 {
            let j = cand.trailing_zeros() as usize;
            cand &= cand - 1;
            best = best.max(1 + dp[rest & !(1 << j)]);
        }
        dp[set] = best;
    }
    dp[(1 << n) - 1] as usize
}

/// Minimum perfect matching cost avoiding forbidden pairs, by dynamic
/// programming over vertex subsets.
pub fn oracle_min_perfect_matching_cost(w: &WeightedCompleteGraph) -> Option<u64> {
    let k = w.k();
    assert!(k <= 20);
    let mut dp = vec![None::<u64>; 1 << k];
    dp[0] = Some(0);
    for set in 1usize..1 << k {
        if set.count_ones() % 2 == 1 {
            continue;
        }
        let i = set.trailing_zeros() as usize;
        let rest = set & !(1 << i);
        let mut best = None;
        let mut cand = rest;
        while cand != 0 {
            let j = cand.trailing_zeros() as usize;
            cand &= cand - 1;
            if let (Some(x), Some(sub)) = (w.weight(i, j), dp[rest & !(1 << j)]) {
                if best.is_none_or(|b| x + sub < b) {
                    best = Some(x + sub);
                }
            }
        }
        dp[set] = best;
    }
    dp[(1 << k) - 1]
}
