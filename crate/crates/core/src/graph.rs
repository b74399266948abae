//! Simple undirected graphs and simple digraphs on dense vertex indices.
//!
//! Both types keep an adjacency matrix for constant-time membership tests
//! alongside sorted neighbour lists, and are immutable once built. Edits
//! produce a fresh value.

use std::collections::{BTreeSet, VecDeque};

use crate::error::{Error, Result};

/// Normalises an unordered pair so that the smaller endpoint comes first.
#[inline]
pub fn edge(u: usize, v: usize) -> (usize, usize) {
    if u <= v {
        (u, v)
    } else {
        (v, u)
    }
}

/// Component labelling of a graph: `label[v]` is the index of the
/// component containing `v`, components numbered by their smallest vertex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Components {
    pub label: Vec<usize>,
    pub count: usize,
}

impl Components {
    pub fn same(&self, u: usize, v: usize) -> bool {
        self.label[u] == self.label[v]
    }

    /// Vertex sets of the components, each sorted, in label order.
    pub fn sets(&self) -> Vec<Vec<usize>> {
        let mut sets = vec![Vec::new(); self.count];
        for (v, &c) in self.label.iter().enumerate() {
            sets[c].push(v);
        }
        sets
    }

    /// Smallest vertex of every component, in label order.
    pub fn representatives(&self) -> Vec<usize> {
        let mut reps = vec![usize::MAX; self.count];
        for (v, &c) in self.label.iter().enumerate() {
            if reps[c] == usize::MAX {
                reps[c] = v;
            }
        }
        reps
    }
}

fn label_components(n: usize, neighbors: impl Fn(usize) -> Vec<usize>) -> Components {
    let mut label = vec![usize::MAX; n];
    let mut count = 0;
    let mut queue = VecDeque::new();
    for s in 0..n {
        if label[s] != usize::MAX {
            continue;
        }
        label[s] = count;
        queue.push_back(s);
        while let Some(v) = queue.pop_front() {
            for w in neighbors(v) {
                if label[w] == usize::MAX {
                    label[w] = count;
                    queue.push_back(w);
                }
            }
        }
        count += 1;
    }
    Components { label, count }
}

/// A simple undirected graph on vertices `0..n`.
#[derive(Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    m: usize,
    adj: Vec<bool>,
    nbrs: Vec<Vec<usize>>,
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("Graph")
            .field("n", &self.n)
            .field("edges", &self.edges().collect::<Vec<_>>())
            .finish()
    }
}

impl Graph {
    /// The edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Self {
        Graph {
            n,
            m: 0,
            adj: vec![false; n * n],
            nbrs: vec![Vec::new(); n],
        }
    }

    fn from_matrix(n: usize, adj: Vec<bool>) -> Self {
        let mut nbrs = vec![Vec::new(); n];
        let mut m = 0;
        for u in 0..n {
            for v in 0..n {
                if adj[u * n + v] {
                    nbrs[u].push(v);
                    if u < v {
                        m += 1;
                    }
                }
            }
        }
        Graph { n, m, adj, nbrs }
    }

    /// Builds a graph, rejecting loops, duplicates and out-of-range endpoints.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut adj = vec![false; n * n];
        for (u, v) in edges {
            check_vertex(u, n)?;
            check_vertex(v, n)?;
            if u == v {
                return Err(Error::Loop(u));
            }
            if adj[u * n + v] {
                let (a, b) = edge(u, v);
                return Err(Error::DuplicateEdge(a, b));
            }
            adj[u * n + v] = true;
            adj[v * n + u] = true;
        }
        Ok(Self::from_matrix(n, adj))
    }

    pub fn complete(n: usize) -> Self {
        let adj = (0..n * n).map(|i| i / n != i % n).collect();
        Self::from_matrix(n, adj)
    }

    /// Path `0 - 1 - ... - (n-1)`.
    pub fn path(n: usize) -> Self {
        Self::from_edges(n, (1..n).map(|i| (i - 1, i))).expect("path is simple")
    }

    /// Cycle on `n >= 3` vertices.
    pub fn cycle(n: usize) -> Self {
        assert!(n >= 3, "a simple cycle needs at least three vertices");
        Self::from_edges(n, (0..n).map(|i| (i, (i + 1) % n))).expect("cycle is simple")
    }

    /// Disjoint union; the vertices of `other` are shifted past those of `self`.
    pub fn disjoint_union(&self, other: &Graph) -> Self {
        let shift = self.n;
        let edges = self
            .edges()
            .chain(other.edges().map(|(u, v)| (u + shift, v + shift)));
        Self::from_edges(self.n + other.n, edges).expect("union of simple graphs is simple")
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.m
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u * self.n + v]
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.nbrs[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.nbrs[v].len()
    }

    /// Edges as normalised pairs `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |u| {
            self.nbrs[u]
                .iter()
                .copied()
                .filter(move |&v| v > u)
                .map(move |v| (u, v))
        })
    }

    pub fn complement(&self) -> Self {
        let n = self.n;
        let adj = (0..n * n)
            .map(|i| i / n != i % n && !self.adj[i])
            .collect();
        Self::from_matrix(n, adj)
    }

    /// `true` when every pair of distinct vertices is adjacent.
    pub fn is_complete(&self) -> bool {
        self.m == self.n * self.n.saturating_sub(1) / 2
    }

    /// Subgraph induced by `vertices`, relabelled to `0..vertices.len()` in
    /// the given order.
    pub fn induced(&self, vertices: &[usize]) -> Self {
        let k = vertices.len();
        let mut adj = vec![false; k * k];
        for (i, &u) in vertices.iter().enumerate() {
            for (j, &v) in vertices.iter().enumerate() {
                adj[i * k + j] = i != j && self.has_edge(u, v);
            }
        }
        Self::from_matrix(k, adj)
    }

    /// `G + additions - deletions`, ignoring additions already present and
    /// deletions that are absent (the usual set semantics).
    pub fn edited<'a, A, D>(&self, additions: A, deletions: D) -> Self
    where
        A: IntoIterator<Item = &'a (usize, usize)>,
        D: IntoIterator<Item = &'a (usize, usize)>,
    {
        let n = self.n;
        let mut adj = self.adj.clone();
        for &(u, v) in deletions {
            adj[u * n + v] = false;
            adj[v * n + u] = false;
        }
        for &(u, v) in additions {
            if u != v {
                adj[u * n + v] = true;
                adj[v * n + u] = true;
            }
        }
        Self::from_matrix(n, adj)
    }

    pub fn components(&self) -> Components {
        label_components(self.n, |v| self.nbrs[v].clone())
    }

    pub fn is_connected(&self) -> bool {
        self.components().count <= 1
    }

    /// All bridges as normalised pairs, found by one lowpoint DFS per tree.
    pub fn bridges(&self) -> BTreeSet<(usize, usize)> {
        const UNSEEN: usize = usize::MAX;
        let n = self.n;
        let mut disc = vec![UNSEEN; n];
        let mut low = vec![0; n];
        let mut clock = 0;
        let mut out = BTreeSet::new();
        // (vertex, parent, next neighbour position)
        let mut stack: Vec<(usize, usize, usize)> = Vec::new();
        for root in 0..n {
            if disc[root] != UNSEEN {
                continue;
            }
            disc[root] = clock;
            low[root] = clock;
            clock += 1;
            stack.push((root, UNSEEN, 0));
            while let Some(top) = stack.len().checked_sub(1) {
                let (v, parent, pos) = stack[top];
                if let Some(&w) = self.nbrs[v].get(pos) {
                    stack[top].2 += 1;
                    if w == parent {
                        continue;
                    }
                    if disc[w] == UNSEEN {
                        disc[w] = clock;
                        low[w] = clock;
                        clock += 1;
                        stack.push((w, v, 0));
                    } else {
                        low[v] = low[v].min(disc[w]);
                    }
                } else {
                    stack.pop();
                    if parent != UNSEEN {
                        low[parent] = low[parent].min(low[v]);
                        if low[v] > disc[parent] {
                            out.insert(edge(parent, v));
                        }
                    }
                }
            }
        }
        out
    }
}

/// A simple digraph on vertices `0..n`: no loops and no parallel arcs,
/// though both `(u, v)` and `(v, u)` may be present.
#[derive(Clone, PartialEq, Eq)]
pub struct Digraph {
    n: usize,
    m: usize,
    adj: Vec<bool>,
    out: Vec<Vec<usize>>,
    inc: Vec<Vec<usize>>,
}

impl std::fmt::Debug for Digraph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("Digraph")
            .field("n", &self.n)
            .field("arcs", &self.arcs().collect::<Vec<_>>())
            .finish()
    }
}

impl Digraph {
    pub fn empty(n: usize) -> Self {
        Self::from_matrix(n, vec![false; n * n])
    }

    fn from_matrix(n: usize, adj: Vec<bool>) -> Self {
        let mut out = vec![Vec::new(); n];
        let mut inc = vec![Vec::new(); n];
        let mut m = 0;
        for u in 0..n {
            for v in 0..n {
                if adj[u * n + v] {
                    out[u].push(v);
                    inc[v].push(u);
                    m += 1;
                }
            }
        }
        Digraph { n, m, adj, out, inc }
    }

    pub fn from_arcs<I>(n: usize, arcs: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut adj = vec![false; n * n];
        for (u, v) in arcs {
            check_vertex(u, n)?;
            check_vertex(v, n)?;
            if u == v {
                return Err(Error::Loop(u));
            }
            if adj[u * n + v] {
                return Err(Error::DuplicateEdge(u, v));
            }
            adj[u * n + v] = true;
        }
        Ok(Self::from_matrix(n, adj))
    }

    /// Directed cycle `0 -> 1 -> ... -> (n-1) -> 0`, `n >= 2`.
    pub fn cycle(n: usize) -> Self {
        assert!(n >= 2);
        Self::from_arcs(n, (0..n).map(|i| (i, (i + 1) % n))).expect("cycle is simple")
    }

    pub fn disjoint_union(&self, other: &Digraph) -> Self {
        let shift = self.n;
        let arcs = self
            .arcs()
            .chain(other.arcs().map(|(u, v)| (u + shift, v + shift)));
        Self::from_arcs(self.n + other.n, arcs).expect("union of simple digraphs is simple")
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.m
    }

    #[inline]
    pub fn has_arc(&self, u: usize, v: usize) -> bool {
        self.adj[u * self.n + v]
    }

    pub fn out_neighbors(&self, v: usize) -> &[usize] {
        &self.out[v]
    }

    pub fn in_neighbors(&self, v: usize) -> &[usize] {
        &self.inc[v]
    }

    pub fn out_degree(&self, v: usize) -> usize {
        self.out[v].len()
    }

    pub fn in_degree(&self, v: usize) -> usize {
        self.inc[v].len()
    }

    /// Out-degree minus in-degree.
    pub fn balance(&self, v: usize) -> i64 {
        self.out[v].len() as i64 - self.inc[v].len() as i64
    }

    /// Arcs in lexicographic order.
    pub fn arcs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |u| self.out[u].iter().map(move |&v| (u, v)))
    }

    pub fn underlying(&self) -> Graph {
        let n = self.n;
        let adj = (0..n * n)
            .map(|i| self.adj[i] || self.adj[(i % n) * n + i / n])
            .collect();
        Graph::from_matrix(n, adj)
    }

    pub fn edited<'a, A, D>(&self, additions: A, deletions: D) -> Self
    where
        A: IntoIterator<Item = &'a (usize, usize)>,
        D: IntoIterator<Item = &'a (usize, usize)>,
    {
        let n = self.n;
        let mut adj = self.adj.clone();
        for &(u, v) in deletions {
            adj[u * n + v] = false;
        }
        for &(u, v) in additions {
            if u != v {
                adj[u * n + v] = true;
            }
        }
        Self::from_matrix(n, adj)
    }

    /// Components of the underlying graph.
    pub fn components(&self) -> Components {
        label_components(self.n, |v| {
            let mut nb = self.out[v].clone();
            nb.extend_from_slice(&self.inc[v]);
            nb
        })
    }

    pub fn is_weakly_connected(&self) -> bool {
        self.components().count <= 1
    }
}

fn check_vertex(v: usize, n: usize) -> Result<()> {
    if v >= n {
        Err(Error::VertexOutOfRange { vertex: v, n })
    } else {
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn bridges_by_removal(g: &Graph) -> BTreeSet<(usize, usize)> {
        let base = g.components().count;
        g.edges()
            .filter(|e| g.edited([], [e]).components().count > base)
            .collect()
    }

    #[test]
    fn components_of_small_graphs() {
        assert_eq!(Graph::empty(2).components().sets(), vec![vec![0], vec![1]]);
        assert_eq!(Graph::complete(3).components().sets(), vec![vec![0, 1, 2]]);
        let g = Graph::path(3).disjoint_union(&Graph::complete(2));
        let sizes: Vec<usize> = g.components().sets().iter().map(Vec::len).collect();
        assert_eq!(sizes, vec![3, 2]);
    }

    #[test]
    fn bridges_of_paths_and_cycles() {
        let p3 = Graph::path(3);
        assert_eq!(p3.bridges(), [(0, 1), (1, 2)].into_iter().collect());
        assert!(Graph::cycle(4).bridges().is_empty());
    }

    #[test]
    fn bridge_between_two_triangles() {
        let g = Graph::from_edges(6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5), (2, 3)])
            .unwrap();
        let expected = bridges_by_removal(&g);
        assert_eq!(expected, [(2, 3)].into_iter().collect());
        assert_eq!(g.bridges(), expected);
    }

    #[test]
    fn rejects_malformed_edges() {
        assert_eq!(Graph::from_edges(3, [(1, 1)]), Err(Error::Loop(1)));
        assert_eq!(
            Graph::from_edges(3, [(0, 1), (1, 0)]),
            Err(Error::DuplicateEdge(0, 1))
        );
        assert_eq!(
            Graph::from_edges(3, [(0, 3)]),
            Err(Error::VertexOutOfRange { vertex: 3, n: 3 })
        );
        assert!(Digraph::from_arcs(2, [(0, 1), (1, 0)]).is_ok());
        assert_eq!(
            Digraph::from_arcs(2, [(0, 1), (0, 1)]),
            Err(Error::DuplicateEdge(0, 1))
        );
    }

    #[test]
    fn complement_and_induced() {
        let p3 = Graph::path(3);
        assert_eq!(p3.complement().edges().collect::<Vec<_>>(), vec![(0, 2)]);
        assert_eq!(Graph::complete(3).complement().m(), 0);
        let k4 = Graph::complete(4);
        assert!(k4.induced(&[3, 1, 0]).is_complete());
    }

    #[test]
    fn digraph_balance_and_underlying() {
        let g = Digraph::from_arcs(3, [(0, 1), (1, 0), (1, 2)]).unwrap();
        assert_eq!(g.balance(1), 1);
        assert_eq!(g.balance(2), -1);
        assert_eq!(g.underlying().m(), 2);
        assert!(g.is_weakly_connected());
    }

    mod props {
        use super::*;
        use proptest::prelude::*;

        fn arb_graph(max_n: usize) -> impl Strategy<Value = Graph> {
            (1..=max_n).prop_flat_map(|n| {
                proptest::collection::vec(any::<bool>(), n * (n - 1) / 2).prop_map(move |bits| {
                    let pairs = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)));
                    Graph::from_edges(n, pairs.zip(bits).filter(|(_, b)| *b).map(|(e, _)| e))
                        .unwrap()
                })
            })
        }

        proptest! {
            #[test]
            fn components_partition_vertices(g in arb_graph(10)) {
                let sets = g.components().sets();
                let mut all: Vec<usize> = sets.concat();
                all.sort_unstable();
                prop_assert_eq!(all, (0..g.n()).collect::<Vec<_>>());
                let comps = g.components();
                for (u, v) in g.edges() {
                    prop_assert!(comps.same(u, v));
                }
            }

            #[test]
            fn bridges_match_removal(g in arb_graph(9)) {
                prop_assert_eq!(g.bridges(), bridges_by_removal(&g));
            }

            #[test]
            fn every_tree_edge_is_a_bridge(n in 2usize..30, seed in any::<u64>()) {
                // random recursive tree
                let edges: Vec<_> = (1..n).map(|v| ((seed as usize).wrapping_mul(v + 7) % v, v)).collect();
                let t = Graph::from_edges(n, edges).unwrap();
                prop_assert_eq!(t.bridges().len(), n - 1);
            }

            #[test]
            fn cycles_have_no_bridges(n in 3usize..40) {
                prop_assert!(Graph::cycle(n).bridges().is_empty());
            }
        }
    }
}
