//! Minimum T-joins in the undirected operation graph.
//!
//! Classical Edmonds-Johnson construction: BFS distances between the
//! T-vertices, a minimum-weight perfect matching on T under that metric,
//! and the symmetric difference of the matched shortest paths.

use std::collections::{BTreeSet, VecDeque};

use crate::graph::{edge, Graph};
use crate::instance::OperationSet;
use crate::matching::{min_weight_perfect_matching, WeightedCompleteGraph};

/// The graph of permitted single-edge modifications: the complement of the
/// instance graph for additions only, `K_n` when deletions are allowed too.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OperationGraph {
    base: Graph,
    mode: OperationSet,
}

impl OperationGraph {
    pub fn base(&self) -> &Graph {
        &self.base
    }

    pub fn mode(&self) -> OperationSet {
        self.mode
    }
}

pub fn build_gs(g: &Graph, s: OperationSet) -> OperationGraph {
    let base = match s {
        OperationSet::Add => g.complement(),
        OperationSet::AddDelete => Graph::complete(g.n()),
    };
    OperationGraph { base, mode: s }
}

/// An edge set whose odd-degree vertices are exactly a prescribed set.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct TJoin {
    edges: Vec<(usize, usize)>,
}

impl TJoin {
    /// Wraps normalised edges; order is canonicalised.
    pub fn from_edges(edges: impl IntoIterator<Item = (usize, usize)>) -> Self {
        let set: BTreeSet<_> = edges.into_iter().map(|(u, v)| edge(u, v)).collect();
        TJoin {
            edges: set.into_iter().collect(),
        }
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }
}

/// Vertices of odd degree in the subgraph formed by `edges`.
pub fn odd_vertices(n: usize, edges: &[(usize, usize)]) -> Vec<usize> {
    let mut odd = vec![false; n];
    for &(u, v) in edges {
        odd[u] ^= true;
        odd[v] ^= true;
    }
    (0..n).filter(|&v| odd[v]).collect()
}

/// BFS distances from `source` plus, for every reached vertex, its smallest
/// neighbour one step closer to the source.
fn bfs_tree(g: &Graph, source: usize) -> (Vec<usize>, Vec<usize>) {
    let n = g.n();
    let mut dist = vec![usize::MAX; n];
    dist[source] = 0;
    let mut queue = VecDeque::from([source]);
    while let Some(v) = queue.pop_front() {
        for &w in g.neighbors(v) {
            if dist[w] == usize::MAX {
                dist[w] = dist[v] + 1;
                queue.push_back(w);
            }
        }
    }
    let pred = (0..n)
        .map(|v| {
            if v == source || dist[v] == usize::MAX {
                usize::MAX
            } else {
                *g.neighbors(v)
                    .iter()
                    .find(|&&u| dist[u] + 1 == dist[v])
                    .expect("reached vertex has a predecessor")
            }
        })
        .collect();
    (dist, pred)
}

/// A minimum-cardinality T-join of `base`, or `None` if none exists (odd
/// `|T|`, or some component of `base` meets `T` an odd number of times).
pub fn min_t_join(base: &Graph, t: &[usize]) -> Option<TJoin> {
    let comps = base.components();
    let mut parity = vec![false; comps.count];
    for &v in t {
        parity[comps.label[v]] ^= true;
    }
    if parity.iter().any(|&odd| odd) {
        return None;
    }
    if t.is_empty() {
        return Some(TJoin::default());
    }

    let trees: Vec<_> = t.iter().map(|&s| bfs_tree(base, s)).collect();
    let weights = WeightedCompleteGraph::from_fn(t.len(), |i, j| {
        let d = trees[i].0[t[j]];
        (d != usize::MAX).then_some(d as u64)
    });
    let matching = min_weight_perfect_matching(&weights)?;

    let mut join = BTreeSet::new();
    for &(i, j) in matching.edges() {
        let pred = &trees[i].1;
        let mut v = t[j];
        while v != t[i] {
            let p = pred[v];
            let e = edge(p, v);
            if !join.remove(&e) {
                join.insert(e);
            }
            v = p;
        }
    }
    Some(TJoin {
        edges: join.into_iter().collect(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn operation_graph_examples() {
        let k3 = Graph::complete(3);
        assert_eq!(build_gs(&k3, OperationSet::Add).base().m(), 0);
        assert!(build_gs(&k3, OperationSet::AddDelete).base().is_complete());
        let p3 = Graph::path(3);
        let gs = build_gs(&p3, OperationSet::Add);
        assert_eq!(gs.base().edges().collect::<Vec<_>>(), vec![(0, 2)]);
        assert_eq!(gs.mode(), OperationSet::Add);
    }

    #[test]
    fn join_examples() {
        let k4 = Graph::complete(4);
        assert!(min_t_join(&k4, &[]).unwrap().is_empty());
        assert_eq!(min_t_join(&k4, &[0, 1]).unwrap().edges(), &[(0, 1)]);
        let p4 = Graph::path(4);
        assert_eq!(
            min_t_join(&p4, &[0, 3]).unwrap().edges(),
            &[(0, 1), (1, 2), (2, 3)]
        );
    }

    #[test]
    fn join_nonexistence() {
        let k4 = Graph::complete(4);
        assert!(min_t_join(&k4, &[0, 1, 2]).is_none());
        let two_edges = Graph::from_edges(4, [(0, 1), (2, 3)]).unwrap();
        assert!(min_t_join(&two_edges, &[0, 2]).is_none());
        assert_eq!(min_t_join(&two_edges, &[0, 1, 2, 3]).unwrap().len(), 2);
    }

    #[test]
    fn complete_graph_join_is_a_matching() {
        let k = Graph::complete(9);
        let t = [0, 2, 3, 5, 7, 8];
        let j = min_t_join(&k, &t).unwrap();
        assert_eq!(j.len(), t.len() / 2);
        assert_eq!(odd_vertices(9, j.edges()), t.to_vec());
    }
}
