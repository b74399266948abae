//! Matchings in general graphs.
//!
//! [`max_matching`] is Edmonds' cardinality blossom algorithm, `O(n^3)`.
//! [`min_weight_perfect_matching`] runs the primal-dual weighted blossom
//! algorithm in maximum-cardinality mode on complemented weights; duals are
//! kept at twice their value so everything stays in integers.

mod cardinality;
mod weighted;

use crate::graph::Graph;

/// A set of pairwise vertex-disjoint edges, stored as normalised pairs.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Matching {
    edges: Vec<(usize, usize)>,
}

impl Matching {
    fn from_mates(mate: &[Option<usize>]) -> Self {
        let edges = mate
            .iter()
            .enumerate()
            .filter_map(|(v, m)| m.filter(|&u| v < u).map(|u| (v, u)))
            .collect();
        Matching { edges }
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

    /// Partner of every vertex among `0..n`.
    pub fn mates(&self, n: usize) -> Vec<Option<usize>> {
        let mut mate = vec![None; n];
        for &(u, v) in &self.edges {
            mate[u] = Some(v);
            mate[v] = Some(u);
        }
        mate
    }

    /// No vertex is covered twice.
    pub fn is_valid(&self) -> bool {
        let mut seen = std::collections::HashSet::new();
        self.edges
            .iter()
            .all(|&(u, v)| u != v && seen.insert(u) && seen.insert(v))
    }
}

/// Symmetric pair weights on `0..k`; `None` marks a forbidden pair.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeightedCompleteGraph {
    k: usize,
    weight: Vec<Option<u64>>,
}

impl WeightedCompleteGraph {
    /// All pairs forbidden until set.
    pub fn new(k: usize) -> Self {
        WeightedCompleteGraph {
            k,
            weight: vec![None; k * k],
        }
    }

    pub fn from_fn(k: usize, mut w: impl FnMut(usize, usize) -> Option<u64>) -> Self {
        let mut g = Self::new(k);
        for u in 0..k {
            for v in u + 1..k {
                g.set(u, v, w(u, v));
            }
        }
        g
    }

    pub fn set(&mut self, u: usize, v: usize, w: Option<u64>) {
        assert!(u != v && u < self.k && v < self.k);
        self.weight[u * self.k + v] = w;
        self.weight[v * self.k + u] = w;
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn weight(&self, u: usize, v: usize) -> Option<u64> {
        self.weight[u * self.k + v]
    }

    /// Total weight of a matching, `None` if it uses a forbidden pair.
    pub fn cost(&self, m: &Matching) -> Option<u64> {
        m.edges().iter().map(|&(u, v)| self.weight(u, v)).sum()
    }
}

/// A maximum-cardinality matching of `g`.
pub fn max_matching(g: &Graph) -> Matching {
    Matching::from_mates(&cardinality::maximum_matching(g))
}

/// A minimum-weight perfect matching avoiding forbidden pairs, or `None` if
/// `k` is odd or every perfect matching needs a forbidden pair.
pub fn min_weight_perfect_matching(w: &WeightedCompleteGraph) -> Option<Matching> {
    let k = w.k();
    if k % 2 == 1 {
        return None;
    }
    if k == 0 {
        return Some(Matching::default());
    }
    let max_w = (0..k)
        .flat_map(|u| (u + 1..k).filter_map(move |v| w.weight(u, v)))
        .max()?;
    // Maximising sum(ceiling - w) over maximum-cardinality matchings
    // minimises sum(w) over perfect ones, when any exist.
    let ceiling = max_w as i64 + 1;
    let mut edges = Vec::new();
    for u in 0..k {
        for v in u + 1..k {
            if let Some(x) = w.weight(u, v) {
                edges.push((u, v, ceiling - x as i64));
            }
        }
    }
    let mate = weighted::max_weight_matching(k, &edges, true);
    if mate.iter().any(Option::is_none) {
        return None;
    }
    let m = Matching::from_mates(&mate);
    debug_assert_eq!(m.len(), k / 2);
    Some(m)
}
