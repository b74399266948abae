//! Problem instances and the structural quantities the optimum formulas
//! are written in.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{Digraph, Graph};

/// The permitted atomic modifications. Vertex deletion is not supported.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum OperationSet {
    /// Edge (arc) addition only.
    #[serde(rename = "ea")]
    Add,
    /// Edge (arc) addition and deletion.
    #[serde(rename = "ea+ed")]
    AddDelete,
}

impl OperationSet {
    pub const ALL: [OperationSet; 2] = [OperationSet::Add, OperationSet::AddDelete];

    pub fn allows_deletion(self) -> bool {
        matches!(self, OperationSet::AddDelete)
    }
}

impl fmt::Display for OperationSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            OperationSet::Add => "ea",
            OperationSet::AddDelete => "ea+ed",
        })
    }
}

impl FromStr for OperationSet {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut ops: Vec<&str> = s.split(['+', ',']).map(str::trim).collect();
        ops.sort_unstable();
        ops.dedup();
        match ops.as_slice() {
            ["ea"] => Ok(OperationSet::Add),
            ["ea", "ed"] => Ok(OperationSet::AddDelete),
            _ => Err(Error::UnsupportedOperationSet(s.to_string())),
        }
    }
}

/// An undirected graph with a target parity for every vertex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParityInstance {
    graph: Graph,
    delta: Vec<u8>,
    budget: Option<usize>,
}

impl ParityInstance {
    pub fn new(graph: Graph, delta: Vec<u8>) -> Result<Self> {
        if graph.n() == 0 {
            return Err(Error::EmptyGraph);
        }
        if delta.len() != graph.n() {
            return Err(Error::DeltaLength {
                expected: graph.n(),
                got: delta.len(),
            });
        }
        if let Some((vertex, &value)) = delta.iter().enumerate().find(|(_, &d)| d > 1) {
            return Err(Error::InvalidParity { vertex, value });
        }
        Ok(ParityInstance {
            graph,
            delta,
            budget: None,
        })
    }

    /// Instance asking for every degree to be even.
    pub fn eulerian(graph: Graph) -> Result<Self> {
        let n = graph.n();
        Self::new(graph, vec![0; n])
    }

    pub fn with_budget(mut self, k: Option<usize>) -> Self {
        self.budget = k;
        self
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn delta(&self) -> &[u8] {
        &self.delta
    }

    pub fn budget(&self) -> Option<usize> {
        self.budget
    }

    /// Vertices whose degree parity disagrees with the target.
    pub fn deficient(&self) -> Vec<usize> {
        (0..self.graph.n())
            .filter(|&v| self.graph.degree(v) % 2 != self.delta[v] as usize)
            .collect()
    }
}

/// A digraph with a target degree balance (out minus in) for every vertex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BalanceInstance {
    digraph: Digraph,
    delta: Vec<i64>,
    budget: Option<usize>,
}

impl BalanceInstance {
    pub fn new(digraph: Digraph, delta: Vec<i64>) -> Result<Self> {
        if digraph.n() == 0 {
            return Err(Error::EmptyGraph);
        }
        if delta.len() != digraph.n() {
            return Err(Error::DeltaLength {
                expected: digraph.n(),
                got: delta.len(),
            });
        }
        Ok(BalanceInstance {
            digraph,
            delta,
            budget: None,
        })
    }

    pub fn eulerian(digraph: Digraph) -> Result<Self> {
        let n = digraph.n();
        Self::new(digraph, vec![0; n])
    }

    pub fn with_budget(mut self, k: Option<usize>) -> Self {
        self.budget = k;
        self
    }

    pub fn digraph(&self) -> &Digraph {
        &self.digraph
    }

    pub fn delta(&self) -> &[i64] {
        &self.delta
    }

    pub fn budget(&self) -> Option<usize> {
        self.budget
    }

    /// `f(v) = delta(v) - d+(v) + d-(v)` for every vertex (zero off the
    /// deficient set).
    pub fn excess(&self) -> Vec<i64> {
        (0..self.digraph.n())
            .map(|v| self.delta[v] - self.digraph.balance(v))
            .collect()
    }
}

/// Deficient set, excess function and component counts of an instance.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct StructuralCounts {
    /// The deficient vertices, sorted.
    pub deficient: Vec<usize>,
    /// Per-vertex excess `f`, zero outside the deficient set (directed only).
    pub excess: Option<Vec<i64>>,
    /// Components of the (underlying) graph containing no deficient vertex.
    pub p: usize,
    /// Components containing at least one deficient vertex.
    pub q: usize,
    /// Total absolute excess for digraphs, `|T|` for graphs.
    pub t: usize,
}

impl StructuralCounts {
    fn from_components(label: &[usize], count: usize, deficient: Vec<usize>) -> (usize, usize) {
        let mut touched = vec![false; count];
        for &v in &deficient {
            touched[label[v]] = true;
        }
        let q = touched.iter().filter(|&&b| b).count();
        (count - q, q)
    }
}

pub fn parity_counts(inst: &ParityInstance) -> StructuralCounts {
    let deficient = inst.deficient();
    let comps = inst.graph().components();
    let (p, q) = StructuralCounts::from_components(&comps.label, comps.count, deficient.clone());
    StructuralCounts {
        t: deficient.len(),
        deficient,
        excess: None,
        p,
        q,
    }
}

pub fn balance_counts(inst: &BalanceInstance) -> StructuralCounts {
    let excess = inst.excess();
    let deficient: Vec<usize> = (0..excess.len()).filter(|&v| excess[v] != 0).collect();
    let comps = inst.digraph().components();
    let (p, q) = StructuralCounts::from_components(&comps.label, comps.count, deficient.clone());
    StructuralCounts {
        t: excess.iter().map(|f| f.unsigned_abs() as usize).sum(),
        deficient,
        excess: Some(excess),
        p,
        q,
    }
}
