//! Enumeration and counting helpers shared by the integration tests.
#![allow(dead_code)]

use degedit::{Digraph, Graph};

/// Every labelled simple graph on `n` vertices, indexed by edge mask.
pub fn all_graphs(n: usize) -> Vec<Graph> {
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .collect();
    (0u64..1 << pairs.len())
        .map(|mask| Graph::from_edges(n, select(&pairs, mask)).unwrap())
        .collect()
}

/// Every labelled simple digraph on `n` vertices, indexed by arc mask.
pub fn all_digraphs(n: usize) -> Vec<Digraph> {
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| (0..n).map(move |v| (u, v)))
        .filter(|(u, v)| u != v)
        .collect();
    (0u64..1 << pairs.len())
        .map(|mask| Digraph::from_arcs(n, select(&pairs, mask)).unwrap())
        .collect()
}

fn select(pairs: &[(usize, usize)], mask: u64) -> Vec<(usize, usize)> {
    pairs
        .iter()
        .enumerate()
        .filter(|(i, _)| mask >> i & 1 == 1)
        .map(|(_, &p)| p)
        .collect()
}

/// All integer vectors of length `n` with entries in `-r..=r` and sum zero.
pub fn zero_sum_vectors(n: usize, r: i64) -> Vec<Vec<i64>> {
    let width = 2 * r + 1;
    (0..width.pow(n as u32))
        .map(|mut x| {
            (0..n)
                .map(|_| {
                    let d = x % width - r;
                    x /= width;
                    d
                })
                .collect::<Vec<i64>>()
        })
        .filter(|d| d.iter().sum::<i64>() == 0)
        .collect()
}

/// Parity target vector encoded by the low `n` bits of `mask`.
pub fn parity_vector(n: usize, mask: usize) -> Vec<u8> {
    (0..n).map(|v| (mask >> v & 1) as u8).collect()
}

/// `(p, q)` computed from scratch: components avoiding and meeting `marked`.
pub fn split_components(n: usize, edges: &[(usize, usize)], marked: &[bool]) -> (usize, usize) {
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(parent: &mut [usize], mut x: usize) -> usize {
        while parent[x] != x {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        x
    }
    for &(u, v) in edges {
        let (a, b) = (find(&mut parent, u), find(&mut parent, v));
        parent[a] = b;
    }
    let mut hit = vec![None::<bool>; n];
    for (v, &m) in marked.iter().enumerate() {
        let r = find(&mut parent, v);
        hit[r] = Some(hit[r].unwrap_or(false) || m);
    }
    let p = hit.iter().filter(|h| **h == Some(false)).count();
    let q = hit.iter().filter(|h| **h == Some(true)).count();
    (p, q)
}
