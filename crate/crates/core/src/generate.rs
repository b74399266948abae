//! Seeded random instances.

use rand::seq::SliceRandom;
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::graph::{Digraph, Graph};
use crate::instance::{BalanceInstance, ParityInstance};

/// The generator every seeded entry point uses.
pub fn rng_from_seed(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Erdos-Renyi `G(n, density)`.
pub fn random_graph<R: Rng>(rng: &mut R, n: usize, density: f64) -> Graph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(density) {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(n, edges).expect("generated edges are simple")
}

/// Each ordered pair present independently with probability `density`.
pub fn random_digraph<R: Rng>(rng: &mut R, n: usize, density: f64) -> Digraph {
    let mut arcs = Vec::new();
    for u in 0..n {
        for v in 0..n {
            if u != v && rng.gen_bool(density) {
                arcs.push((u, v));
            }
        }
    }
    Digraph::from_arcs(n, arcs).expect("generated arcs are simple")
}

/// `G(n, density)` with a uniformly random parity target.
pub fn random_parity_instance<R: Rng>(rng: &mut R, n: usize, density: f64) -> ParityInstance {
    let g = random_graph(rng, n, density);
    let delta = (0..n).map(|_| rng.gen_range(0..=1)).collect();
    ParityInstance::new(g, delta).expect("n >= 1")
}

/// A random digraph whose target is the balance vector of a second,
/// independent random digraph, shuffled. Targets always sum to zero.
pub fn random_balance_instance<R: Rng>(rng: &mut R, n: usize, density: f64) -> BalanceInstance {
    let g = random_digraph(rng, n, density);
    let target = random_digraph(rng, n, density);
    let mut delta: Vec<i64> = (0..n).map(|v| target.balance(v)).collect();
    delta.shuffle(rng);
    BalanceInstance::new(g, delta).expect("n >= 1")
}
