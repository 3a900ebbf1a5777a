#![allow(dead_code)]

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use ssl_core::graph::{Graph, VertexSet};
use ssl_core::hoffman::HoffmanGraph;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn random_graph(rng: &mut ChaCha8Rng, n: usize, p: f64) -> Graph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in (u + 1)..n {
            if rng.random_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(n, edges).unwrap()
}

pub fn random_subset(rng: &mut ChaCha8Rng, n: usize, p: f64) -> VertexSet {
    VertexSet::new((0..n).filter(|_| rng.random_bool(p)).collect()).unwrap()
}

/// Valid Hoffman graph: every fat gets at least one slim neighbor.
pub fn random_hoffman(
    rng: &mut ChaCha8Rng,
    s: usize,
    f: usize,
    p_slim: f64,
    p_fat: f64,
) -> HoffmanGraph {
    let mut edges = Vec::new();
    for u in 0..s {
        for v in (u + 1)..s {
            if rng.random_bool(p_slim) {
                edges.push((u, v));
            }
        }
    }
    for fat in s..s + f {
        let forced = rng.random_range(0..s);
        for x in 0..s {
            if x == forced || rng.random_bool(p_fat) {
                edges.push((x, fat));
            }
        }
    }
    HoffmanGraph::from_edges(s, f, edges).unwrap()
}
