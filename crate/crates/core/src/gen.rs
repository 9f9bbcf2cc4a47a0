//! Deterministic random-graph generation for fuzzing, verification and
//! benchmarks. Seeded ChaCha keeps every run reproducible.

use crate::graph::{normalize, Graph, RawGraph};
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub fn rng_from_seed(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Random connected graph: a random spanning tree over `1..=n` plus
/// `extra` uniformly random chords. Parallels and loops are dropped by
/// normalization, so the edge count is at most `n - 1 + extra`.
pub fn random_connected_graph(rng: &mut impl Rng, n: u32, extra: u64) -> Graph {
    assert!(n >= 1);
    let mut edges = Vec::with_capacity((n as usize - 1) + extra as usize);
    for v in 2..=n {
        edges.push((rng.random_range(1..v), v));
    }
    for _ in 0..extra {
        if n < 2 {
            break;
        }
        let u = rng.random_range(1..=n);
        let v = rng.random_range(1..=n);
        if u != v {
            edges.push((u, v));
        }
    }
    normalize(&RawGraph { n, edges })
}

/// Random graph that may be disconnected: `m` uniform non-loop pairs.
pub fn random_graph(rng: &mut impl Rng, n: u32, m: u64) -> Graph {
    assert!(n >= 1);
    let mut edges = Vec::with_capacity(m as usize);
    for _ in 0..m {
        if n < 2 {
            break;
        }
        let u = rng.random_range(1..=n);
        let v = rng.random_range(1..=n);
        if u != v {
            edges.push((u, v));
        }
    }
    normalize(&RawGraph { n, edges })
}

/// Random failure set of the given size, optionally forcing vertex 1 (the
/// DFS root of the first component) into it.
pub fn random_failure_set(rng: &mut impl Rng, n: u32, size: usize, include_first: bool) -> Vec<u32> {
    let mut failed = Vec::with_capacity(size);
    if include_first && size > 0 {
        failed.push(1);
    }
    while failed.len() < size.min(n as usize) {
        let v = rng.random_range(1..=n);
        if !failed.contains(&v) {
            failed.push(v);
        }
    }
    failed.sort_unstable();
    failed
}

/// Renders a graph in the text file format understood by `load_graph`.
pub fn graph_to_text(g: &Graph) -> String {
    let mut out = format!("{} {}\n", g.n(), g.m());
    for (u, v) in g.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::split_components;

    #[test]
    fn connected_generator_is_connected_and_deterministic() {
        for seed in 0..20 {
            let mut rng = rng_from_seed(seed);
            let g = random_connected_graph(&mut rng, 40, 30);
            assert_eq!(split_components(&g).comp_count(), 1, "seed {seed}");

            let mut rng2 = rng_from_seed(seed);
            let g2 = random_connected_graph(&mut rng2, 40, 30);
            assert_eq!(g, g2);
        }
    }

    #[test]
    fn failure_set_is_sorted_unique_and_in_range() {
        let mut rng = rng_from_seed(7);
        for _ in 0..50 {
            let f = random_failure_set(&mut rng, 30, 6, true);
            assert_eq!(f.len(), 6);
            assert!(f.windows(2).all(|w| w[0] < w[1]));
            assert!(f.iter().all(|&v| (1..=30).contains(&v)));
            assert_eq!(f[0], 1);
        }
    }

    #[test]
    fn text_round_trip() {
        let mut rng = rng_from_seed(3);
        let g = random_connected_graph(&mut rng, 25, 15);
        let text = graph_to_text(&g);
        let back = normalize(&crate::graph::load_graph(&text).unwrap());
        assert_eq!(g, back);
    }
}
