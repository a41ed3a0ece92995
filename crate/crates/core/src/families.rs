//! Named multigraph families and seeded random generators.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::multigraph::Multigraph;

fn build(n: usize, edges: &[(usize, usize)]) -> Multigraph {
    Multigraph::from_edges(n, edges).expect("family edges are in range and loop-free")
}

/// Cycle on `n ≥ 2` vertices with every edge repeated `fold` times.
pub fn cycle(n: usize, fold: usize) -> Multigraph {
    let mut edges = Vec::new();
    for i in 0..n {
        for _ in 0..fold {
            edges.push((i, (i + 1) % n));
        }
    }
    build(n, &edges)
}

pub fn path(n: usize) -> Multigraph {
    let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
    build(n, &edges)
}

pub fn complete(n: usize) -> Multigraph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            edges.push((u, v));
        }
    }
    build(n, &edges)
}

/// `K_{1,leaves}` with the centre at vertex 0.
pub fn star(leaves: usize) -> Multigraph {
    let edges: Vec<_> = (1..=leaves).map(|i| (0, i)).collect();
    build(leaves + 1, &edges)
}

/// `K_3` with each edge repeated `fold` times.
pub fn fat_triangle(fold: usize) -> Multigraph {
    let mut edges = Vec::new();
    for &(u, v) in &[(0, 1), (1, 2), (0, 2)] {
        for _ in 0..fold {
            edges.push((u, v));
        }
    }
    build(3, &edges)
}

pub fn petersen() -> Multigraph {
    let mut edges = Vec::new();
    for i in 0..5 {
        edges.push((i, (i + 1) % 5));
        edges.push((i, i + 5));
        edges.push((5 + i, 5 + (i + 2) % 5));
    }
    build(10, &edges)
}

/// Random multigraph with exactly `m` edges on `n` vertices and at most
/// `max_mult` parallel copies per pair. Returns `None` when `m` cannot fit.
pub fn random_multigraph(n: usize, m: usize, max_mult: usize, seed: u64) -> Option<Multigraph> {
    if n < 2 || m > n * (n - 1) / 2 * max_mult {
        return None;
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut g = Multigraph::new(n);
    while g.m() < m {
        let u = rng.gen_range(0..n);
        let v = rng.gen_range(0..n);
        if u == v || g.multiplicity(u, v).ok()? >= max_mult {
            continue;
        }
        g.add_edge(u, v).ok()?;
    }
    Some(g)
}

/// Benchmark instance: `m / 2` vertices (at least 2), `m` edges with uniform
/// endpoints, loops rejected and redrawn.
pub fn bench_instance(m: usize, seed: u64) -> Multigraph {
    let n = (m / 2).max(2);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut g = Multigraph::new(n);
    while g.m() < m {
        let u = rng.gen_range(0..n);
        let v = rng.gen_range(0..n);
        if u != v {
            g.add_edge(u, v).expect("in range");
        }
    }
    g
}

/// A reproducible permutation of `0..m`.
pub fn shuffled_order(m: usize, seed: u64) -> Vec<usize> {
    let mut order: Vec<usize> = (0..m).collect();
    order.shuffle(&mut ChaCha8Rng::seed_from_u64(seed));
    order
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sizes() {
        assert_eq!(cycle(5, 2).m(), 10);
        assert_eq!(petersen().m(), 15);
        assert!((0..10).all(|v| petersen().degree(v) == 3));
        assert_eq!(fat_triangle(3).m(), 9);
        assert_eq!(star(3).degree(0), 3);
    }

    #[test]
    fn random_is_reproducible() {
        let a = random_multigraph(6, 12, 4, 42).unwrap();
        let b = random_multigraph(6, 12, 4, 42).unwrap();
        assert_eq!(a, b);
        assert_eq!(a.m(), 12);
        assert!(random_multigraph(3, 13, 4, 0).is_none());
    }

    #[test]
    fn bench_generator_shape() {
        let g = bench_instance(1000, 7);
        assert_eq!(g.n(), 500);
        assert_eq!(g.m(), 1000);
        assert!(g.edges().iter().all(|&(u, v)| u != v));
    }
}
