//! Seeded random joins and strip compositions for tests and benchmarks.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::simple::SimpleGraph;

use super::interval::LinearIntervalGraph;
use super::join::{CanonicalJoin, NONE};
use super::strip::{Strip, StripComposition};

fn random_interval_graph(rng: &mut ChaCha8Rng, n: usize) -> LinearIntervalGraph {
    let count = rng.gen_range(0..=n + 1);
    let ranges: Vec<(usize, usize)> = (0..count)
        .map(|_| {
            let a = rng.gen_range(0..n);
            (a, (a + rng.gen_range(0..=3)).min(n - 1))
        })
        .collect();
    LinearIntervalGraph::from_ranges(n, &ranges).expect("ranges are well formed")
}

/// A proper colouring of the listed vertices, each taking a random colour
/// below `l` that its neighbours lack (or the smallest free one past `l`).
fn random_colouring(rng: &mut ChaCha8Rng, g: &SimpleGraph, vs: &[usize], l: usize) -> Vec<usize> {
    let mut colour = vec![NONE; g.n()];
    let mut order = vs.to_vec();
    order.shuffle(rng);
    for v in order {
        let used: Vec<usize> = g.neighbours(v).iter().map(|&w| colour[w]).collect();
        let free: Vec<usize> = (0..l).filter(|c| !used.contains(c)).collect();
        colour[v] = match free.choose(rng) {
            Some(&c) => c,
            None => (l..).find(|c| !used.contains(c)).expect("unbounded"),
        };
    }
    colour
}

/// A random canonical interval 2-join with nonempty `X`/`Y` cliques, a
/// proper colouring of `G1`, and a palette size no smaller than either that
/// colouring or the join bound.
pub fn random_join(seed: u64) -> (CanonicalJoin, Vec<usize>, usize) {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    loop {
        let n1 = rng.gen_range(2..=7);
        let n2 = rng.gen_range(2..=5);
        let li = random_interval_graph(&mut rng, n2);
        let xs = rng.gen_range(1..=li.reach(0) + 1);
        let ys = (1..=n2).filter(|&y| li.reach(n2 - y) == n2 - 1).count();
        if xs + 1 > n2 {
            continue;
        }
        let ys = rng.gen_range(1..=ys.min(n2 - xs));
        let n = n1 + n2;
        let mut g = SimpleGraph::new(n);
        let p = rng.gen_range(0.2..0.9);
        for u in 0..n1 {
            for v in u + 1..n1 {
                if rng.gen_bool(p) {
                    g.add_edge(u, v).expect("in range");
                }
            }
        }
        let pick = |rng: &mut ChaCha8Rng| {
            let size = rng.gen_range(1..=n1.min(3));
            let mut all: Vec<usize> = (0..n1).collect();
            all.shuffle(rng);
            all.truncate(size);
            all.sort_unstable();
            all
        };
        let x1 = pick(&mut rng);
        let y1 = pick(&mut rng);
        for c in [&x1, &y1] {
            for (i, &u) in c.iter().enumerate() {
                for &v in &c[i + 1..] {
                    g.add_edge(u, v).expect("in range");
                }
            }
        }
        for (u, v) in li.to_simple().edges() {
            g.add_edge(n1 + u, n1 + v).expect("in range");
        }
        let v2: Vec<usize> = (n1..n).collect();
        let x2: Vec<usize> = v2[..xs].to_vec();
        let y2: Vec<usize> = v2[n2 - ys..].to_vec();
        for &a in &x1 {
            for &b in &x2 {
                g.add_edge(a, b).expect("in range");
            }
        }
        for &a in &y1 {
            for &b in &y2 {
                g.add_edge(a, b).expect("in range");
            }
        }
        let g1 = g.induced(&(0..n1).collect::<Vec<_>>());
        let v1: Vec<usize> = (0..n1).collect();
        let guess = rng.gen_range(2..=6);
        let mut c1 = random_colouring(&mut rng, &g1, &v1, guess);
        c1.resize(n, NONE);
        let j = CanonicalJoin::new(g, v1, x1, y1, v2, x2, y2).expect("construction is canonical");
        let used = c1.iter().filter(|&&c| c != NONE).max().map_or(0, |&c| c + 1);
        let l = used.max(j.gamma_j()) + usize::from(rng.gen_bool(0.2));
        return (j, c1, l);
    }
}

/// A random composition of linear interval strips over a small multigraph,
/// with at most `max_vertices` strip vertices in total. Strips with two or
/// more vertices join distinct ends and have disjoint end cliques.
pub fn random_strip_composition(seed: u64, max_vertices: usize) -> StripComposition {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let hubs = rng.gen_range(2..=4);
    let mut arcs = Vec::new();
    let mut strips = Vec::new();
    let mut total = 0;
    let target = rng.gen_range(2..=6);
    while arcs.len() < target && total < max_vertices {
        let u = rng.gen_range(0..hubs);
        let w = rng.gen_range(0..hubs);
        let room = max_vertices - total;
        let size = if u == w || room < 2 || rng.gen_bool(0.5) {
            1
        } else {
            rng.gen_range(2..=room.min(4))
        };
        let strip = if size == 1 {
            Strip::new(LinearIntervalGraph::from_ranges(1, &[]).expect("one point"), 1, 1)
        } else {
            let li = random_interval_graph(&mut rng, size);
            let xmax = li.reach(0) + 1;
            let ymax = (1..=size).filter(|&y| li.reach(size - y) == size - 1).count();
            let x = rng.gen_range(0..=xmax.min(size - 1));
            let y = rng.gen_range(0..=ymax.min(size - x));
            Strip::new(li, x, y)
        };
        let strip = strip.expect("end cliques chosen to fit");
        total += strip.graph().n();
        arcs.push((u, w));
        strips.push(strip);
    }
    StripComposition::new(hubs, arcs, strips).expect("generated composition is valid")
}
