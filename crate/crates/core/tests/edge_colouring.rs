use linecolour::io::parse_multigraph;
use linecolour::{
    edge_colour, edge_colour_optimal_local, edge_colour_with, families, oracle, EdgeColourer, ExtendStats, Multigraph,
    OracleGuard, PartialEdgeColouring, Tracer,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

mod common;

fn load(name: &str) -> Multigraph {
    parse_multigraph(&std::fs::read_to_string(common::fixture(name)).unwrap()).unwrap()
}

#[test]
fn fixtures_hit_their_bounds() {
    let guard = OracleGuard::parse("10,16,12,60").unwrap();
    for (name, gamma, chi) in [("k3.mg", 3, 3), ("c5.mg", 3, 3), ("c5x2.mg", 5, 5), ("fat-triangle-3.mg", 9, 9), ("empty.mg", 0, 0)] {
        let g = load(name);
        let (c, report) = edge_colour_optimal_local(&g).unwrap();
        assert_eq!(report.gamma, gamma, "{name}");
        c.validate().unwrap();
        assert!(c.is_complete());
        assert_eq!(c.colours_used(), chi, "{name}");
        assert_eq!(oracle::chromatic_index_bf(&g, &guard).unwrap(), chi, "{name}");
    }
    let p = load("petersen.mg");
    let (c, report) = edge_colour_optimal_local(&p).unwrap();
    assert_eq!((report.gamma, c.colours_used()), (4, 4));
}

#[test]
fn random_orders_stay_within_bound() {
    let mut total = ExtendStats::default();
    for seed in 0..4000u64 {
        let n = 3 + (seed % 8) as usize;
        let m = 4 + (seed % 30) as usize;
        let Some(g) = families::random_multigraph(n, m, 1 + (seed % 5) as usize, seed) else { continue };
        let k = g.local_edge_bound().gamma;
        let order = families::shuffled_order(g.m(), seed ^ 77);
        let (c, s) = edge_colour_with(&g, k, &order, &mut Tracer::off()).unwrap_or_else(|e| panic!("seed {seed}: {e}"));
        c.validate().unwrap();
        assert!(c.is_complete(), "seed {seed}");
        total.absorb(&s);
    }
    for l in 1..=6 {
        for seed in 0..20 {
            let g = families::cycle(5, l);
            let order = families::shuffled_order(g.m(), seed);
            let (c, s) = edge_colour_with(&g, g.local_edge_bound().gamma, &order, &mut Tracer::off()).unwrap();
            c.validate().unwrap();
            total.absorb(&s);
        }
    }
    // the harder branches must actually be exercised
    assert!(total.chains > 0 && total.kempe > 0, "{total:?}");
}

#[test]
fn reinsertion_after_random_swaps() {
    let mut graphs = Vec::new();
    for l in 1..=4 {
        graphs.push(families::cycle(5, l));
        graphs.push(families::cycle(7, l));
    }
    for seed in 0..60u64 {
        if let Some(g) = families::random_multigraph(4 + (seed % 6) as usize, 8 + (seed % 20) as usize, 1 + (seed % 5) as usize, seed) {
            graphs.push(g);
        }
    }
    for (gi, g) in graphs.iter().enumerate() {
        let k = g.local_edge_bound().gamma;
        let mut c = edge_colour(g, k).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(gi as u64);
        for _ in 0..100 {
            for _ in 0..3 {
                let (a, b, v) = (rng.gen_range(0..k), rng.gen_range(0..k), rng.gen_range(0..g.n()));
                c.kempe_swap(a, b, v).unwrap();
            }
            let e = rng.gen_range(0..g.m());
            c.unassign(e).unwrap();
            EdgeColourer::new(g, k)
                .unwrap()
                .insert(&mut c, e, &mut Tracer::off())
                .unwrap_or_else(|err| panic!("graph {gi}: {err}"));
            c.validate().unwrap();
            assert!(c.is_complete());
        }
    }
}

fn every_colouring(g: &Multigraph, skip: usize, i: usize, c: &mut PartialEdgeColouring, out: &mut Vec<PartialEdgeColouring>, cap: usize) {
    if out.len() >= cap {
        return;
    }
    if i == g.m() {
        out.push(c.clone());
        return;
    }
    if i == skip {
        return every_colouring(g, skip, i + 1, c, out, cap);
    }
    for col in 0..c.k() {
        if c.assign(i, col).is_ok() {
            every_colouring(g, skip, i + 1, c, out, cap);
            c.unassign(i).unwrap();
        }
    }
}

// Whatever colouring the other edges carry, the missing edge can be added.
#[test]
fn any_colouring_of_the_rest_extends() {
    let mut total = ExtendStats::default();
    for (g, cap) in [(families::cycle(5, 2), 40_000), (families::cycle(7, 2), 20_000), (families::fat_triangle(2), 40_000)] {
        let k = g.local_edge_bound().gamma;
        for skip in 0..g.m().min(3) {
            let mut all = Vec::new();
            every_colouring(&g, skip, 0, &mut PartialEdgeColouring::new(&g, k), &mut all, cap);
            assert!(!all.is_empty());
            for mut c in all {
                let mut dr = EdgeColourer::new(&g, k).unwrap();
                dr.insert(&mut c, skip, &mut Tracer::off()).unwrap();
                c.validate().unwrap();
                assert!(c.is_complete());
                total.absorb(dr.stats());
            }
        }
    }
    assert!(total.chains > 0, "{total:?}");
}

#[test]
fn palette_below_bound_is_refused() {
    let g = families::fat_triangle(2);
    assert!(matches!(
        edge_colour(&g, 5),
        Err(linecolour::Error::PaletteTooSmall { k: 5, gamma: 6 })
    ));
    assert_eq!(edge_colour(&g, 8).unwrap().colours_used(), 6);
}
