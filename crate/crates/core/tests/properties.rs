use linecolour::colouring::PartialEdgeColouring;
use linecolour::fan::FanEngine;
use linecolour::line_graph::line_graph;
use linecolour::oracle::{chromatic_index_bf, OracleGuard};
use linecolour::quasiline::join::{extend_over_join, NONE};
use linecolour::quasiline::random::{random_join, random_strip_composition};
use linecolour::quasiline::{colour_decomposition, paste_on_clique_cutset};
use linecolour::{edge_colour_with, EdgeColourer, Multigraph, TraceEvent, Tracer};
use proptest::prelude::*;

fn multigraph(max_n: usize, max_m: usize) -> impl Strategy<Value = Multigraph> {
    (2..=max_n).prop_flat_map(move |n| {
        prop::collection::vec((0..n, 0..n), 1..=max_m).prop_map(move |pairs| {
            let mut g = Multigraph::new(n);
            for (u, v) in pairs {
                if u != v {
                    g.add_edge(u, v).unwrap();
                }
            }
            if g.m() == 0 {
                g.add_edge(0, 1).unwrap();
            }
            g
        })
    })
}

fn relabel(g: &Multigraph, perm: &[usize], edge_order: &[usize]) -> Multigraph {
    let edges: Vec<(usize, usize)> = edge_order.iter().map(|&e| g.endpoints(e)).map(|(u, v)| (perm[v], perm[u])).collect();
    Multigraph::from_edges(g.n(), &edges).unwrap()
}

fn graph_with_perms(max_n: usize, max_m: usize) -> impl Strategy<Value = (Multigraph, Vec<usize>, Vec<usize>)> {
    multigraph(max_n, max_m).prop_flat_map(|g| {
        let perm = Just((0..g.n()).collect::<Vec<_>>()).prop_shuffle();
        let order = Just((0..g.m()).collect::<Vec<_>>()).prop_shuffle();
        (Just(g), perm, order)
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn bound_sits_between_delta_and_three_halves(g in multigraph(9, 30)) {
        let delta = g.max_degree();
        let gamma = g.local_edge_bound().gamma;
        prop_assert!(delta <= gamma);
        prop_assert!(gamma <= (3 * delta).div_ceil(2));
    }

    #[test]
    fn bound_ignores_labels((g, perm, order) in graph_with_perms(8, 24)) {
        prop_assert_eq!(g.local_edge_bound().gamma, relabel(&g, &perm, &order).local_edge_bound().gamma);
    }

    #[test]
    fn parallel_edge_never_lowers_bound(g in multigraph(8, 24), pick in any::<prop::sample::Index>()) {
        let (u, v) = g.endpoints(pick.index(g.m()));
        let mut h = g.clone();
        h.add_edge(u, v).unwrap();
        prop_assert!(h.local_edge_bound().gamma >= g.local_edge_bound().gamma);
    }

    #[test]
    fn triangle_weight_covers_every_triangle(g in multigraph(7, 24)) {
        for u in 0..g.n() {
            for v in 0..g.n() {
                for w in 0..g.n() {
                    let (a, b, c) = (g.multiplicity(u, v).unwrap_or(0), g.multiplicity(u, w).unwrap_or(0), g.multiplicity(v, w).unwrap_or(0));
                    if u != v && a > 0 && b > 0 && c > 0 {
                        prop_assert!(a + b + c <= g.triangle_weight(u, v).unwrap());
                    }
                }
            }
        }
    }

    #[test]
    fn mutations_keep_colouring_proper(g in multigraph(7, 20), ops in prop::collection::vec((0u8..3, any::<usize>(), any::<usize>(), any::<usize>()), 1..60)) {
        let k = g.local_edge_bound().gamma;
        let mut c = PartialEdgeColouring::new(&g, k);
        for (op, a, b, x) in ops {
            match op {
                0 => { let _ = c.assign(x % g.m(), a % k); }
                1 => { let _ = c.unassign(x % g.m()); }
                _ => {
                    let (alpha, beta, v) = (a % k, b % k, x % g.n());
                    let before = c.assignment();
                    c.kempe_swap(alpha, beta, v).unwrap();
                    prop_assert!(c.validate().is_ok());
                    c.kempe_swap(alpha, beta, v).unwrap();
                    prop_assert_eq!(c.assignment(), before);
                }
            }
            prop_assert!(c.validate().is_ok());
        }
    }

    #[test]
    fn maximal_fans_are_valid_and_rotate_cleanly(g in multigraph(7, 18), seed in any::<u64>(), pick in any::<prop::sample::Index>()) {
        let k = g.local_edge_bound().gamma;
        let order = linecolour::families::shuffled_order(g.m(), seed);
        let (mut c, _) = edge_colour_with(&g, k, &order, &mut Tracer::off()).unwrap();
        let e0 = pick.index(g.m());
        c.unassign(e0).unwrap();
        let mut engine = FanEngine::new(g.n(), k);
        for hinge in [g.endpoints(e0).0, g.endpoints(e0).1] {
            let fan = engine.build_maximal_fan(&g, &mut c, e0, hinge).unwrap();
            prop_assert!(fan.check(&g, &c).is_ok());
            for j in 0..fan.len() {
                let mut d = c.clone();
                engine.rotate(&mut d, &fan, j, &mut Tracer::off()).unwrap();
                prop_assert!(d.validate().is_ok());
                prop_assert_eq!(d.uncoloured_edges(), vec![fan.witness[j]]);
            }
        }
    }

    #[test]
    fn insertion_keeps_prefix_coloured(g in multigraph(8, 26), seed in any::<u64>()) {
        let k = g.local_edge_bound().gamma;
        let order = linecolour::families::shuffled_order(g.m(), seed);
        let mut c = PartialEdgeColouring::new(&g, k);
        let mut dr = EdgeColourer::new(&g, k).unwrap();
        let mut used = 0;
        for (i, &e) in order.iter().enumerate() {
            let mut events = Vec::new();
            let mut sink = |ev: &TraceEvent| events.push(ev.clone());
            dr.insert(&mut c, e, &mut Tracer::new(&mut sink)).unwrap();
            prop_assert!(c.validate().is_ok());
            let mut coloured: Vec<usize> = (0..g.m()).filter(|&f| c.colour(f).is_some()).collect();
            let mut prefix = order[..=i].to_vec();
            coloured.sort_unstable();
            prefix.sort_unstable();
            prop_assert_eq!(coloured, prefix);
            prop_assert!(c.colours_used() >= used && c.colours_used() <= k);
            used = c.colours_used();
            let chain: Vec<usize> = events.iter().filter_map(|ev| match ev {
                TraceEvent::ChainStep { colour, .. } => Some(*colour),
                _ => None,
            }).collect();
            for w in chain.windows(3) {
                prop_assert_eq!(w[0], w[2], "chain colours must alternate");
            }
        }
        let (m, k) = (g.m() as u64, k as u64);
        prop_assert!(c.ops() <= 8 * m * (k + m), "ops {} for m {} k {}", c.ops(), m, k);
    }

    #[test]
    fn line_graph_shape_and_properness(g in multigraph(7, 18), colours in prop::collection::vec(0usize..4, 18)) {
        let h = line_graph(&g);
        prop_assert_eq!(h.n(), g.m());
        let expected: usize = g.edges().iter().map(|&(u, v)| g.degree(u) + g.degree(v) - g.multiplicity(u, v).unwrap() - 1).sum();
        prop_assert_eq!(2 * h.m(), expected);
        let assignment: Vec<Option<usize>> = (0..g.m()).map(|e| Some(colours[e])).collect();
        let vertex: Vec<usize> = colours[..g.m()].to_vec();
        let as_edges = PartialEdgeColouring::from_assignment(&g, 4, &assignment).is_ok();
        prop_assert_eq!(as_edges, h.check_colouring(&vertex).is_ok());
    }

    #[test]
    fn chromatic_index_ignores_labels((g, perm, order) in graph_with_perms(5, 9)) {
        let guard = OracleGuard::default();
        prop_assert_eq!(chromatic_index_bf(&g, &guard).unwrap(), chromatic_index_bf(&relabel(&g, &perm, &order), &guard).unwrap());
    }

    #[test]
    fn joins_touch_v1_only_by_recorded_recolours(seed in any::<u64>()) {
        let (j, c1, l) = random_join(seed);
        let out = extend_over_join(&j, &c1, l).unwrap();
        prop_assert!(j.graph().check_colouring(&out.colours).is_ok());
        prop_assert!(out.colours.iter().all(|&c| c < l));
        for &v in j.v1() {
            if out.colours[v] != c1[v] {
                prop_assert!(out.stats.recoloured.iter().any(|r| r.vertex == v));
            }
        }
    }

    #[test]
    fn compositions_are_quasi_line_and_colour_properly(seed in any::<u64>()) {
        let sc = random_strip_composition(seed, 14);
        let r = sc.realize();
        prop_assert!(r.graph.is_quasi_line());
        let tree = sc.to_tree().unwrap();
        let c = colour_decomposition(&tree).unwrap();
        prop_assert!(r.graph.check_colouring(&c.colours).is_ok());
    }

    #[test]
    fn pasting_keeps_each_side_up_to_renaming(a in prop::collection::vec(0usize..5, 6), b in prop::collection::vec(0usize..5, 6), cut_size in 0usize..3) {
        // side 1 is vertices 0..3, side 2 is 3-cut_size..6; the cut gets
        // distinct colours on both sides
        let lo = 3 - cut_size;
        let mut c1 = vec![NONE; 6];
        let mut c2 = vec![NONE; 6];
        c1[..3].copy_from_slice(&a[..3]);
        c2[lo..].copy_from_slice(&b[lo..]);
        for (i, v) in (lo..3).enumerate() { c1[v] = 10 + i; c2[v] = 20 + (cut_size - 1 - i); }
        let out = paste_on_clique_cutset(&c1, &c2, &(lo..3).collect::<Vec<_>>()).unwrap();
        for v in 0..3 { prop_assert_eq!(out[v], c1[v]); }
        let side: Vec<usize> = (lo..6).collect();
        for &u in &side {
            for &w in &side {
                prop_assert_eq!(c2[u] == c2[w], out[u] == out[w]);
            }
        }
    }
}
