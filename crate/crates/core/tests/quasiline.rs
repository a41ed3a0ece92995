use linecolour::oracle::{chromatic_number_bf, local_vertex_bound_bf};
use linecolour::quasiline::join::{extend_over_join, RecolourReason, NONE};
use linecolour::quasiline::random::{random_join, random_strip_composition};
use linecolour::quasiline::{colour_decomposition, parse_qltree, write_qltree};
use linecolour::simple::{colours_used, local_vertex_bound};
use linecolour::{Error, OracleGuard};

mod common;

#[test]
fn random_joins_extend() {
    let mut seen = [0u64; 6];
    for seed in 0..20_000u64 {
        let (j, c1, l) = random_join(seed);
        let out = extend_over_join(&j, &c1, l).unwrap_or_else(|e| panic!("seed {seed}: {e}"));
        assert!(common::proper_within(j.graph(), &out.colours, l), "seed {seed}");
        // V1 keeps its colouring unless a recolour was recorded
        for &v in j.v1() {
            if out.colours[v] != c1[v] {
                assert!(out.stats.recoloured.iter().any(|r| r.vertex == v), "seed {seed} vertex {v}");
            }
        }
        for (s, &c) in seen.iter_mut().zip(&out.stats.cases) {
            *s += u64::from(c > 0);
        }
    }
    assert!(seen.iter().all(|&c| c > 0), "{seen:?}");
}

#[test]
fn join_fixtures_reach_their_cases() {
    let fixtures = common::join_fixtures();
    assert_eq!(fixtures.len(), 8);
    for f in &fixtures {
        let out = extend_over_join(&f.join, &f.c1, f.l).unwrap();
        assert!(common::proper_within(f.join.graph(), &out.colours, f.l), "{}", f.label);
        let case: usize = f.label["case ".len()..][..1].parse().unwrap();
        assert!(out.stats.cases[case - 1] > 0, "{}: {:?}", f.label, out.stats.cases);
        match f.label.as_str() {
            "case 6 free" => assert!(out.stats.recoloured.iter().any(|r| r.reason == RecolourReason::FreeColour)),
            "case 3 rollback" => assert!(out.stats.rollbacks > 0),
            _ => {}
        }
    }
}

#[test]
fn join_rejects_bad_input() {
    let f = &common::join_fixtures()[0];
    let j = &f.join;
    // V1 is two non-adjacent vertices, so one colour covers it but not V2
    let mut c1 = vec![0, 0, NONE, NONE];
    assert_eq!(j.gamma_j(), 2);
    assert!(matches!(extend_over_join(j, &c1, 1), Err(Error::PaletteTooSmall { k: 1, gamma: 2 })));
    assert!(matches!(extend_over_join(j, &f.c1, 1), Err(Error::ColourOutOfPalette { .. })));
    c1[j.v1()[0]] = NONE;
    assert!(extend_over_join(j, &c1, f.l).is_err());
}

#[test]
fn compositions_colour_within_the_bound() {
    let guard = OracleGuard::default();
    for seed in 0..300u64 {
        let sc = random_strip_composition(seed, 12);
        let tree = sc.to_tree().unwrap();
        let g = tree.graph();
        assert!(g.is_quasi_line(), "seed {seed}");
        let c = colour_decomposition(&tree).unwrap_or_else(|e| panic!("seed {seed}: {e}"));
        let gamma = local_vertex_bound_bf(g, &guard).unwrap();
        assert_eq!(gamma, local_vertex_bound(g));
        g.check_colouring(&c.colours).unwrap();
        assert!(colours_used(&c.colours) <= gamma, "seed {seed}");
        assert!(chromatic_number_bf(g, &guard).unwrap() <= gamma, "seed {seed}");
        let text = write_qltree(&tree);
        assert_eq!(parse_qltree(&text, None).unwrap(), tree, "seed {seed}");
    }
}

#[test]
fn tree_fixtures() {
    let guard = OracleGuard::parse("24,24,12,30").unwrap();
    for (name, used) in [("k3-join.qlt", 3), ("c5.qlt", 3), ("rollback.qlt", 9)] {
        let path = common::fixture(name);
        let tree = parse_qltree(&std::fs::read_to_string(&path).unwrap(), path.parent()).unwrap();
        let c = colour_decomposition(&tree).unwrap();
        tree.graph().check_colouring(&c.colours).unwrap();
        assert_eq!(colours_used(&c.colours), used, "{name}");
        assert_eq!(chromatic_number_bf(tree.graph(), &guard).unwrap(), used, "{name}");
    }
}

#[test]
fn line_leaves_may_live_in_their_own_file() {
    let dir = std::env::temp_dir().join(format!("lc-qltree-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    std::fs::copy(common::fixture("c5.mg"), dir.join("c5.mg")).unwrap();
    let text = "p qltree\nleaf line c5.mg\n";
    let tree = parse_qltree(text, Some(&dir)).unwrap();
    assert_eq!(tree.graph().m(), 5);
    assert!(matches!(
        parse_qltree("p qltree\nleaf line nowhere.mg\n", Some(&dir)),
        Err(Error::Parse { line: 2, .. })
    ));
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn malformed_tree_names_its_line() {
    let text = "p qltree\nleaf line inline 2 1\ne 0 1\nnode cut 0 7\n";
    match parse_qltree(text, None) {
        Err(Error::Parse { line, .. }) => assert_eq!(line, 4),
        other => panic!("{other:?}"),
    }
}
