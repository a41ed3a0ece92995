#![allow(dead_code)]

use std::path::PathBuf;

use linecolour::quasiline::join::{CanonicalJoin, NONE};
use linecolour::SimpleGraph;

pub fn fixture(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("fixtures").join(name)
}

pub struct JoinFixture {
    pub label: String,
    pub join: CanonicalJoin,
    /// Universe-length colouring, `NONE` off `V1`.
    pub c1: Vec<usize>,
    pub l: usize,
}

fn nums(rest: &str) -> Vec<usize> {
    rest.split_whitespace().map(|t| t.parse().expect("number")).collect()
}

/// Reads `tests/data/joins.txt`: blocks opened by a `c <label>` line and
/// closed by `end`.
pub fn join_fixtures() -> Vec<JoinFixture> {
    let path = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/data/joins.txt");
    let text = std::fs::read_to_string(path).expect("join fixtures");
    let mut out = Vec::new();
    let mut lines = text.lines();
    while let Some(head) = lines.next() {
        let Some(label) = head.strip_prefix("c ") else { continue };
        let size = nums(lines.next().and_then(|l| l.strip_prefix("join ")).expect("join line"));
        let (n, l) = (size[0], size[1]);
        let mut g = SimpleGraph::new(n);
        let mut sets: Vec<Vec<usize>> = Vec::new();
        let mut colours = Vec::new();
        for line in lines.by_ref() {
            if line == "end" {
                break;
            }
            let (tag, rest) = line.split_once(' ').unwrap_or((line, ""));
            match tag {
                "e" => {
                    let uv = nums(rest);
                    g.add_edge(uv[0], uv[1]).expect("edge in range");
                }
                "c1" => colours = nums(rest),
                _ => sets.push(nums(rest)),
            }
        }
        let [v1, x1, y1, v2, x2, y2]: [Vec<usize>; 6] = sets.try_into().expect("six vertex sets");
        let mut c1 = vec![NONE; n];
        for (&v, &c) in v1.iter().zip(&colours) {
            c1[v] = c;
        }
        let join = CanonicalJoin::new(g, v1, x1, y1, v2, x2, y2).expect("fixture is canonical");
        out.push(JoinFixture {
            label: label.to_string(),
            join,
            c1,
            l,
        });
    }
    out
}

/// Checks that `colours` properly colours `g` with colours below `l`.
pub fn proper_within(g: &SimpleGraph, colours: &[usize], l: usize) -> bool {
    g.check_colouring(colours).is_ok() && colours.iter().all(|&c| c < l)
}
