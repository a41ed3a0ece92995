//! Text form of decomposition trees.
//!
//! ```text
//! p qltree
//! leaf line inline <n> <m> [<id>...]   then m lines `e <u> <v>`
//! leaf line <path> [<id>...]           multigraph file, relative to the tree
//! leaf circ <n>                        then n lines `pt <id> <angle>` and any
//!                                      number of `arc <from> <to>`
//! node cut <child> <child> [<id>...]
//! node join <child> X1:<ids> Y1:<ids> V2:<block> X2:<ids> Y2:<ids>
//! ```
//!
//! Records are numbered from 0 in file order and a node may only name
//! earlier records; the last record is the root. Line-leaf ids default to
//! `0..m`. `<ids>` is a comma-separated list, possibly empty. A `V2` block is
//! `<id>@<coord>,...;<lo>..<hi>,...`: the points of a linear interval graph
//! and its intervals. Angles and coordinates are integers or fractions `a/b`;
//! angles lie in `[0, 1)`.

use std::fmt::Write as _;
use std::path::Path;

use num_rational::Rational64;

use crate::error::{Error, Result};
use crate::io::{num, parse_multigraph, records};
use crate::multigraph::Multigraph;

use super::interval::{CircularIntervalGraph, LinearIntervalGraph};
use super::tree::{DecompositionTree, Node};

fn rational(line: usize, tok: &str) -> Result<Rational64> {
    let bad = || Error::parse(line, format!("expected a number or fraction, found {tok:?}"));
    match tok.split_once('/') {
        Some((a, b)) => {
            let (a, b): (i64, i64) = (a.parse().map_err(|_| bad())?, b.parse().map_err(|_| bad())?);
            if b == 0 {
                return Err(bad());
            }
            Ok(Rational64::new(a, b))
        }
        None => Ok(Rational64::from_integer(tok.parse().map_err(|_| bad())?)),
    }
}

fn angle(line: usize, tok: &str) -> Result<Rational64> {
    let a = rational(line, tok)?;
    if a < Rational64::from_integer(0) || a >= Rational64::from_integer(1) {
        return Err(Error::parse(line, format!("angle {a} outside [0, 1)")));
    }
    Ok(a)
}

fn id_list(line: usize, body: &str) -> Result<Vec<usize>> {
    body.split(',').filter(|s| !s.is_empty()).map(|t| num(line, t)).collect()
}

fn labelled<'a>(line: usize, tok: &'a str, label: &str) -> Result<&'a str> {
    tok.strip_prefix(label)
        .and_then(|rest| rest.strip_prefix(':'))
        .ok_or_else(|| Error::parse(line, format!("expected `{label}:...`, found {tok:?}")))
}

fn v2_block(line: usize, body: &str) -> Result<(LinearIntervalGraph, Vec<usize>)> {
    let (pts, ivs) = body
        .split_once(';')
        .ok_or_else(|| Error::parse(line, "V2 block needs `;` between points and intervals"))?;
    let mut points: Vec<(Rational64, usize)> = Vec::new();
    for p in pts.split(',').filter(|s| !s.is_empty()) {
        let (id, at) = p
            .split_once('@')
            .ok_or_else(|| Error::parse(line, format!("point {p:?} is not `<id>@<coord>`")))?;
        points.push((rational(line, at)?, num(line, id)?));
    }
    points.sort();
    let mut intervals = Vec::new();
    for iv in ivs.split(',').filter(|s| !s.is_empty()) {
        let (lo, hi) = iv
            .split_once("..")
            .ok_or_else(|| Error::parse(line, format!("interval {iv:?} is not `<lo>..<hi>`")))?;
        intervals.push((rational(line, lo)?, rational(line, hi)?));
    }
    let li = LinearIntervalGraph::new(points.iter().map(|p| p.0).collect(), intervals)
        .map_err(|e| Error::parse(line, e.to_string()))?;
    Ok((li, points.into_iter().map(|p| p.1).collect()))
}

enum Pending {
    Line {
        line: usize,
        n: usize,
        m: usize,
        ids: Option<Vec<usize>>,
        edges: Vec<(usize, usize)>,
    },
    Circ {
        line: usize,
        n: usize,
        pts: Vec<(usize, Rational64)>,
        arcs: Vec<(Rational64, Rational64)>,
    },
}

fn line_node(line: usize, graph: Multigraph, ids: Option<Vec<usize>>) -> Result<Node> {
    let ids = ids.unwrap_or_else(|| (0..graph.m()).collect());
    if ids.len() != graph.m() {
        return Err(Error::parse(line, format!("{} ids for {} edges", ids.len(), graph.m())));
    }
    Ok(Node::Line { graph, ids })
}

fn finish(p: Pending) -> Result<Node> {
    match p {
        Pending::Line { line, n, m, ids, edges } => {
            if edges.len() != m {
                return Err(Error::parse(line, format!("leaf promises {m} edges, found {}", edges.len())));
            }
            let graph = Multigraph::from_edges(n, &edges).map_err(|e| Error::parse(line, e.to_string()))?;
            line_node(line, graph, ids)
        }
        Pending::Circ { line, n, pts, arcs } => {
            if pts.len() != n {
                return Err(Error::parse(line, format!("leaf promises {n} points, found {}", pts.len())));
            }
            let (ids, points): (Vec<usize>, Vec<Rational64>) = pts.into_iter().unzip();
            let graph = CircularIntervalGraph::new(points, arcs).map_err(|e| Error::parse(line, e.to_string()))?;
            Ok(Node::Circ { graph, ids })
        }
    }
}

/// Parses a tree; `base` resolves `leaf line <path>` records.
pub fn parse_qltree(text: &str, base: Option<&Path>) -> Result<DecompositionTree> {
    let mut header = false;
    let mut nodes = Vec::new();
    let mut pending: Option<Pending> = None;
    let mut last = 0;
    for (line, toks) in records(text) {
        last = line;
        let head = (toks[0], toks.get(1).copied().unwrap_or(""));
        match head {
            ("p", kind) => {
                if header || kind != "qltree" || toks.len() != 2 {
                    return Err(Error::parse(line, "expected a single `p qltree` header"));
                }
                header = true;
                continue;
            }
            _ if !header => return Err(Error::parse(line, "record before `p qltree` header")),
            ("e", _) => match pending.as_mut() {
                Some(Pending::Line { edges, .. }) if toks.len() == 3 => {
                    edges.push((num(line, toks[1])?, num(line, toks[2])?));
                    continue;
                }
                _ => return Err(Error::parse(line, "`e` outside an inline line leaf")),
            },
            ("pt", _) => match pending.as_mut() {
                Some(Pending::Circ { pts, .. }) if toks.len() == 3 => {
                    pts.push((num(line, toks[1])?, angle(line, toks[2])?));
                    continue;
                }
                _ => return Err(Error::parse(line, "`pt` outside a circular leaf")),
            },
            ("arc", _) => match pending.as_mut() {
                Some(Pending::Circ { arcs, .. }) if toks.len() == 3 => {
                    arcs.push((angle(line, toks[1])?, angle(line, toks[2])?));
                    continue;
                }
                _ => return Err(Error::parse(line, "`arc` outside a circular leaf")),
            },
            _ => {}
        }
        if let Some(p) = pending.take() {
            nodes.push(finish(p)?);
        }
        match head {
            ("leaf", "line") if toks.get(2) == Some(&"inline") => {
                if toks.len() < 5 {
                    return Err(Error::parse(line, "expected `leaf line inline <n> <m> [ids]`"));
                }
                let ids = (toks.len() > 5)
                    .then(|| toks[5..].iter().map(|t| num(line, t)).collect::<Result<Vec<_>>>())
                    .transpose()?;
                pending = Some(Pending::Line {
                    line,
                    n: num(line, toks[3])?,
                    m: num(line, toks[4])?,
                    ids,
                    edges: Vec::new(),
                });
            }
            ("leaf", "line") => {
                let file = toks.get(2).ok_or_else(|| Error::parse(line, "expected a path"))?;
                let path = base.map_or_else(|| Path::new(file).to_path_buf(), |b| b.join(file));
                let text = std::fs::read_to_string(&path)
                    .map_err(|e| Error::parse(line, format!("{}: {e}", path.display())))?;
                let graph = parse_multigraph(&text).map_err(|e| Error::parse(line, format!("{}: {e}", path.display())))?;
                let ids = (toks.len() > 3)
                    .then(|| toks[3..].iter().map(|t| num(line, t)).collect::<Result<Vec<_>>>())
                    .transpose()?;
                nodes.push(line_node(line, graph, ids)?);
            }
            ("leaf", "circ") => {
                if toks.len() != 3 {
                    return Err(Error::parse(line, "expected `leaf circ <n>`"));
                }
                pending = Some(Pending::Circ {
                    line,
                    n: num(line, toks[2])?,
                    pts: Vec::new(),
                    arcs: Vec::new(),
                });
            }
            ("node", "cut") => {
                if toks.len() < 4 {
                    return Err(Error::parse(line, "expected `node cut <child> <child> [ids]`"));
                }
                nodes.push(Node::Cut {
                    left: num(line, toks[2])?,
                    right: num(line, toks[3])?,
                    cut: toks[4..].iter().map(|t| num(line, t)).collect::<Result<_>>()?,
                });
            }
            ("node", "join") => {
                if toks.len() != 8 {
                    return Err(Error::parse(line, "expected `node join <child> X1: Y1: V2: X2: Y2:`"));
                }
                let (v2, v2_ids) = v2_block(line, labelled(line, toks[5], "V2")?)?;
                nodes.push(Node::Join {
                    g1: num(line, toks[2])?,
                    x1: id_list(line, labelled(line, toks[3], "X1")?)?,
                    y1: id_list(line, labelled(line, toks[4], "Y1")?)?,
                    v2,
                    v2_ids,
                    x2: id_list(line, labelled(line, toks[6], "X2")?)?,
                    y2: id_list(line, labelled(line, toks[7], "Y2")?)?,
                });
            }
            (a, b) => return Err(Error::parse(line, format!("unknown record `{a} {b}`"))),
        }
    }
    if let Some(p) = pending.take() {
        nodes.push(finish(p)?);
    }
    if !header {
        return Err(Error::parse(last.max(1), "missing `p qltree` header"));
    }
    DecompositionTree::new(nodes).map_err(|e| match e {
        Error::Structure(msg) => Error::parse(last.max(1), msg),
        other => other,
    })
}

fn ids(vs: &[usize]) -> String {
    vs.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(",")
}

/// Writes a tree with every leaf inline.
pub fn write_qltree(t: &DecompositionTree) -> String {
    let mut out = String::from("p qltree\n");
    for node in t.nodes() {
        match node {
            Node::Line { graph, ids } => {
                let _ = write!(out, "leaf line inline {} {}", graph.n(), graph.m());
                for id in ids {
                    let _ = write!(out, " {id}");
                }
                out.push('\n');
                for &(u, v) in graph.edges() {
                    let _ = writeln!(out, "e {u} {v}");
                }
            }
            Node::Circ { graph, ids } => {
                let _ = writeln!(out, "leaf circ {}", graph.n());
                for (id, p) in ids.iter().zip(graph.points()) {
                    let _ = writeln!(out, "pt {id} {p}");
                }
                for (a, b) in graph.arcs() {
                    let _ = writeln!(out, "arc {a} {b}");
                }
            }
            Node::Cut { left, right, cut } => {
                let _ = write!(out, "node cut {left} {right}");
                for v in cut {
                    let _ = write!(out, " {v}");
                }
                out.push('\n');
            }
            Node::Join {
                g1,
                x1,
                y1,
                v2,
                v2_ids,
                x2,
                y2,
            } => {
                let pts: Vec<String> = v2_ids.iter().zip(v2.points()).map(|(id, p)| format!("{id}@{p}")).collect();
                let ivs: Vec<String> = v2.intervals().iter().map(|(a, b)| format!("{a}..{b}")).collect();
                let _ = writeln!(
                    out,
                    "node join {g1} X1:{} Y1:{} V2:{};{} X2:{} Y2:{}",
                    ids(x1),
                    ids(y1),
                    pts.join(","),
                    ivs.join(","),
                    ids(x2),
                    ids(y2)
                );
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quasiline::random::random_strip_composition;

    const C5: &str = "p qltree
c an edge, then a path of three joined to its ends
leaf line inline 3 2
e 0 1
e 1 2
node join 0 X1:0 Y1:1 V2:2@0,3@1,4@2;0..1,1..2 X2:2 Y2:4
";

    #[test]
    fn c5_round_trip() {
        let t = parse_qltree(C5, None).unwrap();
        assert_eq!(t.n(), 5);
        assert_eq!(t.graph().m(), 5);
        let text = write_qltree(&t);
        assert_eq!(parse_qltree(&text, None).unwrap(), t);
        assert_eq!(write_qltree(&parse_qltree(&text, None).unwrap()), text);
    }

    #[test]
    fn circular_leaf_and_fractions() {
        let text = "p qltree\nleaf circ 3\npt 0 0\npt 1 1/3\npt 2 2/3\narc 2/3 1/3\n";
        let t = parse_qltree(text, None).unwrap();
        assert_eq!(t.graph().edges(), vec![(0, 1), (0, 2), (1, 2)]);
        assert_eq!(parse_qltree(&write_qltree(&t), None).unwrap(), t);
    }

    #[test]
    fn errors_carry_lines() {
        let cases = [
            ("leaf circ 1\n", 1),
            ("p qltree\nleaf circ 2\npt 0 0\n", 2),
            ("p qltree\ne 0 1\n", 2),
            ("p qltree\nleaf circ 1\npt 0 3/0\n", 3),
            ("p qltree\nleaf line inline 2 1\ne 0 1\nnode join 0 X1:0 Y1:1 V2:1@0; X2:1 Y2:\n", 4),
            ("p qltree\nnode frob 0\n", 2),
        ];
        for (text, want) in cases {
            match parse_qltree(text, None) {
                Err(Error::Parse { line, .. }) => assert_eq!(line, want, "{text:?}"),
                other => panic!("{text:?}: {other:?}"),
            }
        }
    }

    #[test]
    fn generated_trees_round_trip() {
        for seed in 0..50 {
            let t = random_strip_composition(seed, 12).to_tree().unwrap();
            let text = write_qltree(&t);
            let back = parse_qltree(&text, None).unwrap();
            assert_eq!(back, t, "seed {seed}");
            assert_eq!(back.graph(), t.graph());
        }
    }
}
