//! Line-oriented text formats.
//!
//! ```text
//! p mgraph <n> <m>      multigraph header, then m lines `e <u> <v>`
//! p graph <n> <m>       simple graph header, same edge lines
//! s colouring <k>       edge colouring, then `l <edge> <colour|0>` per edge
//! v <vertex> <colour>   vertex colouring, one line per vertex
//! ```
//!
//! Vertices and edge ids are 0-based, colours 1-based, `0` means uncoloured.
//! Lines starting with `c` are comments and blank lines are skipped.

use std::fmt::Write as _;

use crate::colouring::PartialEdgeColouring;
use crate::error::{Error, Result};
use crate::multigraph::Multigraph;
use crate::simple::SimpleGraph;

/// Non-comment lines with their 1-based line numbers.
pub(crate) fn records(text: &str) -> impl Iterator<Item = (usize, Vec<&str>)> {
    text.lines().enumerate().filter_map(|(i, line)| {
        let toks: Vec<&str> = line.split_whitespace().collect();
        match toks.first() {
            None => None,
            Some(&"c") => None,
            Some(_) => Some((i + 1, toks)),
        }
    })
}

pub(crate) fn num(line: usize, tok: &str) -> Result<usize> {
    tok.parse()
        .map_err(|_| Error::parse(line, format!("expected a non-negative integer, found {tok:?}")))
}

fn expect_len(line: usize, toks: &[&str], len: usize) -> Result<()> {
    if toks.len() != len {
        return Err(Error::parse(
            line,
            format!("expected {len} fields, found {}", toks.len()),
        ));
    }
    Ok(())
}

fn parse_edges(text: &str, kind: &str) -> Result<(usize, Vec<(usize, usize)>)> {
    let mut header = None;
    let mut edges = Vec::new();
    let mut last = 0;
    for (line, toks) in records(text) {
        last = line;
        match (toks[0], header) {
            ("p", None) => {
                expect_len(line, &toks, 4)?;
                if toks[1] != kind {
                    return Err(Error::parse(
                        line,
                        format!("expected `p {kind}`, found `p {}`", toks[1]),
                    ));
                }
                header = Some((num(line, toks[2])?, num(line, toks[3])?));
            }
            ("p", Some(_)) => return Err(Error::parse(line, "duplicate header")),
            ("e", Some((n, _))) => {
                expect_len(line, &toks, 3)?;
                let (u, v) = (num(line, toks[1])?, num(line, toks[2])?);
                for x in [u, v] {
                    if x >= n {
                        return Err(Error::parse(line, format!("vertex {x} out of range (n = {n})")));
                    }
                }
                if u == v {
                    return Err(Error::parse(line, format!("loop at vertex {u}")));
                }
                edges.push((u, v));
            }
            ("e", None) => return Err(Error::parse(line, "edge before header")),
            (other, _) => return Err(Error::parse(line, format!("unknown record {other:?}"))),
        }
    }
    let (n, m) = header.ok_or_else(|| Error::parse(last.max(1), format!("missing `p {kind}` header")))?;
    if edges.len() != m {
        return Err(Error::parse(
            last.max(1),
            format!("header promises {m} edges, found {}", edges.len()),
        ));
    }
    Ok((n, edges))
}

pub fn parse_multigraph(text: &str) -> Result<Multigraph> {
    let (n, edges) = parse_edges(text, "mgraph")?;
    Multigraph::from_edges(n, &edges)
}

pub fn write_multigraph(g: &Multigraph) -> String {
    let mut out = format!("p mgraph {} {}\n", g.n(), g.m());
    for &(u, v) in g.edges() {
        let _ = writeln!(out, "e {u} {v}");
    }
    out
}

/// Parses a simple graph; a repeated pair is an error.
pub fn parse_simple_graph(text: &str) -> Result<SimpleGraph> {
    let (n, edges) = parse_edges(text, "graph")?;
    let mut g = SimpleGraph::new(n);
    for (u, v) in edges {
        if !g.add_edge(u, v)? {
            return Err(Error::structure(format!("edge {u} {v} listed twice")));
        }
    }
    Ok(g)
}

pub fn write_simple_graph(g: &SimpleGraph) -> String {
    let mut out = format!("p graph {} {}\n", g.n(), g.m());
    for (u, v) in g.edges() {
        let _ = writeln!(out, "e {u} {v}");
    }
    out
}

/// Reads an edge colouring of `g`; properness is checked.
pub fn parse_colouring(text: &str, g: &Multigraph) -> Result<PartialEdgeColouring> {
    let mut k = None;
    let mut assignment: Vec<Option<Option<usize>>> = vec![None; g.m()];
    let mut last = 0;
    for (line, toks) in records(text) {
        last = line;
        match (toks[0], k) {
            ("s", None) => {
                expect_len(line, &toks, 3)?;
                if toks[1] != "colouring" {
                    return Err(Error::parse(line, "expected `s colouring <k>`"));
                }
                k = Some(num(line, toks[2])?);
            }
            ("l", Some(k)) => {
                expect_len(line, &toks, 3)?;
                let (e, col) = (num(line, toks[1])?, num(line, toks[2])?);
                if e >= g.m() {
                    return Err(Error::parse(line, format!("edge {e} out of range (m = {})", g.m())));
                }
                if col > k {
                    return Err(Error::parse(line, format!("colour {col} outside 1..={k}")));
                }
                if assignment[e].is_some() {
                    return Err(Error::parse(line, format!("edge {e} listed twice")));
                }
                assignment[e] = Some(col.checked_sub(1));
            }
            ("s", Some(_)) => return Err(Error::parse(line, "duplicate header")),
            ("l", None) => return Err(Error::parse(line, "colour line before header")),
            (other, _) => return Err(Error::parse(line, format!("unknown record {other:?}"))),
        }
    }
    let k = k.ok_or_else(|| Error::parse(last.max(1), "missing `s colouring` header"))?;
    let assignment: Vec<Option<usize>> = assignment
        .into_iter()
        .enumerate()
        .map(|(e, a)| a.ok_or_else(|| Error::parse(last.max(1), format!("edge {e} has no line"))))
        .collect::<Result<_>>()?;
    PartialEdgeColouring::from_assignment(g, k, &assignment)
}

pub fn write_colouring(c: &PartialEdgeColouring) -> String {
    let mut out = format!("s colouring {}\n", c.k());
    for (e, col) in c.assignment().into_iter().enumerate() {
        let _ = writeln!(out, "l {e} {}", col.map_or(0, |x| x + 1));
    }
    out
}

/// Reads `v <vertex> <colour>` lines covering vertices `0..n` exactly once.
pub fn parse_vertex_colouring(text: &str, n: usize) -> Result<Vec<usize>> {
    let mut out = vec![None; n];
    let mut last = 0;
    for (line, toks) in records(text) {
        last = line;
        if toks[0] != "v" {
            return Err(Error::parse(line, format!("unknown record {:?}", toks[0])));
        }
        expect_len(line, &toks, 3)?;
        let (v, col) = (num(line, toks[1])?, num(line, toks[2])?);
        if v >= n {
            return Err(Error::parse(line, format!("vertex {v} out of range (n = {n})")));
        }
        if col == 0 {
            return Err(Error::parse(line, "colours start at 1"));
        }
        if out[v].replace(col - 1).is_some() {
            return Err(Error::parse(line, format!("vertex {v} listed twice")));
        }
    }
    out.into_iter()
        .enumerate()
        .map(|(v, c)| c.ok_or_else(|| Error::parse(last.max(1), format!("vertex {v} has no colour"))))
        .collect()
}

pub fn write_vertex_colouring(colours: &[usize]) -> String {
    let mut out = String::new();
    for (v, c) in colours.iter().enumerate() {
        let _ = writeln!(out, "v {v} {}", c + 1);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families;

    #[test]
    fn multigraph_round_trip() {
        let text = "c triangle\np mgraph 3 4\ne 0 1\ne 0 1\ne 1 2\n\ne 2 0\n";
        let g = parse_multigraph(text).unwrap();
        assert_eq!(g.m(), 4);
        assert_eq!(g.multiplicity(0, 1).unwrap(), 2);
        let out = write_multigraph(&g);
        assert_eq!(out, "p mgraph 3 4\ne 0 1\ne 0 1\ne 1 2\ne 2 0\n");
        assert_eq!(write_multigraph(&parse_multigraph(&out).unwrap()), out);
    }

    #[test]
    fn multigraph_errors_name_lines() {
        let cases = [
            ("p mgraph 2 1\ne 0 0\n", 2),
            ("p mgraph 2 1\ne 0 5\n", 2),
            ("e 0 1\n", 1),
            ("p mgraph 2 2\ne 0 1\n", 2),
            ("p mgraph 2 1\nx 0 1\n", 2),
            ("p graph 2 1\ne 0 1\n", 1),
            ("p mgraph 2 1\ne 0 one\n", 2),
        ];
        for (text, want) in cases {
            match parse_multigraph(text) {
                Err(Error::Parse { line, .. }) => assert_eq!(line, want, "{text:?}"),
                other => panic!("{text:?}: {other:?}"),
            }
        }
    }

    #[test]
    fn colouring_round_trip() {
        let g = families::path(3);
        let mut c = PartialEdgeColouring::new(&g, 2);
        c.assign(0, 1).unwrap();
        let text = write_colouring(&c);
        assert_eq!(text, "s colouring 2\nl 0 2\nl 1 0\n");
        assert_eq!(parse_colouring(&text, &g).unwrap(), c);
        assert!(parse_colouring("s colouring 2\nl 0 1\nl 1 1\n", &g).is_err());
        assert!(parse_colouring("s colouring 2\nl 0 3\nl 1 1\n", &g).is_err());
        assert!(parse_colouring("s colouring 2\nl 0 1\n", &g).is_err());
    }

    #[test]
    fn simple_and_vertex_formats() {
        let h = parse_simple_graph("p graph 3 2\ne 0 1\ne 1 2\n").unwrap();
        assert_eq!(write_simple_graph(&h), "p graph 3 2\ne 0 1\ne 1 2\n");
        assert!(parse_simple_graph("p graph 3 2\ne 0 1\ne 1 0\n").is_err());
        let text = write_vertex_colouring(&[0, 1, 0]);
        assert_eq!(text, "v 0 1\nv 1 2\nv 2 1\n");
        assert_eq!(parse_vertex_colouring(&text, 3).unwrap(), vec![0, 1, 0]);
        assert!(parse_vertex_colouring("v 0 1\n", 2).is_err());
    }
}
