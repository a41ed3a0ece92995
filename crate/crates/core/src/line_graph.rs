//! Line graphs of multigraphs.
//!
//! Colouring a line graph never builds it: the edge colourer runs on the
//! multigraph and its colours are read as vertex colours. [`line_graph`] is
//! for checking and for small inputs.

use crate::error::Result;
use crate::extend::edge_colour_optimal_local;
use crate::multigraph::Multigraph;
use crate::oracle::{self, OracleGuard};
use crate::simple::SimpleGraph;

/// `L(g)`: one vertex per edge id, adjacent when the edges share an endpoint.
pub fn line_graph(g: &Multigraph) -> SimpleGraph {
    let mut h = SimpleGraph::new(g.m());
    for v in 0..g.n() {
        let inc = g.incident(v);
        for (i, &(_, e)) in inc.iter().enumerate() {
            for &(_, f) in &inc[i + 1..] {
                h.add_edge(e, f).expect("edge ids are distinct");
            }
        }
    }
    h
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Mismatch {
    /// Degree of the line-graph vertex differs from `d(u) + d(v) - μ(uv) - 1`.
    Degree { edge: usize, expected: usize, got: usize },
    /// Largest clique through the vertex differs from `max{d(u), d(v), t(uv)}`.
    Clique { edge: usize, expected: usize, got: usize },
    /// `γ_l(L(g))` differs from `γ′_l(g)`.
    Bound { expected: usize, got: usize },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LineReport {
    pub edge_bound: usize,
    pub vertex_bound: usize,
    pub mismatches: Vec<Mismatch>,
}

/// Compares the degrees, clique numbers and local bound of `L(g)` with the
/// values predicted from `g`.
pub fn check_line_correspondence(g: &Multigraph, guard: &OracleGuard) -> Result<LineReport> {
    let h = line_graph(g);
    let edge_bound = g.local_edge_bound().gamma;
    let vertex_bound = oracle::local_vertex_bound_bf(&h, guard)?;
    let mut mismatches = Vec::new();
    for (e, &(u, v)) in g.edges().iter().enumerate() {
        let (du, dv, mu) = (g.degree(u), g.degree(v), g.multiplicity(u, v)?);
        let expected = du + dv - mu - 1;
        if h.degree(e) != expected {
            mismatches.push(Mismatch::Degree {
                edge: e,
                expected,
                got: h.degree(e),
            });
        }
        let expected = du.max(dv).max(g.triangle_weight(u, v)?);
        let got = oracle::max_clique_containing(&h, e, guard)?;
        if got != expected {
            mismatches.push(Mismatch::Clique { edge: e, expected, got });
        }
    }
    if vertex_bound != edge_bound {
        mismatches.push(Mismatch::Bound {
            expected: edge_bound,
            got: vertex_bound,
        });
    }
    Ok(LineReport {
        edge_bound,
        vertex_bound,
        mismatches,
    })
}

/// Colours `L(g)` with at most `γ′_l(g)` colours; entry `e` is the colour of
/// the vertex for edge `e`. Also returns the bound.
pub fn vertex_colour_line_graph(g: &Multigraph) -> Result<(Vec<usize>, usize)> {
    let (c, report) = edge_colour_optimal_local(g)?;
    let colours = c
        .assignment()
        .into_iter()
        .map(|x| x.expect("edge colouring is complete"))
        .collect();
    Ok((colours, report.gamma))
}
