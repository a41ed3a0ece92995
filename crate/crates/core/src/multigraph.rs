//! Loop-free multigraphs and the local chromatic-index bound.

use crate::error::{Error, Result};

/// A loop-free multigraph on vertices `0..n`.
///
/// Edge ids follow insertion order and never change. Parallel edges are kept
/// as distinct ids.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Multigraph {
    n: usize,
    edges: Vec<(usize, usize)>,
    // (neighbour, edge-id) per vertex, in edge-id order
    incident: Vec<Vec<(usize, usize)>>,
    // (neighbour, multiplicity) per vertex, sorted by neighbour
    mult: Vec<Vec<(usize, usize)>>,
}

impl Multigraph {
    pub fn new(n: usize) -> Self {
        Multigraph {
            n,
            edges: Vec::new(),
            incident: vec![Vec::new(); n],
            mult: vec![Vec::new(); n],
        }
    }

    /// Builds a multigraph from an edge list, rejecting loops and
    /// out-of-range endpoints.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Multigraph::new(n);
        for &(u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    /// Adds an isolated vertex and returns its id.
    pub fn add_vertex(&mut self) -> usize {
        self.incident.push(Vec::new());
        self.mult.push(Vec::new());
        self.n += 1;
        self.n - 1
    }

    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<usize> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if u == v {
            return Err(Error::Loop(u));
        }
        let id = self.edges.len();
        self.edges.push((u, v));
        self.incident[u].push((v, id));
        self.incident[v].push((u, id));
        bump(&mut self.mult[u], v);
        bump(&mut self.mult[v], u);
        Ok(id)
    }

    fn check_vertex(&self, v: usize) -> Result<()> {
        if v >= self.n {
            Err(Error::VertexOutOfRange {
                vertex: v,
                n: self.n,
            })
        } else {
            Ok(())
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn endpoints(&self, e: usize) -> (usize, usize) {
        self.edges[e]
    }

    /// The endpoint of `e` that is not `v`.
    pub fn other(&self, e: usize, v: usize) -> usize {
        let (a, b) = self.edges[e];
        if a == v {
            b
        } else {
            a
        }
    }

    /// `(neighbour, edge-id)` pairs at `v`.
    pub fn incident(&self, v: usize) -> &[(usize, usize)] {
        &self.incident[v]
    }

    /// Distinct neighbours of `v` with their multiplicities, sorted.
    pub fn neighbours(&self, v: usize) -> &[(usize, usize)] {
        &self.mult[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.incident[v].len()
    }

    pub fn max_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    fn mu(&self, u: usize, v: usize) -> usize {
        let row = &self.mult[u];
        match row.binary_search_by_key(&v, |&(w, _)| w) {
            Ok(i) => row[i].1,
            Err(_) => 0,
        }
    }

    /// Number of parallel edges between `u` and `v`.
    pub fn multiplicity(&self, u: usize, v: usize) -> Result<usize> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if u == v {
            return Err(Error::SameVertex(u));
        }
        Ok(self.mu(u, v))
    }

    /// Largest number of edges inside `{u, v, w}` over common neighbours `w`.
    /// Falls back to `μ(uv)` when `u` and `v` have no common neighbour.
    pub fn triangle_weight(&self, u: usize, v: usize) -> Result<usize> {
        let m = self.multiplicity(u, v)?;
        if m == 0 {
            return Err(Error::NotAdjacent(u, v));
        }
        Ok(self.triangle_weight_unchecked(u, v, m))
    }

    fn triangle_weight_unchecked(&self, u: usize, v: usize, muv: usize) -> usize {
        let (a, b) = if self.mult[u].len() <= self.mult[v].len() {
            (u, v)
        } else {
            (v, u)
        };
        let mut best = muv;
        for &(w, maw) in &self.mult[a] {
            if w == b {
                continue;
            }
            let mbw = self.mu(b, w);
            if mbw > 0 {
                best = best.max(muv + maw + mbw);
            }
        }
        best
    }

    /// Evaluates the local edge bound over every edge.
    pub fn local_edge_bound(&self) -> EdgeBoundReport {
        let mut terms = Vec::with_capacity(self.m());
        let mut best = 0usize;
        let mut argmax = None;
        for (id, &(u, v)) in self.edges.iter().enumerate() {
            let du = self.degree(u);
            let dv = self.degree(v);
            let muv = self.mu(u, v);
            let t = self.triangle_weight_unchecked(u, v, muv);
            let row = EdgeTerms {
                u2: 2 * du + dv - muv,
                v2: 2 * dv + du - muv,
                t2: du + dv - muv + t,
            };
            let top = row.max2();
            if argmax.is_none() || top > best {
                best = top;
                argmax = Some(id);
            }
            terms.push(row);
        }
        EdgeBoundReport {
            terms,
            gamma: best.div_ceil(2),
            argmax,
        }
    }
}

fn bump(row: &mut Vec<(usize, usize)>, w: usize) {
    match row.binary_search_by_key(&w, |&(x, _)| x) {
        Ok(i) => row[i].1 += 1,
        Err(i) => row.insert(i, (w, 1)),
    }
}

/// The three terms of the bound for one edge, each stored doubled so
/// half-integers stay exact.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct EdgeTerms {
    /// `2 d(u) + d(v) - μ(uv)`
    pub u2: usize,
    /// `2 d(v) + d(u) - μ(uv)`
    pub v2: usize,
    /// `d(u) + d(v) - μ(uv) + t(uv)`
    pub t2: usize,
}

impl EdgeTerms {
    pub fn max2(&self) -> usize {
        self.u2.max(self.v2).max(self.t2)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EdgeBoundReport {
    /// Per edge-id term breakdown.
    pub terms: Vec<EdgeTerms>,
    /// γ′_l: the ceiling of the largest half-term, 0 for an edgeless graph.
    pub gamma: usize,
    /// First edge attaining the maximum.
    pub argmax: Option<usize>,
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families;

    #[test]
    fn multiplicity_counts() {
        let g = families::fat_triangle(3);
        assert_eq!(g.multiplicity(0, 1).unwrap(), 3);
        let c5 = families::cycle(5, 1);
        assert_eq!(c5.multiplicity(0, 2).unwrap(), 0);
        let g = Multigraph::from_edges(3, &[(0, 1), (0, 1), (0, 2)]).unwrap();
        assert_eq!(g.multiplicity(0, 1).unwrap(), 2);
        assert_eq!(g.multiplicity(1, 0).unwrap(), 2);
    }

    #[test]
    fn multiplicity_errors() {
        let g = families::cycle(5, 1);
        assert!(matches!(g.multiplicity(0, 0), Err(Error::SameVertex(0))));
        assert!(matches!(
            g.multiplicity(0, 9),
            Err(Error::VertexOutOfRange { vertex: 9, .. })
        ));
    }

    #[test]
    fn loops_rejected() {
        assert!(matches!(
            Multigraph::from_edges(2, &[(1, 1)]),
            Err(Error::Loop(1))
        ));
    }

    #[test]
    fn triangle_weight_examples() {
        // u=0, v=1, w=2: uv x2, uw x1, vw x3
        let g =
            Multigraph::from_edges(3, &[(0, 1), (0, 1), (0, 2), (1, 2), (1, 2), (1, 2)]).unwrap();
        assert_eq!(g.triangle_weight(0, 1).unwrap(), 6);
        let c5 = families::cycle(5, 1);
        assert_eq!(c5.triangle_weight(0, 1).unwrap(), 1);
        assert_eq!(families::fat_triangle(2).triangle_weight(0, 1).unwrap(), 6);
        assert!(matches!(
            c5.triangle_weight(0, 2),
            Err(Error::NotAdjacent(0, 2))
        ));
    }

    #[test]
    fn gamma_examples() {
        assert_eq!(families::complete(3).local_edge_bound().gamma, 3);
        assert_eq!(families::cycle(5, 2).local_edge_bound().gamma, 5);
        assert_eq!(families::star(3).local_edge_bound().gamma, 3);
        assert_eq!(families::fat_triangle(3).local_edge_bound().gamma, 9);
    }

    #[test]
    fn empty_graph_reports_zero() {
        let r = Multigraph::new(4).local_edge_bound();
        assert_eq!(r.gamma, 0);
        assert!(r.terms.is_empty());
        assert_eq!(r.argmax, None);
    }

    #[test]
    fn terms_are_doubled() {
        // K3: d=2, μ=1, t=3 → u-term 2+½(2-1) = 2.5, t-term ½(2+2-1+3) = 3
        let r = families::complete(3).local_edge_bound();
        assert_eq!(
            r.terms[0],
            EdgeTerms {
                u2: 5,
                v2: 5,
                t2: 6
            }
        );
        assert_eq!(r.argmax, Some(0));
    }
}
