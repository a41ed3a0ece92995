//! Partial proper edge colourings with O(1) incidence probes.
//!
//! Colours are `0..k` inside the library; the text formats shift them to
//! `1..=k`.

use std::fmt;

use crate::error::{Error, Result};
use crate::multigraph::Multigraph;

const NONE: u32 = u32::MAX;

/// Edge colouring over a fixed palette, possibly leaving edges uncoloured.
///
/// Keeps a `vertex × colour → edge` table so that "is colour `c` missing at
/// `v`" and "which edge carries `c` at `v`" are single lookups.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PartialEdgeColouring {
    k: usize,
    n: usize,
    endpoints: Vec<(usize, usize)>,
    colour: Vec<u32>,
    at: Vec<u32>,
    coloured_deg: Vec<usize>,
    ops: u64,
}

impl PartialEdgeColouring {
    /// All edges of `g` uncoloured.
    pub fn new(g: &Multigraph, k: usize) -> Self {
        PartialEdgeColouring {
            k,
            n: g.n(),
            endpoints: g.edges().to_vec(),
            colour: vec![NONE; g.m()],
            at: vec![NONE; g.n() * k],
            coloured_deg: vec![0; g.n()],
            ops: 0,
        }
    }

    /// Loads an assignment without checking properness. Conflicting edges
    /// stay in the assignment but only one of them is indexed, so
    /// [`validate`](Self::validate) reports the clash.
    pub fn from_assignment_unchecked(
        g: &Multigraph,
        k: usize,
        assignment: &[Option<usize>],
    ) -> Result<Self> {
        if assignment.len() != g.m() {
            return Err(Error::structure(format!(
                "assignment has {} entries for {} edges",
                assignment.len(),
                g.m()
            )));
        }
        let mut c = PartialEdgeColouring::new(g, k);
        for (e, &col) in assignment.iter().enumerate() {
            if let Some(col) = col {
                if col >= k {
                    return Err(Error::ColourOutOfPalette { colour: col, k });
                }
                c.colour[e] = col as u32;
                let (u, v) = c.endpoints[e];
                for x in [u, v] {
                    if c.at[x * k + col] == NONE {
                        c.at[x * k + col] = e as u32;
                    }
                    c.coloured_deg[x] += 1;
                }
            }
        }
        Ok(c)
    }

    /// Loads an assignment, failing on the first conflict.
    pub fn from_assignment(g: &Multigraph, k: usize, assignment: &[Option<usize>]) -> Result<Self> {
        let mut c = PartialEdgeColouring::new(g, k);
        if assignment.len() != g.m() {
            return Err(Error::structure(format!(
                "assignment has {} entries for {} edges",
                assignment.len(),
                g.m()
            )));
        }
        for (e, &col) in assignment.iter().enumerate() {
            if let Some(col) = col {
                c.assign(e, col)?;
            }
        }
        Ok(c)
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.colour.len()
    }

    pub fn endpoints(&self, e: usize) -> (usize, usize) {
        self.endpoints[e]
    }

    pub fn colour(&self, e: usize) -> Option<usize> {
        match self.colour[e] {
            NONE => None,
            c => Some(c as usize),
        }
    }

    /// Edge carrying colour `c` at `v`, if any.
    #[inline]
    pub fn edge_at(&self, v: usize, c: usize) -> Option<usize> {
        match self.at[v * self.k + c] {
            NONE => None,
            e => Some(e as usize),
        }
    }

    #[inline]
    pub fn is_missing(&self, v: usize, c: usize) -> bool {
        self.at[v * self.k + c] == NONE
    }

    /// Colours of `0..k` on no edge at `v`, ascending.
    pub fn missing_colours(&self, v: usize) -> Vec<usize> {
        (0..self.k).filter(|&c| self.is_missing(v, c)).collect()
    }

    /// Number of coloured edges at `v`.
    pub fn coloured_degree(&self, v: usize) -> usize {
        self.coloured_deg[v]
    }

    pub fn assignment(&self) -> Vec<Option<usize>> {
        (0..self.m()).map(|e| self.colour(e)).collect()
    }

    pub fn is_complete(&self) -> bool {
        self.colour.iter().all(|&c| c != NONE)
    }

    pub fn uncoloured_edges(&self) -> Vec<usize> {
        (0..self.m()).filter(|&e| self.colour[e] == NONE).collect()
    }

    /// Number of distinct colours in use.
    pub fn colours_used(&self) -> usize {
        let mut seen = vec![false; self.k];
        for &c in &self.colour {
            if c != NONE {
                seen[c as usize] = true;
            }
        }
        seen.into_iter().filter(|&s| s).count()
    }

    /// Elementary operations (assignments, removals, chain steps) so far.
    pub fn ops(&self) -> u64 {
        self.ops
    }

    pub(crate) fn tick(&mut self, n: u64) {
        self.ops += n;
    }

    fn check_edge(&self, e: usize) -> Result<()> {
        if e >= self.m() {
            Err(Error::EdgeOutOfRange { edge: e, m: self.m() })
        } else {
            Ok(())
        }
    }

    /// Colours edge `e` with `c`; `c` must be missing at both endpoints.
    pub fn assign(&mut self, e: usize, c: usize) -> Result<()> {
        self.check_edge(e)?;
        if c >= self.k {
            return Err(Error::ColourOutOfPalette { colour: c, k: self.k });
        }
        if self.colour[e] != NONE {
            return Err(Error::AlreadyColoured(e));
        }
        let (u, v) = self.endpoints[e];
        for x in [u, v] {
            if let Some(other) = self.edge_at(x, c) {
                return Err(Error::ColourConflict {
                    edge: other,
                    colour: c,
                    vertex: x,
                });
            }
        }
        self.put(e, c);
        Ok(())
    }

    /// Removes the colour of `e`, returning it. Uncoloured edges are left alone.
    pub fn unassign(&mut self, e: usize) -> Result<Option<usize>> {
        self.check_edge(e)?;
        Ok(self.take(e))
    }

    #[inline]
    pub(crate) fn put(&mut self, e: usize, c: usize) {
        debug_assert_eq!(self.colour[e], NONE);
        let (u, v) = self.endpoints[e];
        debug_assert!(self.is_missing(u, c) && self.is_missing(v, c));
        self.colour[e] = c as u32;
        self.at[u * self.k + c] = e as u32;
        self.at[v * self.k + c] = e as u32;
        self.coloured_deg[u] += 1;
        self.coloured_deg[v] += 1;
        self.ops += 1;
    }

    #[inline]
    pub(crate) fn take(&mut self, e: usize) -> Option<usize> {
        let c = self.colour(e)?;
        let (u, v) = self.endpoints[e];
        self.colour[e] = NONE;
        self.at[u * self.k + c] = NONE;
        self.at[v * self.k + c] = NONE;
        self.coloured_deg[u] -= 1;
        self.coloured_deg[v] -= 1;
        self.ops += 1;
        Some(c)
    }

    /// The `{alpha, beta}`-component through `start`, as an edge list in walk
    /// order. Empty when `start` carries neither colour.
    pub fn kempe_component(&mut self, alpha: usize, beta: usize, start: usize) -> Vec<usize> {
        let (mut edges, closed) = self.alternating_walk(start, alpha, beta);
        if !closed {
            let (mut back, _) = self.alternating_walk(start, beta, alpha);
            back.reverse();
            back.append(&mut edges);
            edges = back;
        }
        edges
    }

    // Follows first, other, first, ... from start. Components of a two-colour
    // subgraph are paths or even cycles, so the walk either stops or returns
    // to start.
    fn alternating_walk(&mut self, start: usize, first: usize, other: usize) -> (Vec<usize>, bool) {
        let mut edges = Vec::new();
        let mut here = start;
        let mut col = first;
        while let Some(e) = self.edge_at(here, col) {
            self.ops += 1;
            edges.push(e);
            let (a, b) = self.endpoints[e];
            here = if a == here { b } else { a };
            if here == start {
                return (edges, true);
            }
            col = if col == first { other } else { first };
        }
        (edges, false)
    }

    /// Exchanges `alpha` and `beta` on the component of the
    /// `{alpha, beta}`-subgraph containing `start` and returns the edges
    /// recoloured.
    pub fn kempe_swap(&mut self, alpha: usize, beta: usize, start: usize) -> Result<Vec<usize>> {
        if start >= self.n {
            return Err(Error::VertexOutOfRange {
                vertex: start,
                n: self.n,
            });
        }
        for c in [alpha, beta] {
            if c >= self.k {
                return Err(Error::ColourOutOfPalette { colour: c, k: self.k });
            }
        }
        if alpha == beta {
            return Ok(Vec::new());
        }
        let comp = self.kempe_component(alpha, beta, start);
        let old: Vec<usize> = comp.iter().map(|&e| self.take(e).expect("coloured")).collect();
        for (&e, &c) in comp.iter().zip(&old) {
            self.put(e, if c == alpha { beta } else { alpha });
        }
        Ok(comp)
    }

    /// Full rescan of the assignment against the incidence table.
    pub fn validate(&self) -> std::result::Result<(), Violation> {
        let k = self.k;
        let mut seen = vec![NONE; self.n * k];
        let mut deg = vec![0usize; self.n];
        for (e, &c) in self.colour.iter().enumerate() {
            if c == NONE {
                continue;
            }
            let c = c as usize;
            if c >= k {
                return Err(Violation::OutOfPalette { edge: e, colour: c });
            }
            let (u, v) = self.endpoints[e];
            for x in [u, v] {
                let slot = &mut seen[x * k + c];
                if *slot != NONE {
                    return Err(Violation::Conflict {
                        vertex: x,
                        colour: c,
                        first: *slot as usize,
                        second: e,
                    });
                }
                *slot = e as u32;
                deg[x] += 1;
            }
        }
        for v in 0..self.n {
            if deg[v] != self.coloured_deg[v] {
                return Err(Violation::Index { vertex: v, colour: None });
            }
            for c in 0..k {
                if seen[v * k + c] != self.at[v * k + c] {
                    return Err(Violation::Index {
                        vertex: v,
                        colour: Some(c),
                    });
                }
            }
        }
        Ok(())
    }
}

/// First problem found by [`PartialEdgeColouring::validate`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Violation {
    Conflict {
        vertex: usize,
        colour: usize,
        first: usize,
        second: usize,
    },
    OutOfPalette {
        edge: usize,
        colour: usize,
    },
    Index {
        vertex: usize,
        colour: Option<usize>,
    },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::Conflict {
                vertex,
                colour,
                first,
                second,
            } => write!(
                f,
                "edges {first} and {second} both have colour {} at vertex {vertex}",
                colour + 1
            ),
            Violation::OutOfPalette { edge, colour } => {
                write!(f, "edge {edge} has colour {} outside the palette", colour + 1)
            }
            Violation::Index { vertex, colour } => match colour {
                Some(c) => write!(f, "incidence index stale at vertex {vertex}, colour {}", c + 1),
                None => write!(f, "coloured degree stale at vertex {vertex}"),
            },
        }
    }
}

impl From<Violation> for Error {
    fn from(v: Violation) -> Self {
        Error::invariant(v.to_string())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families;

    fn p3() -> Multigraph {
        // a=0, b=1, c=2; ab = edge 0, bc = edge 1
        families::path(3)
    }

    #[test]
    fn missing_sets() {
        let g = p3();
        let c = PartialEdgeColouring::from_assignment(&g, 2, &[Some(0), Some(1)]).unwrap();
        assert!(c.missing_colours(1).is_empty());
        assert_eq!(c.missing_colours(0), vec![1]);
        let blank = PartialEdgeColouring::new(&g, 3);
        assert_eq!(blank.missing_colours(1), vec![0, 1, 2]);
    }

    #[test]
    fn assign_and_unassign() {
        let g = p3();
        let mut c = PartialEdgeColouring::from_assignment(&g, 2, &[Some(0), None]).unwrap();
        let mut bad = c.clone();
        assert!(matches!(
            bad.assign(1, 0),
            Err(Error::ColourConflict { vertex: 1, .. })
        ));
        assert!(matches!(
            bad.assign(1, 5),
            Err(Error::ColourOutOfPalette { .. })
        ));
        c.assign(1, 1).unwrap();
        assert!(c.validate().is_ok());
        assert_eq!(c.unassign(0).unwrap(), Some(0));
        assert_eq!(c.missing_colours(0), vec![0, 1]);
        assert!(c.validate().is_ok());
    }

    #[test]
    fn kempe_on_path() {
        let g = p3();
        let mut c = PartialEdgeColouring::from_assignment(&g, 2, &[Some(0), Some(1)]).unwrap();
        let touched = c.kempe_swap(0, 1, 0).unwrap();
        assert_eq!(touched.len(), 2);
        assert_eq!(c.assignment(), vec![Some(1), Some(0)]);
        assert!(c.validate().is_ok());
    }

    #[test]
    fn kempe_from_isolated_vertex_is_noop() {
        let g = Multigraph::from_edges(3, &[(0, 1)]).unwrap();
        let mut c = PartialEdgeColouring::from_assignment(&g, 2, &[Some(0)]).unwrap();
        assert!(c.kempe_swap(0, 1, 2).unwrap().is_empty());
        assert_eq!(c.assignment(), vec![Some(0)]);
    }

    #[test]
    fn kempe_on_even_cycle() {
        let g = families::cycle(4, 1);
        let start = vec![Some(0), Some(1), Some(0), Some(1)];
        for v in 0..4 {
            let mut c = PartialEdgeColouring::from_assignment(&g, 2, &start).unwrap();
            let touched = c.kempe_swap(0, 1, v).unwrap();
            assert_eq!(touched.len(), 4);
            assert_eq!(c.assignment(), vec![Some(1), Some(0), Some(1), Some(0)]);
            assert!(c.validate().is_ok());
        }
    }

    #[test]
    fn kempe_on_parallel_pair() {
        let g = Multigraph::from_edges(3, &[(0, 1), (0, 1), (1, 2)]).unwrap();
        let mut c =
            PartialEdgeColouring::from_assignment(&g, 3, &[Some(0), Some(1), Some(2)]).unwrap();
        let touched = c.kempe_swap(0, 1, 0).unwrap();
        assert_eq!(touched.len(), 2);
        assert_eq!(c.assignment(), vec![Some(1), Some(0), Some(2)]);
    }

    #[test]
    fn validate_reports_corruption() {
        let g = p3();
        let c = PartialEdgeColouring::from_assignment_unchecked(&g, 2, &[Some(0), Some(0)]).unwrap();
        match c.validate() {
            Err(Violation::Conflict { vertex, colour, .. }) => {
                assert_eq!(vertex, 1);
                assert_eq!(colour, 0);
            }
            other => panic!("expected conflict, got {other:?}"),
        }
        assert!(PartialEdgeColouring::new(&g, 2).validate().is_ok());
    }
}
