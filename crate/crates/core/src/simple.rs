//! Simple undirected graphs and vertex colourings of them.

use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct SimpleGraph {
    // sorted, duplicate-free
    adj: Vec<Vec<usize>>,
    m: usize,
}

impl SimpleGraph {
    pub fn new(n: usize) -> Self {
        SimpleGraph {
            adj: vec![Vec::new(); n],
            m: 0,
        }
    }

    /// Builds a graph from an edge list. Repeated pairs are merged; loops
    /// are rejected.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = SimpleGraph::new(n);
        for &(u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    /// Adds `uv`; returns false if it was already present.
    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<bool> {
        let n = self.n();
        for x in [u, v] {
            if x >= n {
                return Err(Error::VertexOutOfRange { vertex: x, n });
            }
        }
        if u == v {
            return Err(Error::Loop(u));
        }
        match self.adj[u].binary_search(&v) {
            Ok(_) => Ok(false),
            Err(i) => {
                self.adj[u].insert(i, v);
                let j = self.adj[v].binary_search(&u).unwrap_err();
                self.adj[v].insert(j, u);
                self.m += 1;
                Ok(true)
            }
        }
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn neighbours(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n() && self.adj[u].binary_search(&v).is_ok()
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.m);
        for (u, row) in self.adj.iter().enumerate() {
            out.extend(row.iter().filter(|&&v| v > u).map(|&v| (u, v)));
        }
        out
    }

    pub fn is_clique(&self, vs: &[usize]) -> bool {
        vs.iter()
            .enumerate()
            .all(|(i, &u)| vs[i + 1..].iter().all(|&v| u != v && self.has_edge(u, v)))
    }

    /// Subgraph induced on `vs`; vertex `i` of the result is `vs[i]`.
    pub fn induced(&self, vs: &[usize]) -> SimpleGraph {
        let mut index = vec![usize::MAX; self.n()];
        for (i, &v) in vs.iter().enumerate() {
            index[v] = i;
        }
        let mut h = SimpleGraph::new(vs.len());
        for (i, &v) in vs.iter().enumerate() {
            for &w in &self.adj[v] {
                let j = index[w];
                if j != usize::MAX && i < j {
                    h.add_edge(i, j).expect("indices in range");
                }
            }
        }
        h
    }

    /// True when every neighbourhood splits into at most two cliques, i.e.
    /// the complement of each neighbourhood is bipartite.
    pub fn is_quasi_line(&self) -> bool {
        (0..self.n()).all(|v| self.neighbourhood_is_two_cliques(v))
    }

    fn neighbourhood_is_two_cliques(&self, v: usize) -> bool {
        let nb = &self.adj[v];
        let mut side = vec![u8::MAX; nb.len()];
        for s in 0..nb.len() {
            if side[s] != u8::MAX {
                continue;
            }
            side[s] = 0;
            let mut stack = vec![s];
            while let Some(i) = stack.pop() {
                for j in 0..nb.len() {
                    // non-adjacent neighbours must sit in different cliques
                    if i == j || self.has_edge(nb[i], nb[j]) {
                        continue;
                    }
                    if side[j] == u8::MAX {
                        side[j] = 1 - side[i];
                        stack.push(j);
                    } else if side[j] == side[i] {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// Size of the largest clique through `v` among vertices with
    /// `allowed[w]`; no size limit, exponential in the worst case.
    pub fn max_clique_through(&self, v: usize, allowed: &[bool]) -> usize {
        fn grow(g: &SimpleGraph, r: usize, p: Vec<usize>, best: &mut usize) {
            if r + p.len() <= *best {
                return;
            }
            if p.is_empty() {
                *best = r;
                return;
            }
            for (i, &u) in p.iter().enumerate() {
                if r + p.len() - i <= *best {
                    return;
                }
                let next: Vec<usize> = p[i + 1..].iter().copied().filter(|&w| g.has_edge(u, w)).collect();
                grow(g, r + 1, next, best);
            }
        }
        let p: Vec<usize> = self.adj[v].iter().copied().filter(|&w| allowed[w]).collect();
        let mut best = 1;
        grow(self, 1, p, &mut best);
        best
    }

    /// Checks that `colours` (one per vertex) is a proper colouring.
    pub fn check_colouring(&self, colours: &[usize]) -> Result<()> {
        if colours.len() != self.n() {
            return Err(Error::structure(format!(
                "{} colours for {} vertices",
                colours.len(),
                self.n()
            )));
        }
        for (u, v) in self.edges() {
            if colours[u] == colours[v] {
                return Err(Error::structure(format!(
                    "adjacent vertices {u} and {v} share colour {}",
                    colours[u] + 1
                )));
            }
        }
        Ok(())
    }
}

/// `max ⌈(d(v) + 1 + ω(v)) / 2⌉` with exact clique sizes and no size guard.
pub fn local_vertex_bound(g: &SimpleGraph) -> usize {
    let all = vec![true; g.n()];
    (0..g.n())
        .map(|v| (g.degree(v) + 1 + g.max_clique_through(v, &all)).div_ceil(2))
        .max()
        .unwrap_or(0)
}

/// Number of distinct colours in a vertex colouring.
pub fn colours_used(colours: &[usize]) -> usize {
    let mut seen: Vec<usize> = colours.to_vec();
    seen.sort_unstable();
    seen.dedup();
    seen.len()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cycle(n: usize) -> SimpleGraph {
        let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        SimpleGraph::from_edges(n, &edges).unwrap()
    }

    #[test]
    fn duplicates_merge() {
        let g = SimpleGraph::from_edges(3, &[(0, 1), (1, 0), (1, 2)]).unwrap();
        assert_eq!(g.m(), 2);
        assert_eq!(g.edges(), vec![(0, 1), (1, 2)]);
        assert!(matches!(
            SimpleGraph::from_edges(2, &[(1, 1)]),
            Err(Error::Loop(1))
        ));
    }

    #[test]
    fn claw_is_not_quasi_line() {
        let claw = SimpleGraph::from_edges(4, &[(0, 1), (0, 2), (0, 3)]).unwrap();
        assert!(!claw.is_quasi_line());
        assert!(cycle(5).is_quasi_line());
        // C5 complement of a neighbourhood of the wheel centre is C5: odd
        let mut wheel = cycle(5);
        let mut w = SimpleGraph::new(6);
        for (u, v) in wheel.edges() {
            w.add_edge(u, v).unwrap();
        }
        for i in 0..5 {
            w.add_edge(5, i).unwrap();
        }
        assert!(!w.is_quasi_line());
        wheel.add_edge(0, 2).unwrap();
        assert!(wheel.is_quasi_line());
    }

    #[test]
    fn induced_and_cliques() {
        let g = cycle(5);
        let h = g.induced(&[0, 1, 2]);
        assert_eq!(h.edges(), vec![(0, 1), (1, 2)]);
        assert!(g.is_clique(&[3, 4]));
        assert!(!g.is_clique(&[0, 2]));
        let mut k4 = SimpleGraph::from_edges(5, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3), (3, 4)]).unwrap();
        assert_eq!(k4.max_clique_through(0, &[true; 5]), 4);
        assert_eq!(k4.max_clique_through(4, &[true; 5]), 2);
        assert_eq!(k4.max_clique_through(0, &[true, true, false, true, true]), 3);
        k4.add_edge(2, 4).unwrap();
        assert_eq!(k4.max_clique_through(4, &[true; 5]), 3);
    }

    #[test]
    fn colouring_check() {
        let g = cycle(5);
        assert!(g.check_colouring(&[0, 1, 0, 1, 2]).is_ok());
        assert!(g.check_colouring(&[0, 1, 0, 1, 0]).is_err());
        assert_eq!(colours_used(&[0, 1, 0, 1, 2]), 3);
        assert_eq!(local_vertex_bound(&g), 3);
        assert_eq!(local_vertex_bound(&SimpleGraph::new(0)), 0);
    }
}
