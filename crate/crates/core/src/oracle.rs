//! Exhaustive solvers for small instances, used to check the bounds.
//!
//! Every entry point checks an [`OracleGuard`] before doing exponential
//! work and gives up with [`Error::GuardExceeded`] past the time budget.

use std::time::{Duration, Instant};

use crate::error::{Error, Result};
use crate::multigraph::Multigraph;
use crate::simple::SimpleGraph;

pub const GUARD_ENV: &str = "LC_ORACLE_GUARD";

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct OracleGuard {
    pub max_vertices: usize,
    /// Edge limit for multigraphs, and vertex limit for simple graphs.
    pub max_edges: usize,
    pub max_palette: usize,
    pub time: Duration,
}

impl Default for OracleGuard {
    fn default() -> Self {
        OracleGuard {
            max_vertices: 8,
            max_edges: 16,
            max_palette: 12,
            time: Duration::from_secs(10),
        }
    }
}

impl OracleGuard {
    /// Parses `n,m,k,secs`.
    pub fn parse(s: &str) -> Result<Self> {
        let parts: Vec<&str> = s.split(',').map(str::trim).collect();
        if parts.len() != 4 {
            return Err(Error::structure(format!(
                "oracle guard must be n,m,k,secs, got {s:?}"
            )));
        }
        let num = |i: usize| -> Result<u64> {
            parts[i]
                .parse()
                .map_err(|_| Error::structure(format!("bad oracle guard field {:?}", parts[i])))
        };
        Ok(OracleGuard {
            max_vertices: num(0)? as usize,
            max_edges: num(1)? as usize,
            max_palette: num(2)? as usize,
            time: Duration::from_secs(num(3)?),
        })
    }

    /// The default guard, overridden by `LC_ORACLE_GUARD` when set.
    pub fn from_env() -> Result<Self> {
        match std::env::var(GUARD_ENV) {
            Ok(s) => Self::parse(&s),
            Err(_) => Ok(Self::default()),
        }
    }

    fn check_multigraph(&self, g: &Multigraph) -> Result<()> {
        if g.n() > self.max_vertices || g.m() > self.max_edges {
            return Err(Error::GuardExceeded(format!(
                "multigraph with n = {}, m = {} exceeds n <= {}, m <= {}",
                g.n(),
                g.m(),
                self.max_vertices,
                self.max_edges
            )));
        }
        Ok(())
    }

    fn check_simple(&self, h: &SimpleGraph) -> Result<()> {
        if h.n() > self.max_edges.min(64) {
            return Err(Error::GuardExceeded(format!(
                "graph with {} vertices exceeds {}",
                h.n(),
                self.max_edges.min(64)
            )));
        }
        Ok(())
    }

    fn check_palette(&self, k: usize) -> Result<()> {
        if k > self.max_palette || k > 64 {
            return Err(Error::GuardExceeded(format!(
                "palette {k} exceeds {}",
                self.max_palette.min(64)
            )));
        }
        Ok(())
    }
}

struct Clock {
    deadline: Instant,
    ticks: u32,
}

impl Clock {
    fn new(budget: Duration) -> Self {
        Clock {
            deadline: Instant::now() + budget,
            ticks: 0,
        }
    }

    fn tick(&mut self) -> Result<()> {
        self.ticks = self.ticks.wrapping_add(1);
        if self.ticks.is_multiple_of(4096) && Instant::now() > self.deadline {
            return Err(Error::GuardExceeded("time budget exhausted".into()));
        }
        Ok(())
    }
}

/// Exact chromatic index.
pub fn chromatic_index_bf(g: &Multigraph, guard: &OracleGuard) -> Result<usize> {
    guard.check_multigraph(g)?;
    if g.m() == 0 {
        return Ok(0);
    }
    let mut lower = g.max_degree();
    for &(u, v) in g.edges() {
        lower = lower.max(g.triangle_weight(u, v)?);
    }
    let mut clock = Clock::new(guard.time);
    let mut k = lower;
    loop {
        guard.check_palette(k)?;
        if edge_colourable(g, k, &mut clock)? {
            return Ok(k);
        }
        k += 1;
    }
}

/// Whether `g` has a proper edge colouring with `k` colours.
pub fn is_k_edge_colourable(g: &Multigraph, k: usize, guard: &OracleGuard) -> Result<bool> {
    guard.check_multigraph(g)?;
    guard.check_palette(k)?;
    edge_colourable(g, k, &mut Clock::new(guard.time))
}

fn edge_colourable(g: &Multigraph, k: usize, clock: &mut Clock) -> Result<bool> {
    if g.max_degree() > k {
        return Ok(false);
    }
    let full: u64 = if k == 64 { u64::MAX } else { (1u64 << k) - 1 };
    let mut used = vec![0u64; g.n()];
    let mut colour = vec![usize::MAX; g.m()];
    // The edges at one maximum-degree vertex get distinct colours in any
    // colouring, so fix them as 0, 1, 2, ... up to relabelling.
    let hub = (0..g.n()).max_by_key(|&v| (g.degree(v), std::cmp::Reverse(v))).unwrap();
    for (i, &(w, e)) in g.incident(hub).iter().enumerate() {
        colour[e] = i;
        used[hub] |= 1 << i;
        used[w] |= 1 << i;
    }
    let top = g.degree(hub);
    let mut search = EdgeSearch {
        g,
        full,
        used,
        colour,
        clock,
    };
    search.run(top)
}

struct EdgeSearch<'a> {
    g: &'a Multigraph,
    full: u64,
    used: Vec<u64>,
    colour: Vec<usize>,
    clock: &'a mut Clock,
}

impl EdgeSearch<'_> {
    // `top` colours are in use so far; colours above it are interchangeable.
    fn run(&mut self, top: usize) -> Result<bool> {
        self.clock.tick()?;
        let mut best: Option<(usize, u32)> = None;
        for (e, &(u, v)) in self.g.edges().iter().enumerate() {
            if self.colour[e] != usize::MAX {
                continue;
            }
            let free = (self.full & !(self.used[u] | self.used[v])).count_ones();
            if free == 0 {
                return Ok(false);
            }
            if best.is_none_or(|(_, f)| free < f) {
                best = Some((e, free));
            }
        }
        let Some((e, _)) = best else {
            return Ok(true);
        };
        let (u, v) = self.g.endpoints(e);
        let mut free = self.full & !(self.used[u] | self.used[v]);
        // only the first unused colour needs trying
        let fresh_cap = if top < 64 { (1u64 << (top + 1)) - 1 } else { u64::MAX };
        free &= fresh_cap;
        while free != 0 {
            let c = free.trailing_zeros() as usize;
            free &= free - 1;
            self.colour[e] = c;
            self.used[u] |= 1 << c;
            self.used[v] |= 1 << c;
            let found = self.run(top.max(c + 1))?;
            self.used[u] &= !(1 << c);
            self.used[v] &= !(1 << c);
            self.colour[e] = usize::MAX;
            if found {
                return Ok(true);
            }
        }
        Ok(false)
    }
}

fn bitmask_adjacency(h: &SimpleGraph) -> Vec<u64> {
    (0..h.n())
        .map(|v| h.neighbours(v).iter().fold(0u64, |acc, &w| acc | (1 << w)))
        .collect()
}

// Bron–Kerbosch with pivoting and a size bound; `r` is the size of the
// clique built so far.
fn max_clique_in(adj: &[u64], r: usize, mut p: u64, mut x: u64, best: &mut usize, clock: &mut Clock) -> Result<()> {
    clock.tick()?;
    if p == 0 {
        *best = (*best).max(r);
        return Ok(());
    }
    if r + (p.count_ones() as usize) <= *best {
        return Ok(());
    }
    let pivot = (p | x).trailing_zeros() as usize;
    let mut cand = p & !adj[pivot];
    while cand != 0 {
        let v = cand.trailing_zeros() as usize;
        cand &= cand - 1;
        max_clique_in(adj, r + 1, p & adj[v], x & adj[v], best, clock)?;
        p &= !(1 << v);
        x |= 1 << v;
    }
    Ok(())
}

/// Size of the largest clique of `h` containing `v`.
pub fn max_clique_containing(h: &SimpleGraph, v: usize, guard: &OracleGuard) -> Result<usize> {
    guard.check_simple(h)?;
    if v >= h.n() {
        return Err(Error::VertexOutOfRange { vertex: v, n: h.n() });
    }
    let adj = bitmask_adjacency(h);
    let mut best = 0;
    max_clique_in(&adj, 1, adj[v], 0, &mut best, &mut Clock::new(guard.time))?;
    Ok(best.max(1))
}

pub fn clique_number(h: &SimpleGraph, guard: &OracleGuard) -> Result<usize> {
    guard.check_simple(h)?;
    if h.n() == 0 {
        return Ok(0);
    }
    let adj = bitmask_adjacency(h);
    let all = if h.n() == 64 { u64::MAX } else { (1u64 << h.n()) - 1 };
    let mut best = 0;
    max_clique_in(&adj, 0, all, 0, &mut best, &mut Clock::new(guard.time))?;
    Ok(best)
}

/// Largest `⌈(d(v) + 1 + ω(v)) / 2⌉` over the vertices of `h`.
pub fn local_vertex_bound_bf(h: &SimpleGraph, guard: &OracleGuard) -> Result<usize> {
    let mut best = 0;
    for v in 0..h.n() {
        let w = max_clique_containing(h, v, guard)?;
        best = best.max((h.degree(v) + 1 + w).div_ceil(2));
    }
    Ok(best)
}

/// Exact chromatic number.
pub fn chromatic_number_bf(h: &SimpleGraph, guard: &OracleGuard) -> Result<usize> {
    Ok(optimal_vertex_colouring(h, guard)?.0)
}

/// An optimal vertex colouring, found by DSATUR-ordered backtracking over
/// increasing palette sizes starting at the clique number.
pub fn optimal_vertex_colouring(h: &SimpleGraph, guard: &OracleGuard) -> Result<(usize, Vec<usize>)> {
    guard.check_simple(h)?;
    if h.n() == 0 {
        return Ok((0, Vec::new()));
    }
    let adj = bitmask_adjacency(h);
    let mut k = clique_number(h, guard)?;
    let mut clock = Clock::new(guard.time);
    loop {
        let mut colour = vec![usize::MAX; h.n()];
        if dsatur(&adj, k, 0, &mut colour, &mut clock)? {
            return Ok((k, colour));
        }
        k += 1;
    }
}

/// Whether `h` is `k`-colourable; on success also returns a colouring.
pub fn vertex_colouring_with(h: &SimpleGraph, k: usize, guard: &OracleGuard) -> Result<Option<Vec<usize>>> {
    guard.check_simple(h)?;
    let adj = bitmask_adjacency(h);
    let mut colour = vec![usize::MAX; h.n()];
    if k.min(64) < k {
        return Err(Error::GuardExceeded(format!("palette {k} exceeds 64")));
    }
    Ok(dsatur(&adj, k, 0, &mut colour, &mut Clock::new(guard.time))?.then_some(colour))
}

fn dsatur(adj: &[u64], k: usize, top: usize, colour: &mut [usize], clock: &mut Clock) -> Result<bool> {
    clock.tick()?;
    let n = adj.len();
    let mut pick: Option<(usize, u32, u32)> = None;
    for v in 0..n {
        if colour[v] != usize::MAX {
            continue;
        }
        let mut seen = 0u64;
        let mut nb = adj[v];
        let mut open_deg = 0;
        while nb != 0 {
            let w = nb.trailing_zeros() as usize;
            nb &= nb - 1;
            if colour[w] == usize::MAX {
                open_deg += 1;
            } else {
                seen |= 1 << colour[w];
            }
        }
        let sat = seen.count_ones();
        if pick.is_none_or(|(_, s, d)| sat > s || (sat == s && open_deg > d)) {
            pick = Some((v, sat, open_deg));
        }
    }
    let Some((v, _, _)) = pick else {
        return Ok(true);
    };
    let mut blocked = 0u64;
    let mut nb = adj[v];
    while nb != 0 {
        let w = nb.trailing_zeros() as usize;
        nb &= nb - 1;
        if colour[w] != usize::MAX {
            blocked |= 1 << colour[w];
        }
    }
    for c in 0..k.min(top + 1) {
        if blocked & (1 << c) != 0 {
            continue;
        }
        colour[v] = c;
        if dsatur(adj, k, top.max(c + 1), colour, clock)? {
            return Ok(true);
        }
    }
    colour[v] = usize::MAX;
    Ok(false)
}
