//! Extending a colouring by one edge, and the incremental driver built on it.
//!
//! When the maximal fan at the new edge has size two and does not resolve,
//! the driver walks a chain of overlapping size-two fans. Each step moves the
//! uncoloured edge one position along a path `v0 v1 v2 ...` while two colours
//! `a0`, `a1` alternate behind it. The chain either meets a fan that resolves
//! or closes into an odd cycle through `v0`; on the cycle, the colours other
//! than `a0`, `a1` that are missing at each vertex stay fixed, which is what
//! the closing step works with.

use fixedbitset::FixedBitSet;

use crate::colouring::PartialEdgeColouring;
use crate::error::{Error, Result};
use crate::fan::{assert_resolvable_by_size, Fan, FanEngine, Resolution};
use crate::multigraph::{EdgeBoundReport, Multigraph};
use crate::trace::{TraceEvent, Tracer};

/// Counters describing how each inserted edge was finished.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ExtendStats {
    pub inserted: u64,
    /// Finished by a fan whose hinge shared a missing colour.
    pub direct: u64,
    /// Finished by a fan after one two-colour swap.
    pub kempe: u64,
    /// Insertions that needed at least one chain step.
    pub chains: u64,
    pub chain_steps: u64,
    /// Chains that closed into a cycle.
    pub cycles: u64,
    pub cycle_direct: u64,
    pub cycle_swap: u64,
    pub longest_cycle: usize,
}

impl ExtendStats {
    pub fn absorb(&mut self, other: &ExtendStats) {
        self.inserted += other.inserted;
        self.direct += other.direct;
        self.kempe += other.kempe;
        self.chains += other.chains;
        self.chain_steps += other.chain_steps;
        self.cycles += other.cycles;
        self.cycle_direct += other.cycle_direct;
        self.cycle_swap += other.cycle_swap;
        self.longest_cycle = self.longest_cycle.max(other.longest_cycle);
    }
}

/// Incremental edge colourer for one graph and palette.
pub struct EdgeColourer<'g> {
    g: &'g Multigraph,
    k: usize,
    gamma: usize,
    engine: FanEngine,
    on_chain: Vec<bool>,
    stats: ExtendStats,
}

impl<'g> EdgeColourer<'g> {
    /// Fails when `k` is below the local bound of `g`.
    pub fn new(g: &'g Multigraph, k: usize) -> Result<Self> {
        let gamma = g.local_edge_bound().gamma;
        if k < gamma {
            return Err(Error::PaletteTooSmall { k, gamma });
        }
        Ok(EdgeColourer {
            g,
            k,
            gamma,
            engine: FanEngine::new(g.n(), k),
            on_chain: vec![false; g.n()],
            stats: ExtendStats::default(),
        })
    }

    pub fn stats(&self) -> &ExtendStats {
        &self.stats
    }

    /// Colours the uncoloured edge `e0`, recolouring only edges that are
    /// already coloured. Other uncoloured edges are treated as absent.
    pub fn insert(
        &mut self,
        c: &mut PartialEdgeColouring,
        e0: usize,
        trace: &mut Tracer<'_>,
    ) -> Result<()> {
        if c.k() != self.k || c.m() != self.g.m() {
            return Err(Error::structure("colouring does not match the colourer"));
        }
        if e0 >= self.g.m() {
            return Err(Error::EdgeOutOfRange {
                edge: e0,
                m: self.g.m(),
            });
        }
        if c.colour(e0).is_some() {
            return Err(Error::AlreadyColoured(e0));
        }
        self.stats.inserted += 1;
        trace.emit(|| TraceEvent::Insert { edge: e0 });
        self.extend(c, e0, trace)
    }

    fn record(&mut self, r: Resolution) {
        if let Resolution::Completed { via_kempe, .. } = r {
            if via_kempe {
                self.stats.kempe += 1;
            } else {
                self.stats.direct += 1;
            }
        }
    }

    // Builds the maximal fan for the uncoloured `e` at `hinge` and tries to
    // finish with it. Returns the fan when it is a size-two dead end.
    fn try_fan(
        &mut self,
        c: &mut PartialEdgeColouring,
        e: usize,
        hinge: usize,
        trace: &mut Tracer<'_>,
    ) -> Result<Option<Fan>> {
        let fan = self.engine.build_maximal_fan(self.g, c, e, hinge)?;
        let out = self.engine.resolve(self.g, c, &fan, trace)?;
        assert_resolvable_by_size(&fan, self.k, self.gamma, &out)?;
        if out != Resolution::Disjoint {
            self.record(out);
            return Ok(None);
        }
        if self.k > fan.degree_sum {
            return Err(Error::invariant(format!(
                "fan at hinge {} has degree sum {} below k = {} yet disjoint missing sets",
                hinge, fan.degree_sum, self.k
            )));
        }
        Ok(Some(fan))
    }

    fn extend(
        &mut self,
        c: &mut PartialEdgeColouring,
        e0: usize,
        trace: &mut Tracer<'_>,
    ) -> Result<()> {
        let (a, b) = self.g.endpoints(e0);
        let (da, db) = (c.coloured_degree(a), c.coloured_degree(b));
        let hinge = if da > db || (da == db && a < b) { a } else { b };
        let v0 = self.g.other(e0, hinge);

        let Some(fan) = self.try_fan(c, e0, hinge, trace)? else {
            return Ok(());
        };
        self.stats.chains += 1;

        let mut verts = vec![v0, hinge, fan.seq[1]];
        let alpha0 = smallest_missing(c, v0)?;
        let mut alphas = [alpha0, usize::MAX];
        let mut e = e0;
        let mut t = 0usize;
        for &v in &verts {
            self.on_chain[v] = true;
        }
        let result = loop {
            // invariant: c = c_t, e = e_t joins v_t and v_{t+1}, and the fan
            // at v_{t+1} is (v_t, v_{t+2}) and stuck
            let alpha = alphas[t % 2];
            let next = match self.step(c, e, verts[t], verts[t + 1], verts[t + 2], alpha, trace) {
                Ok(f) => f,
                Err(err) => break Err(err),
            };
            e = next;
            t += 1;
            if t == 1 {
                match smallest_missing(c, verts[1]) {
                    Ok(a1) => alphas[1] = a1,
                    Err(err) => break Err(err),
                }
            }
            let fan = match self.try_fan(c, e, verts[t + 1], trace) {
                Ok(None) => break Ok(()),
                Ok(Some(f)) => f,
                Err(err) => break Err(err),
            };
            if fan.seq[0] != verts[t] {
                break Err(Error::invariant("chain fan does not start at the previous vertex"));
            }
            let w = fan.seq[1];
            if self.on_chain[w] {
                // v_{t+2} repeats: it has to be v0, closing an odd cycle
                let j = t + 2;
                if w != v0 || j.is_multiple_of(2) {
                    break Err(Error::invariant(format!(
                        "fan chain revisited vertex {w} after {j} steps"
                    )));
                }
                break self.close_cycle(c, e, t, &verts, alphas, trace);
            }
            self.on_chain[w] = true;
            verts.push(w);
        };
        for &v in &verts {
            self.on_chain[v] = false;
        }
        result
    }

    // c_t -> c_{t+1}: the alpha-edge at v_{t+1} must lead to v_{t+2}; it is
    // uncoloured and e_t takes alpha. Returns e_{t+1}.
    #[allow(clippy::too_many_arguments)]
    fn step(
        &mut self,
        c: &mut PartialEdgeColouring,
        e: usize,
        vt: usize,
        vt1: usize,
        vt2: usize,
        alpha: usize,
        trace: &mut Tracer<'_>,
    ) -> Result<usize> {
        if !c.is_missing(vt, alpha) {
            return Err(Error::invariant(format!(
                "chain colour {} not missing at vertex {vt}",
                alpha + 1
            )));
        }
        let f = c
            .edge_at(vt1, alpha)
            .filter(|&f| self.g.other(f, vt1) == vt2)
            .ok_or_else(|| {
                Error::invariant(format!(
                    "colour {} at vertex {vt1} does not lead to {vt2}",
                    alpha + 1
                ))
            })?;
        c.take(f);
        c.put(e, alpha);
        self.stats.chain_steps += 1;
        trace.emit(|| TraceEvent::ChainStep {
            coloured: e,
            freed: f,
            colour: alpha,
        });
        Ok(f)
    }

    // Called with c = c_t where t = j - 2 and v_j = v0.
    fn close_cycle(
        &mut self,
        c: &mut PartialEdgeColouring,
        e: usize,
        t: usize,
        verts: &[usize],
        alphas: [usize; 2],
        trace: &mut Tracer<'_>,
    ) -> Result<()> {
        let j = verts.len();
        let v0 = verts[0];
        let e = self.step(c, e, verts[t], verts[t + 1], v0, alphas[t % 2], trace)?;
        let Some(fan) = self.try_fan(c, e, v0, trace)? else {
            return Ok(());
        };
        if fan.seq != [verts[j - 1], verts[1]] {
            return Err(Error::invariant("closing fan does not return to v1"));
        }
        self.stats.cycles += 1;
        self.stats.longest_cycle = self.stats.longest_cycle.max(j);
        trace.emit(|| TraceEvent::CycleClosed { length: j });
        let mut cyc = Cycle {
            verts: verts.to_vec(),
            alphas,
            t: j - 1,
            e,
        };
        cyc.finish(self, c, trace)
    }
}

struct Cycle {
    verts: Vec<usize>,
    alphas: [usize; 2],
    // c is c_t for this t (mod j); e joins v_t and v_{t+1}
    t: usize,
    e: usize,
}

impl Cycle {
    fn len(&self) -> usize {
        self.verts.len()
    }

    fn v(&self, i: isize) -> usize {
        let j = self.len() as isize;
        self.verts[i.rem_euclid(j) as usize]
    }

    // The chain colour missing at v_t (the other one is present there).
    fn free_alpha(&self, c: &PartialEdgeColouring) -> Result<(usize, usize)> {
        let vt = self.v(self.t as isize);
        let [a0, a1] = self.alphas;
        match (c.is_missing(vt, a0), c.is_missing(vt, a1)) {
            (true, false) => Ok((a0, a1)),
            (false, true) => Ok((a1, a0)),
            _ => Err(Error::invariant(format!(
                "exactly one chain colour should be missing at cycle vertex {vt}"
            ))),
        }
    }

    fn advance_to(
        &mut self,
        dr: &mut EdgeColourer<'_>,
        c: &mut PartialEdgeColouring,
        p: usize,
        trace: &mut Tracer<'_>,
    ) -> Result<()> {
        while self.t % self.len() != p {
            let (a, _) = self.free_alpha(c)?;
            let t = self.t as isize;
            self.e = dr.step(c, self.e, self.v(t), self.v(t + 1), self.v(t + 2), a, trace)?;
            self.t += 1;
        }
        Ok(())
    }

    fn finish(
        &mut self,
        dr: &mut EdgeColourer<'_>,
        c: &mut PartialEdgeColouring,
        trace: &mut Tracer<'_>,
    ) -> Result<()> {
        let j = self.len();
        let k = c.k();
        let sets: Vec<FixedBitSet> = self
            .verts
            .iter()
            .map(|&v| {
                let mut s = FixedBitSet::with_capacity(k);
                for col in 0..k {
                    if c.is_missing(v, col) && !self.alphas.contains(&col) {
                        s.insert(col);
                    }
                }
                s
            })
            .collect();
        c.tick((j * k) as u64);
        let m = |i: isize| &sets[i.rem_euclid(j as isize) as usize];

        for p in 0..j {
            let pi = p as isize;
            if let Some(beta) = m(pi).intersection(m(pi + 1)).next() {
                self.advance_to(dr, c, p, trace)?;
                c.assign(self.e, beta)?;
                trace.emit(|| TraceEvent::Assign {
                    edge: self.e,
                    colour: beta,
                });
                dr.stats.cycle_direct += 1;
                return Ok(());
            }
        }

        if j >= 5 {
            for p in 0..j {
                let pi = p as isize;
                let forward: Vec<usize> = m(pi)
                    .difference(m(pi + 1))
                    .filter(|&b| m(pi + 3).contains(b))
                    .collect();
                for beta in forward {
                    self.advance_to(dr, c, p, trace)?;
                    if self.swap_forward(dr.g, c, beta, trace)? {
                        dr.stats.cycle_swap += 1;
                        return Ok(());
                    }
                }
                let mirror: Vec<usize> = m(pi + 1)
                    .difference(m(pi))
                    .filter(|&b| m(pi - 2).contains(b))
                    .collect();
                for beta in mirror {
                    self.advance_to(dr, c, p, trace)?;
                    if self.swap_mirror(dr.g, c, beta, trace)? {
                        dr.stats.cycle_swap += 1;
                        return Ok(());
                    }
                }
            }
        }
        Err(Error::invariant(format!(
            "odd cycle of length {j} closed with no finishing colour"
        )))
    }

    // beta is missing at v_p and v_{p+3} but not at v_{p+1}. Exchange beta
    // on the v_{p+1} v_{p+2} edge with the chain colour on v_{p+2} v_{p+3},
    // then beta is free at both ends of e_p.
    fn swap_forward(
        &mut self,
        g: &Multigraph,
        c: &mut PartialEdgeColouring,
        beta: usize,
        trace: &mut Tracer<'_>,
    ) -> Result<bool> {
        let (_, b) = self.free_alpha(c)?;
        let p = self.t as isize;
        let (v1, v2, v3) = (self.v(p + 1), self.v(p + 2), self.v(p + 3));
        let Some(eb) = c.edge_at(v1, beta).filter(|&f| g.other(f, v1) == v2) else {
            return Ok(false);
        };
        let Some(e2) = c.edge_at(v2, b).filter(|&f| g.other(f, v2) == v3) else {
            return Ok(false);
        };
        if !c.is_missing(v1, b) || !c.is_missing(v3, beta) {
            return Ok(false);
        }
        self.exchange(c, eb, beta, e2, b, trace)
    }

    // Mirror image: beta is missing at v_{p+1} and v_{p-2} but not at v_p.
    fn swap_mirror(
        &mut self,
        g: &Multigraph,
        c: &mut PartialEdgeColouring,
        beta: usize,
        trace: &mut Tracer<'_>,
    ) -> Result<bool> {
        let (a, _) = self.free_alpha(c)?;
        let p = self.t as isize;
        let (w0, w1, w2) = (self.v(p), self.v(p - 1), self.v(p - 2));
        let Some(eb) = c.edge_at(w0, beta).filter(|&f| g.other(f, w0) == w1) else {
            return Ok(false);
        };
        let Some(e2) = c.edge_at(w1, a).filter(|&f| g.other(f, w1) == w2) else {
            return Ok(false);
        };
        if !c.is_missing(w0, a) || !c.is_missing(w2, beta) {
            return Ok(false);
        }
        self.exchange(c, eb, beta, e2, a, trace)
    }

    fn exchange(
        &mut self,
        c: &mut PartialEdgeColouring,
        eb: usize,
        beta: usize,
        e2: usize,
        other: usize,
        trace: &mut Tracer<'_>,
    ) -> Result<bool> {
        c.take(eb);
        c.take(e2);
        c.put(eb, other);
        c.put(e2, beta);
        trace.emit(|| TraceEvent::EdgeSwap {
            edges: (eb, e2),
            colours: (other, beta),
        });
        c.assign(self.e, beta)
            .map_err(|err| Error::invariant(format!("cycle swap left beta blocked: {err}")))?;
        trace.emit(|| TraceEvent::Assign {
            edge: self.e,
            colour: beta,
        });
        Ok(true)
    }
}

fn smallest_missing(c: &mut PartialEdgeColouring, v: usize) -> Result<usize> {
    for col in 0..c.k() {
        c.tick(1);
        if c.is_missing(v, col) {
            return Ok(col);
        }
    }
    Err(Error::invariant(format!("no colour missing at vertex {v}")))
}

/// Colours `e0`, given a proper colouring of every other edge of `g`.
pub fn extend_one_edge(
    g: &Multigraph,
    c: &mut PartialEdgeColouring,
    e0: usize,
    trace: &mut Tracer<'_>,
) -> Result<()> {
    if c.uncoloured_edges() != [e0] {
        return Err(Error::structure(format!(
            "edge {e0} must be the only uncoloured edge"
        )));
    }
    EdgeColourer::new(g, c.k())?.insert(c, e0, trace)
}

/// Inserts edges in `order`, which must be a permutation of the edge ids.
pub fn edge_colour_with(
    g: &Multigraph,
    k: usize,
    order: &[usize],
    trace: &mut Tracer<'_>,
) -> Result<(PartialEdgeColouring, ExtendStats)> {
    check_order(order, g.m())?;
    let mut dr = EdgeColourer::new(g, k)?;
    let mut c = PartialEdgeColouring::new(g, k);
    for &e in order {
        dr.insert(&mut c, e, trace)?;
    }
    Ok((c, dr.stats))
}

/// Colours every edge of `g` with colours `0..k`, inserting in edge-id order.
pub fn edge_colour(g: &Multigraph, k: usize) -> Result<PartialEdgeColouring> {
    let order: Vec<usize> = (0..g.m()).collect();
    Ok(edge_colour_with(g, k, &order, &mut Tracer::off())?.0)
}

/// Colours `g` with as many colours as its local bound.
pub fn edge_colour_optimal_local(g: &Multigraph) -> Result<(PartialEdgeColouring, EdgeBoundReport)> {
    let report = g.local_edge_bound();
    let c = edge_colour(g, report.gamma)?;
    Ok((c, report))
}

fn check_order(order: &[usize], m: usize) -> Result<()> {
    if order.len() != m {
        return Err(Error::structure(format!(
            "insertion order has {} entries for {m} edges",
            order.len()
        )));
    }
    let mut seen = vec![false; m];
    for &e in order {
        if e >= m || std::mem::replace(&mut seen[e], true) {
            return Err(Error::structure(format!(
                "insertion order is not a permutation (edge {e})"
            )));
        }
    }
    Ok(())
}
