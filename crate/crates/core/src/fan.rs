//! Generalised Vizing fans: construction, rotation and resolution.
//!
//! A fan hinged at `v` starts from the uncoloured edge `e0 = v v1` and lists
//! further neighbours `v2, v3, ...` of `v`; each later neighbour `vj` is
//! reached through a witness edge `v vj` whose colour is missing at some
//! earlier fan vertex `v_parent(j)`.

use std::cmp::Reverse;
use std::collections::BinaryHeap;

use fixedbitset::FixedBitSet;

use crate::colouring::PartialEdgeColouring;
use crate::error::{Error, Result};
use crate::multigraph::Multigraph;
use crate::trace::{TraceEvent, Tracer};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Fan {
    pub hinge: usize,
    /// The uncoloured edge between the hinge and `seq[0]`.
    pub e0: usize,
    /// Fan vertices in order; `seq[0]` is the other endpoint of `e0`.
    pub seq: Vec<usize>,
    /// `witness[j]` joins the hinge to `seq[j]`; `witness[0] == e0`.
    pub witness: Vec<usize>,
    /// `parent[j] < j` is the earliest fan vertex missing the colour of
    /// `witness[j]` (unused for `j == 0`).
    pub parent: Vec<usize>,
    /// `d(hinge) + Σ d(seq[j])`, counting `e0` at both of its ends.
    pub degree_sum: usize,
    hinge_missing: FixedBitSet,
}

impl Fan {
    /// Number of fan vertices (the fan's size).
    pub fn len(&self) -> usize {
        self.seq.len()
    }

    pub fn is_empty(&self) -> bool {
        self.seq.is_empty()
    }

    /// Colours missing at the hinge when the fan was built.
    pub fn hinge_missing(&self) -> &FixedBitSet {
        &self.hinge_missing
    }

    /// Chain `j, parent(j), ..., 0`.
    pub fn chain(&self, j: usize) -> Vec<usize> {
        let mut out = vec![j];
        let mut at = j;
        while at != 0 {
            at = self.parent[at];
            out.push(at);
        }
        out
    }

    /// Checks the fan conditions against `c`.
    pub fn check(&self, g: &Multigraph, c: &PartialEdgeColouring) -> Result<()> {
        if c.colour(self.e0).is_some() {
            return Err(Error::invariant("fan edge e0 is coloured"));
        }
        for (j, &w) in self.seq.iter().enumerate() {
            if self.seq[..j].contains(&w) || w == self.hinge {
                return Err(Error::invariant(format!("fan vertex {w} repeated")));
            }
            let e = self.witness[j];
            let (a, b) = g.endpoints(e);
            if !((a == self.hinge && b == w) || (b == self.hinge && a == w)) {
                return Err(Error::invariant(format!("witness {e} does not join hinge to {w}")));
            }
            if j > 0 {
                let p = self.parent[j];
                let col = c
                    .colour(e)
                    .ok_or_else(|| Error::invariant(format!("witness {e} uncoloured")))?;
                if p >= j || !c.is_missing(self.seq[p], col) {
                    return Err(Error::invariant(format!(
                        "witness {e} colour not missing at fan vertex {p}"
                    )));
                }
            }
        }
        Ok(())
    }
}

/// Outcome of [`FanEngine::resolve`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Resolution {
    /// The colouring was extended to the fan's edge; `via_kempe` records
    /// whether a two-colour swap was needed first.
    Completed { rotated_to: usize, via_kempe: bool },
    /// The hinge and fan vertices have pairwise disjoint missing sets.
    Disjoint,
}

/// Reusable scratch space for fan operations on one graph.
pub struct FanEngine {
    k: usize,
    stamp: Vec<u32>,
    generation: u32,
    in_pool: Vec<bool>,
    earliest: Vec<usize>,
}

impl FanEngine {
    pub fn new(n: usize, k: usize) -> Self {
        FanEngine {
            k,
            stamp: vec![0; n],
            generation: 0,
            in_pool: vec![false; k],
            earliest: vec![0; k],
        }
    }

    fn missing_set(&self, g: &Multigraph, c: &mut PartialEdgeColouring, v: usize) -> FixedBitSet {
        let mut set = FixedBitSet::with_capacity(self.k);
        set.insert_range(..);
        let inc = g.incident(v);
        c.tick((inc.len() + self.k.div_ceil(64)) as u64);
        for &(_, e) in inc {
            if let Some(col) = c.colour(e) {
                set.set(col, false);
            }
        }
        set
    }

    /// Grows the fan `(e0; hinge; other end of e0, ...)` until no vertex
    /// outside it can be added.
    pub fn build_maximal_fan(
        &mut self,
        g: &Multigraph,
        c: &mut PartialEdgeColouring,
        e0: usize,
        hinge: usize,
    ) -> Result<Fan> {
        if e0 >= g.m() {
            return Err(Error::EdgeOutOfRange { edge: e0, m: g.m() });
        }
        if c.colour(e0).is_some() {
            return Err(Error::AlreadyColoured(e0));
        }
        let (a, b) = g.endpoints(e0);
        if hinge != a && hinge != b {
            return Err(Error::NotEndpoint { edge: e0, vertex: hinge });
        }
        let v1 = g.other(e0, hinge);

        self.generation = self.generation.wrapping_add(1);
        if self.generation == 0 {
            self.stamp.iter_mut().for_each(|s| *s = 0);
            self.generation = 1;
        }
        let gen = self.generation;
        self.stamp[v1] = gen;

        let mut seq = vec![v1];
        let mut witness = vec![e0];
        let mut parent = vec![0];

        // colours at the hinge on edges leading outside the fan
        let mut outside: Vec<usize> = Vec::new();
        let inc = g.incident(hinge);
        c.tick(inc.len() as u64);
        for &(w, e) in inc {
            if let Some(col) = c.colour(e) {
                if w != v1 {
                    outside.push(col);
                }
            }
        }
        for &col in &outside {
            self.in_pool[col] = true;
        }

        // colours of `outside` missing at some fan vertex, smallest first
        let mut ready: BinaryHeap<Reverse<usize>> = BinaryHeap::new();
        let mut pending: Vec<usize> = Vec::new();
        for &col in &outside {
            if c.is_missing(v1, col) {
                self.earliest[col] = 0;
                ready.push(Reverse(col));
            } else {
                pending.push(col);
            }
        }

        while let Some(Reverse(col)) = ready.pop() {
            if !self.in_pool[col] {
                continue;
            }
            let e = c
                .edge_at(hinge, col)
                .ok_or_else(|| Error::invariant("pool colour absent at hinge"))?;
            let w = g.other(e, hinge);
            let j = seq.len();
            seq.push(w);
            witness.push(e);
            parent.push(self.earliest[col]);
            self.stamp[w] = gen;

            let inc = g.incident(w);
            c.tick(inc.len() as u64);
            for &(x, f) in inc {
                if x == hinge {
                    if let Some(cf) = c.colour(f) {
                        self.in_pool[cf] = false;
                    }
                }
            }
            c.tick(pending.len() as u64);
            pending.retain(|&p| {
                if !self.in_pool[p] {
                    false
                } else if c.is_missing(w, p) {
                    self.earliest[p] = j;
                    ready.push(Reverse(p));
                    false
                } else {
                    true
                }
            });
        }
        for &col in &outside {
            self.in_pool[col] = false;
        }

        let hinge_missing = self.missing_set(g, c, hinge);
        let degree_sum = c.coloured_degree(hinge)
            + 1
            + seq.iter().map(|&w| c.coloured_degree(w)).sum::<usize>()
            + 1;
        Ok(Fan {
            hinge,
            e0,
            seq,
            witness,
            parent,
            degree_sum,
            hinge_missing,
        })
    }

    /// Shifts colours down the chain `j → parent(j) → … → 0` so that `e0`
    /// becomes coloured and `witness[j]` becomes the uncoloured edge.
    /// All-or-nothing: the chain is validated before any edge changes.
    pub fn rotate(
        &mut self,
        c: &mut PartialEdgeColouring,
        fan: &Fan,
        j: usize,
        trace: &mut Tracer<'_>,
    ) -> Result<()> {
        if j >= fan.len() {
            return Err(Error::structure(format!(
                "rotation index {j} outside fan of size {}",
                fan.len()
            )));
        }
        if j == 0 {
            return Ok(());
        }
        let chain = fan.chain(j);
        let mut moved = Vec::with_capacity(chain.len() - 1);
        for w in chain.windows(2) {
            let (from, to) = (w[0], w[1]);
            let col = c
                .colour(fan.witness[from])
                .ok_or_else(|| Error::invariant("rotation chain edge uncoloured"))?;
            if !c.is_missing(fan.seq[to], col) {
                return Err(Error::invariant(format!(
                    "colour {} of witness {} not missing at fan vertex {}",
                    col + 1,
                    fan.witness[from],
                    fan.seq[to]
                )));
            }
            moved.push((fan.witness[to], col));
        }
        if c.colour(fan.e0).is_some() {
            return Err(Error::invariant("rotation target e0 already coloured"));
        }
        for &from in &chain[..chain.len() - 1] {
            c.take(fan.witness[from]);
        }
        for &(e, col) in &moved {
            c.put(e, col);
        }
        trace.emit(|| TraceEvent::Rotate {
            hinge: fan.hinge,
            edges: moved.iter().map(|m| m.0).collect(),
            colours: moved.iter().map(|m| m.1).collect(),
            freed: fan.witness[j],
        });
        Ok(())
    }

    fn finish(
        &mut self,
        c: &mut PartialEdgeColouring,
        fan: &Fan,
        j: usize,
        colour: usize,
        trace: &mut Tracer<'_>,
    ) -> Result<()> {
        self.rotate(c, fan, j, trace)?;
        let e = fan.witness[j];
        c.assign(e, colour)
            .map_err(|err| Error::invariant(format!("final fan assignment failed: {err}")))?;
        trace.emit(|| TraceEvent::Assign { edge: e, colour });
        Ok(())
    }

    /// Completes the colouring through `fan` when two of its missing sets
    /// meet: directly when the hinge shares a missing colour with some fan
    /// vertex, otherwise after one two-colour swap.
    pub fn resolve(
        &mut self,
        g: &Multigraph,
        c: &mut PartialEdgeColouring,
        fan: &Fan,
        trace: &mut Tracer<'_>,
    ) -> Result<Resolution> {
        // Each failed probe at v_j hits a colour present at v_j, so this
        // pass costs O(k + d(F)).
        for j in 0..fan.len() {
            let w = fan.seq[j];
            let mut hit = None;
            for col in fan.hinge_missing.ones() {
                c.tick(1);
                if c.is_missing(w, col) {
                    hit = Some(col);
                    break;
                }
            }
            if let Some(col) = hit {
                self.finish(c, fan, j, col, trace)?;
                return Ok(Resolution::Completed {
                    rotated_to: j,
                    via_kempe: false,
                });
            }
        }

        let mut seen = FixedBitSet::with_capacity(self.k);
        let mut sets: Vec<FixedBitSet> = Vec::with_capacity(fan.len());
        let mut pair = None;
        for j in 0..fan.len() {
            let mj = self.missing_set(g, c, fan.seq[j]);
            if let Some(beta) = seen.intersection(&mj).next() {
                let i = (0..j)
                    .find(|&i| sets[i].contains(beta))
                    .expect("beta was seen earlier");
                pair = Some((i, j, beta));
                break;
            }
            seen.union_with(&mj);
            sets.push(mj);
        }
        let Some((i, j, beta)) = pair else {
            return Ok(Resolution::Disjoint);
        };
        let alpha = fan
            .hinge_missing
            .ones()
            .next()
            .ok_or_else(|| Error::invariant("hinge has no missing colour (k < Δ)"))?;

        // Every {alpha, beta}-component through the hinge, v_i or v_j is a
        // path ending there; at most one of v_i, v_j shares the hinge's path.
        let (vi, vj) = (fan.seq[i], fan.seq[j]);
        let path_j = c.kempe_component(alpha, beta, vj);
        let far_j = path_end(c, &path_j, vj);
        let target = if far_j == fan.hinge {
            let path_i = c.kempe_component(alpha, beta, vi);
            if path_end(c, &path_i, vi) == fan.hinge {
                return Err(Error::invariant("both fan vertices share the hinge's path"));
            }
            let swapped = c.kempe_swap(alpha, beta, vi)?;
            trace.emit(|| TraceEvent::KempeSwap {
                alpha,
                beta,
                edges: swapped,
            });
            i
        } else {
            let swapped = c.kempe_swap(alpha, beta, vj)?;
            trace.emit(|| TraceEvent::KempeSwap {
                alpha,
                beta,
                edges: swapped,
            });
            // if the path also ended at v_i, the witness coloured beta may
            // hang off v_i, so rotate to the earlier vertex instead
            if far_j == vi {
                i
            } else {
                j
            }
        };
        if !c.is_missing(fan.hinge, alpha) || !c.is_missing(fan.seq[target], alpha) {
            return Err(Error::invariant("swap did not free alpha at the target"));
        }
        self.finish(c, fan, target, alpha, trace)?;
        Ok(Resolution::Completed {
            rotated_to: target,
            via_kempe: true,
        })
    }
}

// Far endpoint of a path component listed in walk order from `start`.
fn path_end(c: &PartialEdgeColouring, path: &[usize], start: usize) -> usize {
    let mut here = start;
    for &e in path {
        let (a, b) = c.endpoints(e);
        here = if a == here { b } else { a };
    }
    here
}

/// Fans of size 1 or at least 3 that are maximal must resolve once
/// `k ≥ γ′_l`; size-2 fans are left to the fan-chain driver.
pub fn assert_resolvable_by_size(
    fan: &Fan,
    k: usize,
    gamma: usize,
    outcome: &Resolution,
) -> Result<()> {
    if k < gamma {
        return Err(Error::PaletteTooSmall { k, gamma });
    }
    if fan.len() != 2 && *outcome == Resolution::Disjoint {
        return Err(Error::invariant(format!(
            "maximal fan of size {} at hinge {} has disjoint missing sets",
            fan.len(),
            fan.hinge
        )));
    }
    Ok(())
}
