//! Extending a colouring of `G1` across a canonical interval 2-join.
//!
//! The extension repeatedly peels a stable set off `V2` together with one
//! colour class of `G1`, shrinking the palette by one, until one of the
//! closing cases colours what is left of `V2` outright. Every step is
//! checked; a failed check is an [`Error::InvariantViolation`].

use crate::error::{Error, Result};
use crate::oracle;
use crate::simple::SimpleGraph;

use super::interval::{self, colour_mod_omega, greedy_stable_set, order_reach};

pub const NONE: usize = usize::MAX;

/// `G` split as `G1 = G[V1]` and a linear interval graph `G[V2]` whose
/// leftmost clique `X2` sees exactly `X1` and whose rightmost clique `Y2`
/// sees exactly `Y1`. Vertex ids index into `graph`, which may hold other
/// isolated vertices.
#[derive(Clone, Debug)]
pub struct CanonicalJoin {
    graph: SimpleGraph,
    v1: Vec<usize>,
    x1: Vec<usize>,
    y1: Vec<usize>,
    v2: Vec<usize>,
    x2: Vec<usize>,
    y2: Vec<usize>,
}

fn membership(n: usize, vs: &[usize]) -> Vec<bool> {
    let mut m = vec![false; n];
    for &v in vs {
        m[v] = true;
    }
    m
}

fn sorted(vs: &[usize]) -> Vec<usize> {
    let mut s = vs.to_vec();
    s.sort_unstable();
    s
}

impl CanonicalJoin {
    /// `v2` lists `V2` from left to right. Empty `X`/`Y` cliques are allowed
    /// here; the decomposition tree rejects them on input.
    pub fn new(
        graph: SimpleGraph,
        v1: Vec<usize>,
        x1: Vec<usize>,
        y1: Vec<usize>,
        v2: Vec<usize>,
        x2: Vec<usize>,
        y2: Vec<usize>,
    ) -> Result<Self> {
        let n = graph.n();
        let all = v1.iter().chain(&v2);
        let mut seen = vec![false; n];
        for &v in all {
            if v >= n {
                return Err(Error::VertexOutOfRange { vertex: v, n });
            }
            if std::mem::replace(&mut seen[v], true) {
                return Err(Error::structure(format!("vertex {v} listed twice in the join")));
            }
        }
        let in1 = membership(n, &v1);
        let in2 = membership(n, &v2);
        if let Some(&v) = x1.iter().chain(&y1).find(|&&v| v >= n || !in1[v]) {
            return Err(Error::structure(format!("X1/Y1 vertex {v} is not in V1")));
        }
        if x2.len() + y2.len() > v2.len() {
            return Err(Error::structure("X2 and Y2 overlap"));
        }
        if sorted(&x2) != sorted(&v2[..x2.len()]) || sorted(&y2) != sorted(&v2[v2.len() - y2.len()..]) {
            return Err(Error::structure("X2 and Y2 must be the leftmost and rightmost vertices of V2"));
        }
        for (name, c) in [("X1", &x1), ("Y1", &y1), ("X2", &x2), ("Y2", &y2)] {
            if !graph.is_clique(c) {
                return Err(Error::structure(format!("{name} is not a clique")));
            }
        }
        order_reach(&graph, &v2).map_err(|e| Error::structure(format!("V2 is not a linear interval graph: {e}")))?;
        let (ix1, iy1, ix2, iy2) = (
            membership(n, &x1),
            membership(n, &y1),
            membership(n, &x2),
            membership(n, &y2),
        );
        for (u, w) in graph.edges() {
            if !(in1[u] || in2[u]) || !(in1[w] || in2[w]) {
                return Err(Error::structure(format!("edge {u} {w} leaves the join")));
            }
            if in1[u] == in1[w] {
                continue;
            }
            let (a, b) = if in1[u] { (u, w) } else { (w, u) };
            if !((ix1[a] && ix2[b]) || (iy1[a] && iy2[b])) {
                return Err(Error::structure(format!("edge {a} {b} is not an X or Y edge of the join")));
            }
        }
        for &a in &x1 {
            if x2.iter().any(|&b| !graph.has_edge(a, b)) {
                return Err(Error::structure(format!("{a} in X1 misses part of X2")));
            }
        }
        for &a in &y1 {
            if y2.iter().any(|&b| !graph.has_edge(a, b)) {
                return Err(Error::structure(format!("{a} in Y1 misses part of Y2")));
            }
        }
        Ok(CanonicalJoin {
            graph,
            v1,
            x1,
            y1,
            v2,
            x2,
            y2,
        })
    }

    pub fn graph(&self) -> &SimpleGraph {
        &self.graph
    }

    pub fn v1(&self) -> &[usize] {
        &self.v1
    }

    pub fn v2(&self) -> &[usize] {
        &self.v2
    }

    pub fn x1(&self) -> &[usize] {
        &self.x1
    }

    pub fn y1(&self) -> &[usize] {
        &self.y1
    }

    pub fn x2(&self) -> &[usize] {
        &self.x2
    }

    pub fn y2(&self) -> &[usize] {
        &self.y2
    }

    /// `max ⌈(d_G(v) + 1 + ω′(v)) / 2⌉` over `v` in `H2 = G[V2 ∪ X1 ∪ Y1]`,
    /// where `ω′(v)` only counts cliques of `H2` that avoid `X1 ∖ Y1` or
    /// avoid `Y1 ∖ X1`.
    pub fn gamma_j(&self) -> usize {
        let alive = vec![true; self.graph.n()];
        let view = View {
            x1: self.x1.clone(),
            y1: self.y1.clone(),
            x2: self.x2.clone(),
            y2: self.y2.clone(),
            order: self.v2.clone(),
            reach: Vec::new(),
        };
        gamma_of(&self.graph, &alive, &view)
    }
}

fn gamma_of(g: &SimpleGraph, alive: &[bool], view: &View) -> usize {
    let n = g.n();
    let mut h2 = membership(n, &view.order);
    for &v in view.x1.iter().chain(&view.y1) {
        h2[v] = true;
    }
    let (ix1, iy1) = (membership(n, &view.x1), membership(n, &view.y1));
    // cliques missing Y1 \ X1, and cliques missing X1 \ Y1
    let a: Vec<bool> = (0..n).map(|v| h2[v] && !(iy1[v] && !ix1[v])).collect();
    let b: Vec<bool> = (0..n).map(|v| h2[v] && !(ix1[v] && !iy1[v])).collect();
    (0..n)
        .filter(|&v| h2[v])
        .map(|v| {
            let d = g.neighbours(v).iter().filter(|&&w| alive[w]).count();
            let wa = if a[v] { g.max_clique_through(v, &a) } else { 0 };
            let wb = if b[v] { g.max_clique_through(v, &b) } else { 0 };
            (d + 1 + wa.max(wb)).div_ceil(2)
        })
        .max()
        .unwrap_or(0)
}

/// Why a `V1` vertex changed colour.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RecolourReason {
    /// Raising the number of colours shared by `X1` and `Y1`, done once
    /// before any peeling.
    Overlap,
    /// A vertex of `X1 △ Y1` moved to a colour missing from its closed
    /// neighbourhood so the overlap drops below `|X1|`.
    FreeColour,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Recolour {
    pub vertex: usize,
    pub from: usize,
    pub to: usize,
    pub reason: RecolourReason,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct JoinStats {
    /// How often each of the six cases was entered, in case order.
    pub cases: [u64; 6],
    /// Colour classes of `G1` dropped because the palette exceeded the bound.
    pub class_removals: u64,
    /// Shifts of the tight-case colouring past the start of a largest clique.
    pub rollbacks: u64,
    pub recoloured: Vec<Recolour>,
}

impl JoinStats {
    pub fn absorb(&mut self, other: &JoinStats) {
        for (a, b) in self.cases.iter_mut().zip(other.cases) {
            *a += b;
        }
        self.class_removals += other.class_removals;
        self.rollbacks += other.rollbacks;
        self.recoloured.extend_from_slice(&other.recoloured);
    }
}

#[derive(Clone, Debug)]
pub struct JoinOutcome {
    /// Colour per vertex of the join graph, [`NONE`] off `V1 ∪ V2`.
    pub colours: Vec<usize>,
    pub stats: JoinStats,
}

// The four cliques and the live part of V2, possibly mirrored.
#[derive(Clone, Debug)]
struct View {
    x1: Vec<usize>,
    y1: Vec<usize>,
    x2: Vec<usize>,
    y2: Vec<usize>,
    order: Vec<usize>,
    reach: Vec<usize>,
}

impl View {
    // reach is left empty; callers go through `Residual::with_reach`
    fn mirror(mut self) -> View {
        std::mem::swap(&mut self.x1, &mut self.y1);
        std::mem::swap(&mut self.x2, &mut self.y2);
        self.order.reverse();
        self.reach.clear();
        self
    }
}

struct Residual<'a> {
    j: &'a CanonicalJoin,
    alive: Vec<bool>,
    colour: Vec<usize>,
    palette: Vec<bool>,
    stats: JoinStats,
}

fn contains(vs: &[usize], v: usize) -> bool {
    vs.contains(&v)
}

impl<'a> Residual<'a> {
    fn view(&self) -> Result<View> {
        let live = |vs: &[usize]| -> Vec<usize> { vs.iter().copied().filter(|&v| self.alive[v]).collect() };
        let mut v = View {
            x1: live(&self.j.x1),
            y1: live(&self.j.y1),
            x2: live(&self.j.x2),
            y2: live(&self.j.y2),
            order: live(&self.j.v2),
            reach: Vec::new(),
        };
        v.reach = order_reach(&self.j.graph, &v.order)?;
        Ok(v)
    }

    fn with_reach(&self, mut v: View) -> Result<View> {
        v.reach = order_reach(&self.j.graph, &v.order)?;
        Ok(v)
    }

    fn palette_size(&self) -> usize {
        self.palette.iter().filter(|&&p| p).count()
    }

    fn palette_colours(&self) -> Vec<usize> {
        (0..self.palette.len()).filter(|&c| self.palette[c]).collect()
    }

    fn colours_of(&self, vs: &[usize]) -> Vec<usize> {
        let mut c: Vec<usize> = vs.iter().map(|&v| self.colour[v]).collect();
        c.sort_unstable();
        c.dedup();
        c
    }

    fn overlap(&self, view: &View) -> Vec<usize> {
        let b = self.colours_of(&view.y1);
        self.colours_of(&view.x1).into_iter().filter(|c| b.contains(c)).collect()
    }

    // colours on live V1 neighbours of v, plus v's own
    fn closed_colours(&self, v: usize) -> Vec<bool> {
        let mut seen = vec![false; self.palette.len()];
        seen[self.colour[v]] = true;
        for &w in self.j.graph.neighbours(v) {
            if self.alive[w] && self.colour[w] != NONE {
                seen[self.colour[w]] = true;
            }
        }
        seen
    }

    fn recolour(&mut self, v: usize, to: usize, reason: RecolourReason) {
        self.stats.recoloured.push(Recolour {
            vertex: v,
            from: self.colour[v],
            to,
            reason,
        });
        self.colour[v] = to;
    }

    // Raise the overlap: a vertex of X1 whose colour Y1 lacks takes any
    // colour of Y1 missing around it, and symmetrically.
    fn maximise_overlap(&mut self) {
        let (x1, y1) = (self.j.x1.clone(), self.j.y1.clone());
        loop {
            let mut changed = false;
            for (side, other) in [(&x1, &y1), (&y1, &x1)] {
                for &v in side.iter() {
                    let theirs = self.colours_of(other);
                    if theirs.contains(&self.colour[v]) {
                        continue;
                    }
                    let seen = self.closed_colours(v);
                    if let Some(&c) = theirs.iter().find(|&&c| !seen[c]) {
                        self.recolour(v, c, RecolourReason::Overlap);
                        changed = true;
                    }
                }
            }
            if !changed {
                return;
            }
        }
    }

    // S joins colour class `class`; both leave the instance.
    fn remove(&mut self, s: &[usize], class: usize) -> Result<()> {
        let members: Vec<usize> = self
            .j
            .v1
            .iter()
            .copied()
            .filter(|&v| self.alive[v] && self.colour[v] == class)
            .collect();
        let all: Vec<usize> = s.iter().chain(&members).copied().collect();
        for (i, &u) in all.iter().enumerate() {
            if all[i + 1..].iter().any(|&w| self.j.graph.has_edge(u, w)) {
                return Err(Error::invariant(format!(
                    "peeled set with colour {} is not stable at vertex {u}",
                    class + 1
                )));
            }
        }
        for &v in &all {
            self.colour[v] = class;
            self.alive[v] = false;
        }
        self.palette[class] = false;
        Ok(())
    }

    fn drop_class(&mut self, view: &View) -> Result<()> {
        let ends = self.colours_of(&[view.x1.as_slice(), &view.y1].concat());
        let pal = self.palette_colours();
        let class = pal.iter().copied().find(|c| !ends.contains(c)).unwrap_or(pal[0]);
        self.stats.class_removals += 1;
        self.remove(&[], class)
    }

    fn stable_from(&self, view: &View, skip_x2: bool) -> Vec<usize> {
        greedy_stable_set(&view.reach, |p| skip_x2 && contains(&view.x2, view.order[p]))
            .into_iter()
            .map(|p| view.order[p])
            .collect()
    }

    fn case2(&mut self, view: &View) -> Result<()> {
        let s = self.stable_from(view, false);
        let ends = self.colours_of(&[view.x1.as_slice(), &view.y1].concat());
        let class = if s.iter().any(|&v| contains(&view.y2, v)) {
            self.palette_colours().into_iter().find(|c| !ends.contains(c))
        } else {
            self.colours_of(&view.y1).first().copied()
        };
        let class = class.ok_or_else(|| Error::invariant("no colour class to pair with the stable set"))?;
        self.remove(&s, class)
    }

    fn case4(&mut self, view: &View) -> Result<()> {
        let s = self.stable_from(view, true);
        let (cx, cy) = (self.colours_of(&view.x1), self.colours_of(&view.y1));
        let class = if s.iter().any(|&v| contains(&view.y2, v)) {
            cx.iter().copied().find(|c| !cy.contains(c))
        } else {
            cx.iter().copied().find(|c| cy.contains(c))
        };
        let class = class.ok_or_else(|| Error::invariant("no colour class to pair with the stable set"))?;
        self.remove(&s, class)
    }

    // Colour V2 vertices through `map` from local colours to palette colours.
    fn apply(&mut self, vs: &[usize], local: &[usize], map: &[usize]) {
        for (&v, &c) in vs.iter().zip(local) {
            self.colour[v] = map[c];
        }
    }

    // Extends `fixed` (local colour -> palette colour) to an injection of
    // `0..w` into the live palette.
    fn complete_map(&self, w: usize, mut fixed: Vec<usize>) -> Result<Vec<usize>> {
        fixed.resize(w, NONE);
        let taken = fixed.clone();
        let mut spare = self.palette_colours().into_iter().filter(|c| !taken.contains(c));
        for slot in fixed.iter_mut().filter(|s| **s == NONE) {
            *slot = spare
                .next()
                .ok_or_else(|| Error::invariant(format!("{w} local colours exceed the palette")))?;
        }
        Ok(fixed)
    }

    fn pin(&self, pins: &mut [usize], local: usize, to: usize) -> Result<()> {
        if pins[local] != NONE && pins[local] != to {
            return Err(Error::invariant("clique cutset received two colours for one class"));
        }
        if pins.iter().enumerate().any(|(i, &p)| i != local && p == to) {
            return Err(Error::invariant("clique cutset colours collide"));
        }
        pins[local] = to;
        Ok(())
    }

    // Each component of G2 meets at most a nested pair of attachment cliques;
    // colour it with them and permute onto the existing colours.
    fn finish_components(&mut self, view: &View) -> Result<()> {
        let mut start = 0;
        for p in 0..view.order.len() {
            if view.reach[p] != p {
                continue;
            }
            let comp = &view.order[start..=p];
            start = p + 1;
            let mut left: Vec<usize> = Vec::new();
            let mut right: Vec<usize> = Vec::new();
            if comp.iter().any(|&v| contains(&view.x2, v)) {
                left = view.x1.clone();
            }
            if comp.iter().any(|&v| contains(&view.y2, v)) {
                right = view.y1.iter().copied().filter(|&v| !contains(&left, v)).collect();
            }
            let attach: Vec<usize> = left.iter().chain(&right).copied().collect();
            if !self.j.graph.is_clique(&attach) {
                return Err(Error::invariant("component attaches to a non-clique"));
            }
            let verts: Vec<usize> = left.iter().chain(comp).chain(&right).copied().collect();
            let (w, local) = match order_reach(&self.j.graph, &verts) {
                Ok(reach) => colour_mod_omega(&reach),
                Err(_) => {
                    let h = self.j.graph.induced(&verts);
                    oracle::optimal_vertex_colouring(&h, &interval::exact_guard(64))?
                }
            };
            if w > self.palette_size() {
                return Err(Error::invariant(format!(
                    "component needs {w} colours, palette has {}",
                    self.palette_size()
                )));
            }
            let mut pins = vec![NONE; w];
            for (i, &a) in verts.iter().enumerate() {
                if contains(&attach, a) {
                    self.pin(&mut pins, local[i], self.colour[a])?;
                }
            }
            let map = self.complete_map(w, pins)?;
            let (vs, ls): (Vec<usize>, Vec<usize>) = verts
                .iter()
                .zip(&local)
                .filter(|(v, _)| !contains(&attach, **v))
                .map(|(&v, &c)| (v, c))
                .unzip();
            self.apply(&vs, &ls, &map);
        }
        Ok(())
    }

    fn finish_case3(&mut self, view: &View) -> Result<()> {
        let l = self.palette_size();
        let (x1, y1, x2, y2) = (&view.x1, &view.y1, &view.x2, &view.y2);
        if l != x1.len() + y1.len() || y1.len() < 2 * x2.len() || x1.len() < 2 * y2.len() {
            return Err(Error::invariant(format!(
                "tight case sizes: l={l} |X1|={} |Y1|={} |X2|={} |Y2|={}",
                x1.len(),
                y1.len(),
                x2.len(),
                y2.len()
            )));
        }
        let verts: Vec<usize> = x1.iter().chain(&view.order).copied().collect();
        let reach = order_reach(&self.j.graph, &verts)?;
        let (w, mut local) = colour_mod_omega(&reach);
        if w > l {
            return Err(Error::invariant(format!("H3 clique {w} exceeds palette {l}")));
        }
        let b = l - w;
        let first = (0..reach.len()).find(|&i| reach[i] - i + 1 == w).unwrap_or(0);
        let h3 = self.j.graph.induced(&verts);
        let ny = verts.len() - y2.len();
        let bad = |local: &[usize]| -> Vec<usize> {
            let onx: Vec<usize> = local[..x1.len()].to_vec();
            let mut out: Vec<usize> = local[ny..].iter().copied().filter(|c| !onx.contains(c)).collect();
            out.sort_unstable();
            out
        };
        let mut rolls = 0;
        if bad(&local).len() > b && first < x1.len() {
            return Err(Error::invariant("largest clique of H3 meets X1"));
        }
        while bad(&local).len() > b {
            interval::roll_back(&mut local, first, w);
            rolls += 1;
            self.stats.rollbacks += 1;
            if rolls > w || h3.check_colouring(&local).is_err() {
                return Err(Error::invariant("rolling back did not clear Y2 colours"));
            }
        }
        // each bad colour on Y2 moves to a fresh colour, shared with an X1
        // vertex whose colour Y2 does not use
        for (fresh, beta) in (w..).zip(bad(&local)) {
            let yi = ny + local[ny..].iter().position(|&c| c == beta).expect("bad colour is on Y2");
            let on_y: Vec<usize> = local[ny..].to_vec();
            let xi = (0..x1.len())
                .find(|&i| local[i] < w && !on_y.contains(&local[i]))
                .ok_or_else(|| Error::invariant("no X1 vertex free to share a fresh colour"))?;
            local[yi] = fresh;
            local[xi] = fresh;
        }
        h3.check_colouring(&local)
            .map_err(|e| Error::invariant(format!("H3 colouring: {e}")))?;
        let mut pins = vec![NONE; l];
        for (i, &x) in x1.iter().enumerate() {
            self.pin(&mut pins, local[i], self.colour[x])?;
        }
        let map = self.complete_map(l, pins)?;
        self.apply(&view.order, &local[x1.len()..], &map);
        Ok(())
    }

    fn finish_case5(&mut self, view: &View) -> Result<()> {
        let (w, local) = colour_mod_omega(&view.reach);
        let ends = self.colours_of(&[view.x1.as_slice(), &view.y1].concat());
        let avail: Vec<usize> = self.palette_colours().into_iter().filter(|c| !ends.contains(c)).collect();
        if w > avail.len() {
            return Err(Error::invariant(format!("G2 clique {w} leaves no room beside X1 and Y1")));
        }
        self.apply(&view.order, &local, &avail);
        Ok(())
    }

    fn free_colour_recolour(&mut self, view: &View) -> bool {
        let sym: Vec<usize> = view
            .x1
            .iter()
            .filter(|v| !contains(&view.y1, **v))
            .chain(view.y1.iter().filter(|v| !contains(&view.x1, **v)))
            .copied()
            .collect();
        for v in sym {
            let seen = self.closed_colours(v);
            if let Some(c) = self.palette_colours().into_iter().find(|&c| !seen[c]) {
                self.recolour(v, c, RecolourReason::FreeColour);
                return true;
            }
        }
        false
    }

    fn finish_case6(&mut self, view: &View) -> Result<()> {
        let (w, local) = colour_mod_omega(&view.reach);
        if w > self.palette_size() {
            return Err(Error::invariant("G2 clique exceeds the palette"));
        }
        let ends = self.colours_of(&[view.x1.as_slice(), &view.y1].concat());
        let mut free = self.palette_colours().into_iter().filter(|c| !ends.contains(c));
        let mut pins = vec![NONE; w];
        for (p, &v) in view.order.iter().enumerate() {
            if (contains(&view.x2, v) || contains(&view.y2, v)) && pins[local[p]] == NONE {
                pins[local[p]] = free
                    .next()
                    .ok_or_else(|| Error::invariant("X2 and Y2 need more colours than X1 and Y1 leave"))?;
            }
        }
        let map = self.complete_map(w, pins)?;
        self.apply(&view.order, &local, &map);
        Ok(())
    }

    fn is_case1(view: &View) -> bool {
        let sub = |a: &[usize], b: &[usize]| a.iter().all(|v| b.contains(v));
        sub(&view.x1, &view.y1)
            || sub(&view.y1, &view.x1)
            || view.x2.is_empty()
            || view.y2.is_empty()
            || (0..view.order.len().saturating_sub(1)).any(|p| view.reach[p] == p)
    }

    fn run(&mut self) -> Result<()> {
        self.maximise_overlap();
        let mut first = true;
        loop {
            let view = self.view()?;
            if view.order.is_empty() {
                return Ok(());
            }
            let l = self.palette_size();
            let gamma = gamma_of(&self.j.graph, &self.alive, &view);
            if gamma > l {
                return Err(if first {
                    Error::PaletteTooSmall { k: l, gamma }
                } else {
                    Error::invariant(format!("after peeling the bound is {gamma} but only {l} colours remain"))
                });
            }
            first = false;
            if l > gamma {
                self.drop_class(&view)?;
                continue;
            }
            if Self::is_case1(&view) {
                self.stats.cases[0] += 1;
                return self.finish_components(&view);
            }
            let k = self.overlap(&view).len();
            if k == 0 {
                if l > view.x1.len() + view.y1.len() {
                    self.stats.cases[1] += 1;
                    self.case2(&view)?;
                    continue;
                }
                self.stats.cases[2] += 1;
                let view = if view.y2.len() > view.x2.len() {
                    self.with_reach(view.mirror())?
                } else {
                    view
                };
                return self.finish_case3(&view);
            }
            let view = if view.x1.len() < view.y1.len() {
                self.with_reach(view.mirror())?
            } else {
                view
            };
            if k < view.x1.len() {
                self.stats.cases[3] += 1;
                self.case4(&view)?;
                continue;
            }
            if k == 1 {
                self.stats.cases[4] += 1;
                return self.finish_case5(&view);
            }
            self.stats.cases[5] += 1;
            if self.free_colour_recolour(&view) {
                continue;
            }
            return self.finish_case6(&view);
        }
    }
}

/// Extends a proper colouring `c1` of `G1` (entries off `V1` are ignored)
/// to all of `G` with colours `0..l`. `l` must be at least
/// [`CanonicalJoin::gamma_j`] and at least the colours used by `c1`.
/// `V1` colours may change only as listed in the returned stats.
pub fn extend_over_join(j: &CanonicalJoin, c1: &[usize], l: usize) -> Result<JoinOutcome> {
    let n = j.graph.n();
    if c1.len() != n {
        return Err(Error::structure(format!("{} colours for {n} vertices", c1.len())));
    }
    let mut colour = vec![NONE; n];
    for &v in &j.v1 {
        if c1[v] >= l {
            return Err(Error::ColourOutOfPalette { colour: c1[v], k: l });
        }
        colour[v] = c1[v];
    }
    for &v in &j.v1 {
        if let Some(&w) = j.graph.neighbours(v).iter().find(|&&w| colour[w] == colour[v]) {
            return Err(Error::structure(format!(
                "G1 colouring is not proper at {v} {w}"
            )));
        }
    }
    let mut alive = vec![false; n];
    for &v in j.v1.iter().chain(&j.v2) {
        alive[v] = true;
    }
    let mut r = Residual {
        j,
        alive,
        colour,
        palette: vec![true; l],
        stats: JoinStats::default(),
    };
    r.run()?;
    let Residual { colour, stats, .. } = r;
    for &v in j.v1.iter().chain(&j.v2) {
        if colour[v] >= l {
            return Err(Error::invariant(format!("vertex {v} left uncoloured")));
        }
    }
    for (u, w) in j.graph.edges() {
        if colour[u] != NONE && colour[u] == colour[w] {
            return Err(Error::invariant(format!("join colouring clashes on {u} {w}")));
        }
    }
    Ok(JoinOutcome { colours: colour, stats })
}

#[cfg(test)]
mod tests {
    use super::*;

    // G1 = K2 {0,1}; V2 = path 2-3-4; X1 = {0} sees 2, Y1 = {1} sees 4.
    // G is C5.
    fn c5_join() -> CanonicalJoin {
        let g = SimpleGraph::from_edges(5, &[(0, 1), (0, 2), (2, 3), (3, 4), (4, 1)]).unwrap();
        CanonicalJoin::new(g, vec![0, 1], vec![0], vec![1], vec![2, 3, 4], vec![2], vec![4]).unwrap()
    }

    #[test]
    fn c5_needs_three() {
        let j = c5_join();
        assert_eq!(j.gamma_j(), 3);
        let out = extend_over_join(&j, &[0, 1, NONE, NONE, NONE], 3).unwrap();
        j.graph().check_colouring(&out.colours).unwrap();
        assert_eq!(&out.colours[..2], &[0, 1]);
        assert!(matches!(
            extend_over_join(&j, &[0, 1, NONE, NONE, NONE], 2),
            Err(Error::PaletteTooSmall { k: 2, gamma: 3 })
        ));
    }

    #[test]
    fn validation() {
        let g = SimpleGraph::from_edges(5, &[(0, 1), (0, 2), (2, 3), (3, 4), (4, 1)]).unwrap();
        let bad_order = CanonicalJoin::new(g.clone(), vec![0, 1], vec![0], vec![1], vec![2, 4, 3], vec![2], vec![3]);
        assert!(bad_order.is_err());
        let wrong_x = CanonicalJoin::new(g.clone(), vec![0, 1], vec![1], vec![0], vec![2, 3, 4], vec![2], vec![4]);
        assert!(wrong_x.is_err());
        let overlap = CanonicalJoin::new(g, vec![0, 1], vec![0], vec![1], vec![2, 3, 4], vec![2, 3, 4], vec![4]);
        assert!(overlap.is_err());
    }

    #[test]
    fn improper_input_rejected() {
        let j = c5_join();
        assert!(extend_over_join(&j, &[0, 0, NONE, NONE, NONE], 3).is_err());
        assert!(extend_over_join(&j, &[0, 5, NONE, NONE, NONE], 3).is_err());
    }
}
