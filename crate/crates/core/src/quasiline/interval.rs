//! Linear and circular interval graphs, and colouring along a proper
//! interval order.

use num_rational::Rational64;

use crate::error::{Error, Result};
use crate::oracle::{self, OracleGuard};
use crate::simple::SimpleGraph;

/// Points on the line, one per vertex in increasing order, and closed
/// intervals; two vertices are adjacent when one interval holds both points.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinearIntervalGraph {
    points: Vec<Rational64>,
    intervals: Vec<(Rational64, Rational64)>,
    reach: Vec<usize>,
}

impl LinearIntervalGraph {
    pub fn new(points: Vec<Rational64>, intervals: Vec<(Rational64, Rational64)>) -> Result<Self> {
        if points.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::structure("interval points must be strictly increasing"));
        }
        if let Some(&(lo, hi)) = intervals.iter().find(|(lo, hi)| lo > hi) {
            return Err(Error::structure(format!("empty interval {lo}..{hi}")));
        }
        let mut reach: Vec<usize> = (0..points.len()).collect();
        for &(lo, hi) in &intervals {
            let a = points.partition_point(|p| *p < lo);
            let b = points.partition_point(|p| *p <= hi);
            for r in reach.iter_mut().take(b).skip(a) {
                *r = (*r).max(b - 1);
            }
        }
        Ok(LinearIntervalGraph {
            points,
            intervals,
            reach,
        })
    }

    /// Integer points `0..n` with each `(a, b)` covering points `a..=b`.
    pub fn from_ranges(n: usize, ranges: &[(usize, usize)]) -> Result<Self> {
        let points = (0..n as i64).map(Rational64::from_integer).collect();
        let intervals = ranges
            .iter()
            .map(|&(a, b)| (Rational64::from_integer(a as i64), Rational64::from_integer(b as i64)))
            .collect();
        Self::new(points, intervals)
    }

    pub fn n(&self) -> usize {
        self.points.len()
    }

    pub fn points(&self) -> &[Rational64] {
        &self.points
    }

    pub fn intervals(&self) -> &[(Rational64, Rational64)] {
        &self.intervals
    }

    /// Last vertex adjacent to `i` (or `i` itself) in point order.
    pub fn reach(&self, i: usize) -> usize {
        self.reach[i]
    }

    pub fn adjacent(&self, i: usize, j: usize) -> bool {
        let (a, b) = if i < j { (i, j) } else { (j, i) };
        a != b && b <= self.reach[a]
    }

    pub fn to_simple(&self) -> SimpleGraph {
        let mut g = SimpleGraph::new(self.n());
        for i in 0..self.n() {
            for j in i + 1..=self.reach[i] {
                g.add_edge(i, j).expect("in range");
            }
        }
        g
    }

    pub fn clique_number(&self) -> usize {
        (0..self.n()).map(|i| self.reach[i] - i + 1).max().unwrap_or(0)
    }

    /// Whether the `x` leftmost and `y` rightmost vertices form cliques.
    pub fn has_end_cliques(&self, x: usize, y: usize) -> bool {
        let n = self.n();
        x <= n && y <= n && (x == 0 || self.reach[0] + 1 >= x) && (y == 0 || self.reach[n - y] == n - 1)
    }
}

/// Checks that `order` lists the vertices of an induced subgraph of `g` so
/// that the later neighbours of each vertex come right after it and form a
/// clique with it (so the run ends never move left). Returns,
/// per position, the last position adjacent to it.
pub fn order_reach(g: &SimpleGraph, order: &[usize]) -> Result<Vec<usize>> {
    let mut pos = vec![usize::MAX; g.n()];
    for (i, &v) in order.iter().enumerate() {
        pos[v] = i;
    }
    let mut reach = Vec::with_capacity(order.len());
    for (i, &v) in order.iter().enumerate() {
        let later = g
            .neighbours(v)
            .iter()
            .filter(|&&w| pos[w] != usize::MAX && pos[w] > i)
            .count();
        let r = i + later;
        if (i + 1..=r).any(|p| !g.has_edge(v, order[p])) {
            return Err(Error::structure(format!(
                "vertex {v} does not see a consecutive run of later vertices"
            )));
        }
        if reach.last().is_some_and(|&q| q > r) {
            return Err(Error::structure(format!("vertex {v} breaks the clique run before it")));
        }
        reach.push(r);
    }
    Ok(reach)
}

pub fn omega_of(reach: &[usize]) -> usize {
    reach.iter().enumerate().map(|(i, &r)| r - i + 1).max().unwrap_or(0)
}

/// Positions picked left to right, skipping `skip`, keeping the set stable.
pub fn greedy_stable_set(reach: &[usize], skip: impl Fn(usize) -> bool) -> Vec<usize> {
    let mut out: Vec<usize> = Vec::new();
    for p in 0..reach.len() {
        if skip(p) {
            continue;
        }
        if out.last().is_none_or(|&q| p > reach[q]) {
            out.push(p);
        }
    }
    out
}

/// Colour of position `p` is `p mod ω`; proper for any proper order.
pub fn colour_mod_omega(reach: &[usize]) -> (usize, Vec<usize>) {
    let w = omega_of(reach);
    (w, (0..reach.len()).map(|p| p % w.max(1)).collect())
}

/// Shifts every colour from position `from` onward to the next one mod `w`.
pub fn roll_back(colours: &mut [usize], from: usize, w: usize) {
    for c in colours.iter_mut().skip(from) {
        *c = (*c + 1) % w;
    }
}

/// Points on the unit circle (angles in `[0, 1)`) and arcs; an arc `(a, b)`
/// runs anticlockwise from `a` to `b` and wraps past 0 when `b < a`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CircularIntervalGraph {
    points: Vec<Rational64>,
    arcs: Vec<(Rational64, Rational64)>,
}

fn unit(x: Rational64) -> bool {
    x >= Rational64::from_integer(0) && x < Rational64::from_integer(1)
}

impl CircularIntervalGraph {
    pub fn new(points: Vec<Rational64>, arcs: Vec<(Rational64, Rational64)>) -> Result<Self> {
        for &p in points.iter().chain(arcs.iter().flat_map(|(a, b)| [a, b])) {
            if !unit(p) {
                return Err(Error::structure(format!("angle {p} outside [0, 1)")));
            }
        }
        let mut sorted = points.clone();
        sorted.sort();
        if sorted.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::structure("circle points must be distinct"));
        }
        Ok(CircularIntervalGraph { points, arcs })
    }

    /// The circular representation of a linear interval graph.
    pub fn from_linear(li: &LinearIntervalGraph) -> Self {
        let n = li.n() as i64;
        let angle = |i: usize| Rational64::new(i as i64, n + 1);
        let points = (0..li.n()).map(angle).collect();
        let arcs = (0..li.n())
            .filter(|&i| li.reach(i) > i)
            .map(|i| (angle(i), angle(li.reach(i))))
            .collect();
        CircularIntervalGraph { points, arcs }
    }

    pub fn n(&self) -> usize {
        self.points.len()
    }

    pub fn points(&self) -> &[Rational64] {
        &self.points
    }

    pub fn arcs(&self) -> &[(Rational64, Rational64)] {
        &self.arcs
    }

    fn on_arc(&self, (a, b): (Rational64, Rational64), x: Rational64) -> bool {
        if a <= b {
            a <= x && x <= b
        } else {
            x >= a || x <= b
        }
    }

    pub fn to_simple(&self) -> SimpleGraph {
        let mut g = SimpleGraph::new(self.n());
        for &arc in &self.arcs {
            let inside: Vec<usize> = (0..self.n()).filter(|&i| self.on_arc(arc, self.points[i])).collect();
            for (i, &u) in inside.iter().enumerate() {
                for &v in &inside[i + 1..] {
                    g.add_edge(u, v).expect("in range");
                }
            }
        }
        g
    }
}

/// Largest graph the exact circular solver accepts.
pub const CIRCULAR_LIMIT: usize = 24;

pub(crate) fn exact_guard(n: usize) -> OracleGuard {
    OracleGuard {
        max_vertices: n,
        max_edges: n,
        max_palette: n,
        ..OracleGuard::default()
    }
}

/// An optimal colouring by exhaustive search; at most [`CIRCULAR_LIMIT`]
/// vertices.
pub fn colour_circular_interval_exact(ci: &CircularIntervalGraph) -> Result<Vec<usize>> {
    if ci.n() > CIRCULAR_LIMIT {
        return Err(Error::GuardExceeded(format!(
            "circular interval graph with {} vertices exceeds {CIRCULAR_LIMIT}",
            ci.n()
        )));
    }
    let h = ci.to_simple();
    let (k, colours) = oracle::optimal_vertex_colouring(&h, &exact_guard(CIRCULAR_LIMIT))?;
    let bound = oracle::local_vertex_bound_bf(&h, &exact_guard(CIRCULAR_LIMIT))?;
    if k > bound {
        return Err(Error::invariant(format!(
            "circular interval graph needs {k} colours, above its local bound {bound}"
        )));
    }
    Ok(colours)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(n: i64) -> Rational64 {
        Rational64::from_integer(n)
    }

    #[test]
    fn path_and_clique() {
        let p = LinearIntervalGraph::from_ranges(3, &[(0, 1), (1, 2)]).unwrap();
        assert_eq!(p.to_simple().edges(), vec![(0, 1), (1, 2)]);
        assert_eq!(p.clique_number(), 2);
        let g = p.to_simple();
        let reach = order_reach(&g, &[0, 1, 2]).unwrap();
        assert_eq!(greedy_stable_set(&reach, |_| false), vec![0, 2]);
        let (w, col) = colour_mod_omega(&reach);
        assert_eq!((w, col.clone()), (2, vec![0, 1, 0]));
        let mut rolled = col;
        roll_back(&mut rolled, 0, w);
        assert_eq!(rolled, vec![1, 0, 1]);
        g.check_colouring(&rolled).unwrap();

        let k3 = LinearIntervalGraph::from_ranges(3, &[(0, 2)]).unwrap();
        let reach = order_reach(&k3.to_simple(), &[0, 1, 2]).unwrap();
        assert_eq!(greedy_stable_set(&reach, |_| false), vec![0]);
        assert_eq!(greedy_stable_set(&reach, |p| p == 0), vec![1]);
    }

    #[test]
    fn clique_in_path_of_five() {
        let li = LinearIntervalGraph::from_ranges(5, &[(0, 1), (1, 3), (3, 4)]).unwrap();
        let g = li.to_simple();
        let reach = order_reach(&g, &[0, 1, 2, 3, 4]).unwrap();
        let (w, col) = colour_mod_omega(&reach);
        assert_eq!(w, 3);
        assert_eq!(col, vec![0, 1, 2, 0, 1]);
        g.check_colouring(&col).unwrap();
    }

    #[test]
    fn rational_points() {
        let li = LinearIntervalGraph::new(
            vec![Rational64::new(1, 2), r(1), r(3)],
            vec![(Rational64::new(1, 3), r(2))],
        )
        .unwrap();
        assert!(li.adjacent(0, 1) && !li.adjacent(1, 2));
        assert!(li.has_end_cliques(2, 1));
        assert!(!li.has_end_cliques(3, 0));
        assert!(LinearIntervalGraph::new(vec![r(1), r(1)], vec![]).is_err());
    }

    #[test]
    fn order_reach_rejects_bad_order() {
        let p = LinearIntervalGraph::from_ranges(3, &[(0, 1), (1, 2)]).unwrap().to_simple();
        assert!(order_reach(&p, &[1, 0, 2]).is_err());
    }

    #[test]
    fn circular_examples() {
        let q = |a: i64, b: i64| Rational64::new(a, b);
        let c5 = CircularIntervalGraph::new(
            (0..5).map(|i| q(i, 5)).collect(),
            (0..5).map(|i| (q(i, 5), q((i + 1) % 5, 5))).collect(),
        )
        .unwrap();
        assert_eq!(c5.to_simple().m(), 5);
        let col = colour_circular_interval_exact(&c5).unwrap();
        assert_eq!(crate::simple::colours_used(&col), 3);
        let c4 = CircularIntervalGraph::new(
            (0..4).map(|i| q(i, 4)).collect(),
            (0..4).map(|i| (q(i, 4), q((i + 1) % 4, 4))).collect(),
        )
        .unwrap();
        assert_eq!(crate::simple::colours_used(&colour_circular_interval_exact(&c4).unwrap()), 2);
        let k4 = CircularIntervalGraph::new((0..4).map(|i| q(i, 4)).collect(), vec![(q(0, 1), q(3, 4))]).unwrap();
        assert_eq!(crate::simple::colours_used(&colour_circular_interval_exact(&k4).unwrap()), 4);
        assert!(CircularIntervalGraph::new(vec![r(1)], vec![]).is_err());
    }

    #[test]
    fn linear_embeds_in_circle() {
        let li = LinearIntervalGraph::from_ranges(5, &[(0, 1), (1, 3), (3, 4)]).unwrap();
        assert_eq!(CircularIntervalGraph::from_linear(&li).to_simple(), li.to_simple());
    }
}
