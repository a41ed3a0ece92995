//! Compositions of linear interval strips over a multigraph.
//!
//! Each arc `u -> w` of a small multigraph `H` carries a strip: a linear
//! interval graph with a leftmost clique `X` and a rightmost clique `Y`.
//! Realising the composition makes, for every vertex `v` of `H`, the union
//! of the `X` cliques leaving `v` and the `Y` cliques entering it a clique.

use crate::error::{Error, Result};
use crate::multigraph::Multigraph;
use crate::simple::SimpleGraph;

use super::interval::{CircularIntervalGraph, LinearIntervalGraph};
use super::tree::{DecompositionTree, Node};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Strip {
    graph: LinearIntervalGraph,
    x: usize,
    y: usize,
}

impl Strip {
    /// `x` and `y` are the sizes of the end cliques.
    pub fn new(graph: LinearIntervalGraph, x: usize, y: usize) -> Result<Self> {
        if graph.n() == 0 {
            return Err(Error::structure("empty strip"));
        }
        if !graph.has_end_cliques(x, y) {
            return Err(Error::structure(format!("strip ends of sizes {x} and {y} are not cliques")));
        }
        Ok(Strip { graph, x, y })
    }

    pub fn graph(&self) -> &LinearIntervalGraph {
        &self.graph
    }

    pub fn x(&self) -> usize {
        self.x
    }

    pub fn y(&self) -> usize {
        self.y
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StripComposition {
    hubs: usize,
    arcs: Vec<(usize, usize)>,
    strips: Vec<Strip>,
}

#[derive(Clone, Debug)]
pub struct Realized {
    pub graph: SimpleGraph,
    /// Per vertex of `H`, the clique formed at it.
    pub hubs: Vec<Vec<usize>>,
    /// Per arc, the vertices of its strip from left to right.
    pub strips: Vec<Vec<usize>>,
}

impl StripComposition {
    pub fn new(hubs: usize, arcs: Vec<(usize, usize)>, strips: Vec<Strip>) -> Result<Self> {
        if arcs.len() != strips.len() {
            return Err(Error::structure("one strip per arc"));
        }
        if let Some(&(u, w)) = arcs.iter().find(|&&(u, w)| u >= hubs || w >= hubs) {
            return Err(Error::structure(format!("arc {u} {w} leaves the {hubs} hubs")));
        }
        Ok(StripComposition { hubs, arcs, strips })
    }

    pub fn arcs(&self) -> &[(usize, usize)] {
        &self.arcs
    }

    pub fn strips(&self) -> &[Strip] {
        &self.strips
    }

    pub fn realize(&self) -> Realized {
        let n: usize = self.strips.iter().map(|s| s.graph.n()).sum();
        let mut graph = SimpleGraph::new(n);
        let mut hubs = vec![Vec::new(); self.hubs];
        let mut strips = Vec::with_capacity(self.strips.len());
        let mut base = 0;
        for (s, &(u, w)) in self.strips.iter().zip(&self.arcs) {
            let k = s.graph.n();
            for (a, b) in s.graph.to_simple().edges() {
                graph.add_edge(base + a, base + b).expect("in range");
            }
            hubs[u].extend(base..base + s.x);
            hubs[w].extend(base + k - s.y..base + k);
            strips.push((base..base + k).collect());
            base += k;
        }
        for hub in &mut hubs {
            hub.sort_unstable();
            hub.dedup();
            for (i, &a) in hub.iter().enumerate() {
                for &b in &hub[i + 1..] {
                    graph.add_edge(a, b).expect("in range");
                }
            }
        }
        Realized { graph, hubs, strips }
    }

    /// A decomposition tree for the realised graph.
    ///
    /// Strips with two or more vertices are peeled one at a time: as a
    /// canonical interval 2-join when both ends attach to something, and as
    /// a clique cutset with a circular leaf otherwise. The single-vertex
    /// strips left over form the line graph of `H` restricted to them, with
    /// a loop becoming a pendant edge. Longer strips must join distinct
    /// hubs and have disjoint ends; single-vertex strips must have both.
    pub fn to_tree(&self) -> Result<DecompositionTree> {
        let r = self.realize();
        let g = &r.graph;
        let mut alive = vec![true; g.n()];
        let mut peeled: Vec<Peel> = Vec::new();
        for (i, s) in self.strips.iter().enumerate() {
            let k = s.graph.n();
            if k == 1 {
                if (s.x, s.y) != (1, 1) {
                    return Err(Error::structure(format!("single-vertex strip {i} must be both ends")));
                }
                continue;
            }
            if self.arcs[i].0 == self.arcs[i].1 || s.x + s.y > k {
                return Err(Error::structure(format!("strip {i} is a loop or has overlapping ends")));
            }
            let verts = &r.strips[i];
            for &v in verts {
                alive[v] = false;
            }
            let outside = |ends: &[usize]| -> Vec<usize> {
                let mut out: Vec<usize> = ends
                    .iter()
                    .flat_map(|&v| g.neighbours(v).iter().copied())
                    .filter(|&w| alive[w])
                    .collect();
                out.sort_unstable();
                out.dedup();
                out
            };
            let x2 = verts[..s.x].to_vec();
            let y2 = verts[k - s.y..].to_vec();
            let x1 = outside(&x2);
            let y1 = outside(&y2);
            let rest_empty = !alive.iter().any(|&a| a);
            peeled.push(Peel {
                strip: i,
                x1,
                y1,
                x2,
                y2,
                rest_empty,
            });
        }
        let mut nodes = Vec::new();
        let singles: Vec<usize> = (0..self.strips.len()).filter(|&i| self.strips[i].graph.n() == 1).collect();
        let mut below = None;
        if !singles.is_empty() {
            let mut h = Multigraph::new(self.hubs);
            let mut ids = Vec::new();
            for &i in &singles {
                let (u, w) = self.arcs[i];
                let w = if u == w { h.add_vertex() } else { w };
                h.add_edge(u, w)?;
                ids.push(r.strips[i][0]);
            }
            nodes.push(Node::Line { graph: h, ids });
            below = Some(0);
        }
        for p in peeled.iter().rev() {
            let s = &self.strips[p.strip];
            let verts = &r.strips[p.strip];
            let node = if p.rest_empty {
                circ_leaf(s, verts, &[], &[])
            } else if !p.x2.is_empty() && !p.y2.is_empty() && !p.x1.is_empty() && !p.y1.is_empty() {
                Node::Join {
                    g1: below.expect("rest is nonempty"),
                    x1: p.x1.clone(),
                    y1: p.y1.clone(),
                    v2: s.graph.clone(),
                    v2_ids: verts.clone(),
                    x2: p.x2.clone(),
                    y2: p.y2.clone(),
                }
            } else {
                let (left, right) = if !p.x2.is_empty() && !p.x1.is_empty() {
                    (p.x1.clone(), Vec::new())
                } else if !p.y2.is_empty() && !p.y1.is_empty() {
                    (Vec::new(), p.y1.clone())
                } else {
                    (Vec::new(), Vec::new())
                };
                nodes.push(circ_leaf(s, verts, &left, &right));
                let mut cut = left;
                cut.extend(right);
                Node::Cut {
                    left: below.expect("rest is nonempty"),
                    right: nodes.len() - 1,
                    cut,
                }
            };
            nodes.push(node);
            below = Some(nodes.len() - 1);
        }
        let tree = DecompositionTree::new(nodes)?;
        if tree.graph() != g {
            return Err(Error::invariant("decomposition does not rebuild the realised graph"));
        }
        Ok(tree)
    }
}

struct Peel {
    strip: usize,
    x1: Vec<usize>,
    y1: Vec<usize>,
    x2: Vec<usize>,
    y2: Vec<usize>,
    rest_empty: bool,
}

// The strip with the clique `left` glued to its X end or `right` to its Y
// end, as a circular interval leaf.
fn circ_leaf(s: &Strip, verts: &[usize], left: &[usize], right: &[usize]) -> Node {
    let k = s.graph.n();
    let off = left.len();
    let total = off + k + right.len();
    let mut ranges: Vec<(usize, usize)> = (0..k).map(|i| (off + i, off + s.graph.reach(i))).collect();
    if !left.is_empty() {
        ranges.push((0, off + s.x - 1));
    }
    if !right.is_empty() {
        ranges.push((off + k - s.y, total - 1));
    }
    let li = LinearIntervalGraph::from_ranges(total, &ranges).expect("ranges are ordered");
    let ids = left.iter().chain(verts).chain(right).copied().collect();
    Node::Circ {
        graph: CircularIntervalGraph::from_linear(&li),
        ids,
    }
}
