//! Decomposition trees: line-graph and circular-interval leaves combined by
//! clique cutsets and canonical interval 2-joins.
//!
//! Nodes are stored children first; the last node is the root. Vertex ids
//! are global and the root must cover `0..n` exactly.

use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::line_graph::{line_graph, vertex_colour_line_graph};
use crate::multigraph::Multigraph;
use crate::simple::SimpleGraph;

use super::interval::{colour_circular_interval_exact, CircularIntervalGraph, LinearIntervalGraph};
use super::join::{extend_over_join, CanonicalJoin, JoinStats, NONE};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Node {
    /// `L(graph)`; edge `e` of `graph` is vertex `ids[e]`.
    Line { graph: Multigraph, ids: Vec<usize> },
    /// Point `i` of `graph` is vertex `ids[i]`.
    Circ { graph: CircularIntervalGraph, ids: Vec<usize> },
    /// Union of two children sharing exactly the clique `cut`.
    Cut { left: usize, right: usize, cut: Vec<usize> },
    /// Child `g1` joined to the linear interval graph `v2`, whose point `i`
    /// is vertex `v2_ids[i]`; `x2`/`y2` are its leftmost and rightmost
    /// vertices and see exactly `x1`/`y1`.
    Join {
        g1: usize,
        x1: Vec<usize>,
        y1: Vec<usize>,
        v2: LinearIntervalGraph,
        v2_ids: Vec<usize>,
        x2: Vec<usize>,
        y2: Vec<usize>,
    },
}

type Part = (Vec<usize>, Vec<(usize, usize)>);

#[derive(Clone, Debug)]
pub struct DecompositionTree {
    nodes: Vec<Node>,
    // per node: sorted vertices and edges (u < v), global ids
    parts: Vec<Part>,
    graph: SimpleGraph,
}

impl PartialEq for DecompositionTree {
    fn eq(&self, other: &Self) -> bool {
        self.nodes == other.nodes
    }
}

fn distinct(ids: &[usize], what: &str) -> Result<()> {
    let set: BTreeSet<usize> = ids.iter().copied().collect();
    if set.len() != ids.len() {
        return Err(Error::structure(format!("{what} lists a vertex twice")));
    }
    Ok(())
}

fn sorted(ids: &[usize]) -> Vec<usize> {
    let mut v = ids.to_vec();
    v.sort_unstable();
    v
}

fn norm(u: usize, v: usize) -> (usize, usize) {
    (u.min(v), u.max(v))
}

fn is_clique_in(edges: &BTreeSet<(usize, usize)>, vs: &[usize]) -> bool {
    vs.iter()
        .enumerate()
        .all(|(i, &u)| vs[i + 1..].iter().all(|&v| edges.contains(&norm(u, v))))
}

fn same_set(a: &[usize], b: &[usize]) -> bool {
    let a: BTreeSet<_> = a.iter().collect();
    let b: BTreeSet<_> = b.iter().collect();
    a == b
}

impl DecompositionTree {
    pub fn new(nodes: Vec<Node>) -> Result<Self> {
        if nodes.is_empty() {
            return Err(Error::structure("empty decomposition tree"));
        }
        let mut used = vec![false; nodes.len()];
        let mut parts: Vec<Part> = Vec::with_capacity(nodes.len());
        for (i, node) in nodes.iter().enumerate() {
            let mut child = |c: usize| -> Result<()> {
                if c >= i {
                    return Err(Error::structure(format!("node {i} refers to node {c}, which is not earlier")));
                }
                if std::mem::replace(&mut used[c], true) {
                    return Err(Error::structure(format!("node {c} has two parents")));
                }
                Ok(())
            };
            let part = match node {
                Node::Line { graph, ids } => {
                    if ids.len() != graph.m() {
                        return Err(Error::structure(format!("line leaf {i}: {} ids for {} edges", ids.len(), graph.m())));
                    }
                    distinct(ids, "line leaf")?;
                    let edges = line_graph(graph).edges().into_iter().map(|(a, b)| norm(ids[a], ids[b])).collect();
                    (sorted(ids), edges)
                }
                Node::Circ { graph, ids } => {
                    if ids.len() != graph.n() {
                        return Err(Error::structure(format!("circular leaf {i}: {} ids for {} points", ids.len(), graph.n())));
                    }
                    distinct(ids, "circular leaf")?;
                    let edges = graph.to_simple().edges().into_iter().map(|(a, b)| norm(ids[a], ids[b])).collect();
                    (sorted(ids), edges)
                }
                Node::Cut { left, right, cut } => {
                    child(*left)?;
                    child(*right)?;
                    distinct(cut, "cut")?;
                    let (lv, le) = &parts[*left];
                    let (rv, re) = &parts[*right];
                    let common: Vec<usize> = lv.iter().copied().filter(|v| rv.binary_search(v).is_ok()).collect();
                    if !same_set(&common, cut) {
                        return Err(Error::structure(format!("cut node {i}: children share {common:?}, not the cut")));
                    }
                    let (le, re): (BTreeSet<_>, BTreeSet<_>) = (le.iter().copied().collect(), re.iter().copied().collect());
                    if !is_clique_in(&le, cut) || !is_clique_in(&re, cut) {
                        return Err(Error::structure(format!("cut node {i}: cut is not a clique")));
                    }
                    let verts: BTreeSet<usize> = lv.iter().chain(rv).copied().collect();
                    let edges: BTreeSet<_> = le.union(&re).copied().collect();
                    (verts.into_iter().collect(), edges.into_iter().collect())
                }
                Node::Join {
                    g1,
                    x1,
                    y1,
                    v2,
                    v2_ids,
                    x2,
                    y2,
                } => {
                    child(*g1)?;
                    let (gv, ge) = &parts[*g1];
                    if v2_ids.len() != v2.n() {
                        return Err(Error::structure(format!("join node {i}: {} ids for {} points", v2_ids.len(), v2.n())));
                    }
                    distinct(v2_ids, "V2")?;
                    if let Some(v) = v2_ids.iter().find(|v| gv.binary_search(v).is_ok()) {
                        return Err(Error::structure(format!("join node {i}: vertex {v} is in both sides")));
                    }
                    for (name, c) in [("X1", x1), ("Y1", y1), ("X2", x2), ("Y2", y2)] {
                        if c.is_empty() {
                            return Err(Error::structure(format!("join node {i}: {name} is empty")));
                        }
                        distinct(c, name)?;
                    }
                    if let Some(v) = x1.iter().chain(y1).find(|v| gv.binary_search(v).is_err()) {
                        return Err(Error::structure(format!("join node {i}: {v} is not in G1")));
                    }
                    let gset: BTreeSet<_> = ge.iter().copied().collect();
                    if !is_clique_in(&gset, x1) || !is_clique_in(&gset, y1) {
                        return Err(Error::structure(format!("join node {i}: X1 or Y1 is not a clique")));
                    }
                    let n2 = v2.n();
                    if x2.len() + y2.len() > n2
                        || !same_set(x2, &v2_ids[..x2.len()])
                        || !same_set(y2, &v2_ids[n2 - y2.len()..])
                    {
                        return Err(Error::structure(format!(
                            "join node {i}: X2 and Y2 must be disjoint leftmost and rightmost sets"
                        )));
                    }
                    if !v2.has_end_cliques(x2.len(), y2.len()) {
                        return Err(Error::structure(format!("join node {i}: X2 or Y2 is not a clique")));
                    }
                    let mut edges = gset;
                    for (a, b) in v2.to_simple().edges() {
                        edges.insert(norm(v2_ids[a], v2_ids[b]));
                    }
                    for (side1, side2) in [(x1, x2), (y1, y2)] {
                        for &a in side1 {
                            for &b in side2 {
                                edges.insert(norm(a, b));
                            }
                        }
                    }
                    let verts: BTreeSet<usize> = gv.iter().chain(v2_ids).copied().collect();
                    (verts.into_iter().collect(), edges.into_iter().collect())
                }
            };
            parts.push(part);
        }
        if let Some(i) = (0..nodes.len() - 1).find(|&i| !used[i]) {
            return Err(Error::structure(format!("node {i} is not below the root")));
        }
        let (root_verts, root_edges) = parts.last().expect("nonempty");
        let n = root_verts.len();
        if root_verts.iter().enumerate().any(|(i, &v)| i != v) {
            return Err(Error::structure(format!("tree vertices are not exactly 0..{n}")));
        }
        let graph = SimpleGraph::from_edges(n, root_edges)?;
        Ok(DecompositionTree { nodes, parts, graph })
    }

    pub fn nodes(&self) -> &[Node] {
        &self.nodes
    }

    /// The graph the tree describes.
    pub fn graph(&self) -> &SimpleGraph {
        &self.graph
    }

    pub fn n(&self) -> usize {
        self.graph.n()
    }

    fn node_graph(&self, i: usize) -> SimpleGraph {
        SimpleGraph::from_edges(self.n(), &self.parts[i].1).expect("validated")
    }
}

#[derive(Clone, Debug)]
pub struct TreeColouring {
    pub colours: Vec<usize>,
    pub stats: JoinStats,
}

/// Merges colourings of two graphs that share exactly the clique `cut`:
/// `c2` is permuted to agree with `c1` on `cut`, then the two are unioned.
/// Entries equal to [`NONE`] mark vertices outside a side.
pub fn paste_on_clique_cutset(c1: &[usize], c2: &[usize], cut: &[usize]) -> Result<Vec<usize>> {
    if c1.len() != c2.len() {
        return Err(Error::structure("colourings of different lengths"));
    }
    let top = c1.iter().chain(c2).filter(|&&c| c != NONE).max().map_or(0, |&c| c + 1);
    let mut map = vec![NONE; top];
    let mut image = vec![false; top];
    for &v in cut {
        let (a, b) = (c1[v], c2[v]);
        if a == NONE || b == NONE {
            return Err(Error::structure(format!("cut vertex {v} is uncoloured on one side")));
        }
        if map[b] != NONE || image[a] {
            return Err(Error::structure("cut vertices share a colour; the cut is not a clique"));
        }
        map[b] = a;
        image[a] = true;
    }
    let mut next = 0;
    let mut out = c1.to_vec();
    for (v, &b) in c2.iter().enumerate() {
        if b == NONE || c1[v] != NONE {
            continue;
        }
        if map[b] == NONE {
            while image[next] {
                next += 1;
            }
            map[b] = next;
            image[next] = true;
        }
        out[v] = map[b];
    }
    Ok(out)
}

fn palette_of(c: &[usize]) -> usize {
    c.iter().filter(|&&x| x != NONE).max().map_or(0, |&x| x + 1)
}

/// Colours the graph of `tree` with at most `γ_l(G)` colours.
pub fn colour_decomposition(tree: &DecompositionTree) -> Result<TreeColouring> {
    let n = tree.n();
    let mut done: Vec<Option<Vec<usize>>> = vec![None; tree.nodes.len()];
    let mut stats = JoinStats::default();
    for (i, node) in tree.nodes.iter().enumerate() {
        let c = match node {
            Node::Line { graph, ids } => {
                let (col, _) = vertex_colour_line_graph(graph)?;
                let mut c = vec![NONE; n];
                for (e, &id) in ids.iter().enumerate() {
                    c[id] = col[e];
                }
                c
            }
            Node::Circ { graph, ids } => {
                let col = colour_circular_interval_exact(graph)?;
                let mut c = vec![NONE; n];
                for (p, &id) in ids.iter().enumerate() {
                    c[id] = col[p];
                }
                c
            }
            Node::Cut { left, right, cut } => {
                let a = done[*left].take().expect("children come first");
                let b = done[*right].take().expect("children come first");
                paste_on_clique_cutset(&a, &b, cut)?
            }
            Node::Join {
                g1,
                x1,
                y1,
                v2_ids,
                x2,
                y2,
                ..
            } => {
                let c1 = done[*g1].take().expect("children come first");
                let j = CanonicalJoin::new(
                    tree.node_graph(i),
                    tree.parts[*g1].0.clone(),
                    x1.clone(),
                    y1.clone(),
                    v2_ids.clone(),
                    x2.clone(),
                    y2.clone(),
                )?;
                let l = palette_of(&c1).max(j.gamma_j());
                let out = extend_over_join(&j, &c1, l)?;
                stats.absorb(&out.stats);
                out.colours
            }
        };
        done[i] = Some(c);
    }
    let colours = done.pop().flatten().expect("root coloured");
    tree.graph
        .check_colouring(&colours)
        .map_err(|e| Error::invariant(format!("tree colouring: {e}")))?;
    Ok(TreeColouring { colours, stats })
}
