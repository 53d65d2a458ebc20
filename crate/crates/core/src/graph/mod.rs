//! Small immutable graph values.
//!
//! Every graph handled by the engine has at most [`MAX_ORDER`] vertices, so
//! neighbourhoods are stored as `u32` bitsets next to a dense multiplicity
//! matrix. Vertices are dense `0..order` indices.

mod canon;
mod profile;

use std::collections::VecDeque;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::GraphError;

pub use canon::{canonical_form, canonical_form_bipartite, canonical_form_colored, CanonicalForm};
pub use profile::{degree_profile, DegreeProfile, ProfileError};

/// Largest supported vertex count.
pub const MAX_ORDER: usize = 32;

/// Undirected graph with edge multiplicities and no loops.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct MultiGraph {
    order: usize,
    adj: Vec<u32>,
    mult: Vec<u8>,
    edges: usize,
}

impl MultiGraph {
    /// Builds a graph from `(u, v, multiplicity)` triples.
    ///
    /// Each unordered pair may appear at most once; callers sum parallel edges
    /// themselves.
    pub fn new(order: usize, edges: &[(usize, usize, u8)]) -> Result<Self, GraphError> {
        let mut g = Self::empty(order)?;
        for &(u, v, m) in edges {
            if u >= order {
                return Err(GraphError::VertexOutOfRange { vertex: u, order });
            }
            if v >= order {
                return Err(GraphError::VertexOutOfRange { vertex: v, order });
            }
            if u == v {
                return Err(GraphError::Loop(u));
            }
            if m == 0 {
                return Err(GraphError::ZeroMultiplicity(u.min(v), u.max(v)));
            }
            if g.multiplicity(u, v) > 0 {
                return Err(GraphError::DuplicatePair(u.min(v), u.max(v)));
            }
            g.set_multiplicity(u, v, m);
        }
        Ok(g)
    }

    /// Builds a simple graph from vertex pairs.
    pub fn from_edges(order: usize, edges: &[(usize, usize)]) -> Result<Self, GraphError> {
        let triples: Vec<_> = edges.iter().map(|&(u, v)| (u, v, 1)).collect();
        Self::new(order, &triples)
    }

    /// Graph on `order` vertices with no edges.
    pub fn empty(order: usize) -> Result<Self, GraphError> {
        if order > MAX_ORDER {
            return Err(GraphError::OrderTooLarge(order));
        }
        Ok(Self {
            order,
            adj: vec![0; order],
            mult: vec![0; order * order],
            edges: 0,
        })
    }

    pub fn order(&self) -> usize {
        self.order
    }

    /// Sum of all multiplicities; a bi-gon counts twice.
    pub fn edge_count(&self) -> usize {
        self.edges
    }

    pub fn multiplicity(&self, u: usize, v: usize) -> u8 {
        self.mult[u * self.order + v]
    }

    pub fn is_adjacent(&self, u: usize, v: usize) -> bool {
        self.adj[u] >> v & 1 == 1
    }

    /// Neighbour bitset of `v`.
    pub fn neighbor_mask(&self, v: usize) -> u32 {
        self.adj[v]
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        bits(self.adj[v])
    }

    /// Degree counting multiplicity.
    pub fn degree(&self, v: usize) -> usize {
        self.neighbors(v).map(|u| self.multiplicity(v, u) as usize).sum()
    }

    /// Number of distinct neighbours.
    pub fn simple_degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    pub fn degrees(&self) -> Vec<usize> {
        (0..self.order).map(|v| self.degree(v)).collect()
    }

    pub fn is_simple(&self) -> bool {
        self.mult.iter().all(|&m| m <= 1)
    }

    /// Edges as `(u, v, multiplicity)` with `u < v`, sorted.
    pub fn edges(&self) -> Vec<(usize, usize, u8)> {
        let mut out = Vec::new();
        for u in 0..self.order {
            for v in bits(self.adj[u]) {
                if u < v {
                    out.push((u, v, self.multiplicity(u, v)));
                }
            }
        }
        out
    }

    /// The same vertex set with every multiplicity clamped to one.
    pub fn underlying_simple(&self) -> MultiGraph {
        let mut g = self.clone();
        for m in g.mult.iter_mut() {
            if *m > 1 {
                *m = 1;
            }
        }
        g.edges = g.mult.iter().map(|&m| m as usize).sum::<usize>() / 2;
        g
    }

    /// Relabels so that vertex `v` becomes `perm[v]`.
    pub fn permuted(&self, perm: &[usize]) -> MultiGraph {
        assert_eq!(perm.len(), self.order);
        let mut g = MultiGraph::empty(self.order).expect("same order");
        for (u, v, m) in self.edges() {
            g.set_multiplicity(perm[u], perm[v], m);
        }
        g
    }

    /// Subgraph induced by the vertices in `keep`, relabelled in the order given.
    pub fn induced(&self, keep: &[usize]) -> MultiGraph {
        let mut g = MultiGraph::empty(keep.len()).expect("subset of a valid graph");
        for (i, &u) in keep.iter().enumerate() {
            for (j, &v) in keep.iter().enumerate().skip(i + 1) {
                let m = self.multiplicity(u, v);
                if m > 0 {
                    g.set_multiplicity(i, j, m);
                }
            }
        }
        g
    }

    /// Removes `v`, shifting the labels of higher vertices down by one.
    pub fn without_vertex(&self, v: usize) -> MultiGraph {
        let keep: Vec<usize> = (0..self.order).filter(|&u| u != v).collect();
        self.induced(&keep)
    }

    /// Appends an isolated vertex and returns its index.
    pub(crate) fn push_vertex(&mut self) -> usize {
        let n = self.order + 1;
        assert!(n <= MAX_ORDER, "graph order limit exceeded");
        let mut mult = vec![0u8; n * n];
        for u in 0..self.order {
            mult[u * n..u * n + self.order]
                .copy_from_slice(&self.mult[u * self.order..(u + 1) * self.order]);
        }
        self.mult = mult;
        self.adj.push(0);
        self.order = n;
        n - 1
    }

    pub(crate) fn set_multiplicity(&mut self, u: usize, v: usize, m: u8) {
        debug_assert_ne!(u, v);
        let n = self.order;
        let old = self.mult[u * n + v];
        self.mult[u * n + v] = m;
        self.mult[v * n + u] = m;
        if m == 0 {
            self.adj[u] &= !(1 << v);
            self.adj[v] &= !(1 << u);
        } else {
            self.adj[u] |= 1 << v;
            self.adj[v] |= 1 << u;
        }
        self.edges = self.edges + m as usize - old as usize;
    }

    pub(crate) fn add_multiplicity(&mut self, u: usize, v: usize, by: u8) {
        let m = self.multiplicity(u, v);
        self.set_multiplicity(u, v, m + by);
    }

    /// Contracts the edge `uv`: `v` is merged into `u`, loops vanish and
    /// parallel edges accumulate. Labels above `v` shift down by one.
    pub fn contract(&self, u: usize, v: usize) -> MultiGraph {
        assert!(self.is_adjacent(u, v), "contracting a non-edge");
        let mut g = self.clone();
        for w in self.neighbors(v) {
            if w != u {
                g.add_multiplicity(u, w, self.multiplicity(v, w));
            }
        }
        g.without_vertex(v)
    }

    /// Drops one unit of multiplicity from `uv`.
    pub fn delete_edge(&self, u: usize, v: usize) -> MultiGraph {
        let mut g = self.clone();
        let m = g.multiplicity(u, v);
        assert!(m > 0, "deleting a non-edge");
        g.set_multiplicity(u, v, m - 1);
        g
    }

    /// Adds a simple edge, returning `None` if it would be a loop or already exists.
    pub fn with_edge(&self, u: usize, v: usize) -> Option<MultiGraph> {
        if u == v || u >= self.order || v >= self.order || self.is_adjacent(u, v) {
            return None;
        }
        let mut g = self.clone();
        g.set_multiplicity(u, v, 1);
        Some(g)
    }
}

impl fmt::Debug for MultiGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "MultiGraph({}; ", self.order)?;
        let mut first = true;
        for (u, v, m) in self.edges() {
            if !first {
                write!(f, " ")?;
            }
            first = false;
            if m == 1 {
                write!(f, "{u}-{v}")?;
            } else {
                write!(f, "{u}-{v}x{m}")?;
            }
        }
        write!(f, ")")
    }
}

/// Iterates the set bits of a mask, lowest first.
pub(crate) fn bits(mut mask: u32) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if mask == 0 {
            None
        } else {
            let i = mask.trailing_zeros() as usize;
            mask &= mask - 1;
            Some(i)
        }
    })
}

/// Vertex 2-colouring of a simple graph whose every edge crosses the two parts.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BipartiteGraph {
    graph: MultiGraph,
    part_a: u32,
}

impl BipartiteGraph {
    /// Wraps `graph` with the given part assignment (`true` = part A).
    pub fn new(graph: MultiGraph, in_a: &[bool]) -> Result<Self, GraphError> {
        if in_a.len() != graph.order() {
            return Err(GraphError::PartsMismatch);
        }
        if !graph.is_simple() {
            return Err(GraphError::NotSimple);
        }
        let part_a = in_a
            .iter()
            .enumerate()
            .filter(|(_, &a)| a)
            .fold(0u32, |m, (i, _)| m | 1 << i);
        for (u, v, _) in graph.edges() {
            if (part_a >> u & 1) == (part_a >> v & 1) {
                return Err(GraphError::EdgeWithinPart(u, v));
            }
        }
        Ok(Self { graph, part_a })
    }

    /// Uses [`bipartition`] to colour a simple graph.
    pub fn from_graph(graph: MultiGraph) -> Result<Self, GraphError> {
        let (a, _) = bipartition(&graph).ok_or(GraphError::OddCycle)?;
        let mut in_a = vec![false; graph.order()];
        for v in a {
            in_a[v] = true;
        }
        Self::new(graph, &in_a)
    }

    /// Builds a bipartite graph from a biadjacency matrix; rows become part A
    /// (vertices `0..rows`) and columns part B.
    pub fn from_biadjacency(rows: &[Vec<bool>]) -> Result<Self, GraphError> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        let mut edges = Vec::new();
        for (i, row) in rows.iter().enumerate() {
            if row.len() != c {
                return Err(GraphError::PartsMismatch);
            }
            for (j, &x) in row.iter().enumerate() {
                if x {
                    edges.push((i, r + j));
                }
            }
        }
        let g = MultiGraph::from_edges(r + c, &edges)?;
        let in_a: Vec<bool> = (0..r + c).map(|v| v < r).collect();
        Self::new(g, &in_a)
    }

    pub fn graph(&self) -> &MultiGraph {
        &self.graph
    }

    pub fn into_graph(self) -> MultiGraph {
        self.graph
    }

    pub fn in_part_a(&self, v: usize) -> bool {
        self.part_a >> v & 1 == 1
    }

    pub fn part_a(&self) -> Vec<usize> {
        (0..self.graph.order()).filter(|&v| self.in_part_a(v)).collect()
    }

    pub fn part_b(&self) -> Vec<usize> {
        (0..self.graph.order()).filter(|&v| !self.in_part_a(v)).collect()
    }

    /// The same graph with the part labels exchanged.
    pub fn swapped(&self) -> BipartiteGraph {
        let full = if self.graph.order() == 32 {
            u32::MAX
        } else {
            (1u32 << self.graph.order()) - 1
        };
        Self {
            graph: self.graph.clone(),
            part_a: !self.part_a & full,
        }
    }

    pub fn edge_count(&self) -> usize {
        self.graph.edge_count()
    }

    pub fn order(&self) -> usize {
        self.graph.order()
    }
}

impl fmt::Debug for BipartiteGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("BipartiteGraph")
            .field("a", &self.part_a())
            .field("graph", &self.graph)
            .finish()
    }
}

impl AsRef<MultiGraph> for BipartiteGraph {
    fn as_ref(&self) -> &MultiGraph {
        &self.graph
    }
}

impl AsRef<MultiGraph> for MultiGraph {
    fn as_ref(&self) -> &MultiGraph {
        self
    }
}

/// Two-colours `g`, ignoring multiplicities.
///
/// The lowest vertex of every component lands in part A. Returns `None` if
/// any odd cycle exists.
pub fn bipartition(g: &MultiGraph) -> Option<(Vec<usize>, Vec<usize>)> {
    let n = g.order();
    let mut color: Vec<Option<bool>> = vec![None; n];
    let mut queue = VecDeque::new();
    for root in 0..n {
        if color[root].is_some() {
            continue;
        }
        color[root] = Some(true);
        queue.push_back(root);
        while let Some(u) = queue.pop_front() {
            let cu = color[u].expect("queued vertices are coloured");
            for w in g.neighbors(u) {
                match color[w] {
                    None => {
                        color[w] = Some(!cu);
                        queue.push_back(w);
                    }
                    Some(cw) if cw == cu => return None,
                    Some(_) => {}
                }
            }
        }
    }
    let a = (0..n).filter(|&v| color[v] == Some(true)).collect();
    let b = (0..n).filter(|&v| color[v] == Some(false)).collect();
    Some((a, b))
}

/// BFS hop distances from `source`; `None` marks unreachable vertices.
pub fn distances_from(g: &MultiGraph, source: usize) -> Vec<Option<usize>> {
    let mut dist = vec![None; g.order()];
    dist[source] = Some(0);
    let mut queue = VecDeque::from([source]);
    while let Some(u) = queue.pop_front() {
        let d = dist[u].expect("queued");
        for w in g.neighbors(u) {
            if dist[w].is_none() {
                dist[w] = Some(d + 1);
                queue.push_back(w);
            }
        }
    }
    dist
}

/// Number of edges on a shortest `u`–`v` path, or `None` when unreachable.
pub fn distance(g: &MultiGraph, u: usize, v: usize) -> Option<usize> {
    distances_from(g, u)[v]
}

/// Reachability from vertex 0. The empty graph counts as connected.
pub fn is_connected(g: &MultiGraph) -> bool {
    g.order() == 0 || distances_from(g, 0).iter().all(Option::is_some)
}

/// Connected components as sorted vertex lists, ordered by smallest member.
pub fn components(g: &MultiGraph) -> Vec<Vec<usize>> {
    let mut seen = vec![false; g.order()];
    let mut out = Vec::new();
    for s in 0..g.order() {
        if seen[s] {
            continue;
        }
        let comp: Vec<usize> = distances_from(g, s)
            .iter()
            .enumerate()
            .filter_map(|(v, d)| d.map(|_| v))
            .collect();
        for &v in &comp {
            seen[v] = true;
        }
        out.push(comp);
    }
    out
}

/// Length of a shortest cycle in the underlying simple graph.
pub fn girth(g: &MultiGraph) -> Option<usize> {
    let mut best: Option<usize> = None;
    for s in 0..g.order() {
        let mut dist = vec![usize::MAX; g.order()];
        let mut parent = vec![usize::MAX; g.order()];
        dist[s] = 0;
        let mut queue = VecDeque::from([s]);
        while let Some(u) = queue.pop_front() {
            for w in g.neighbors(u) {
                if dist[w] == usize::MAX {
                    dist[w] = dist[u] + 1;
                    parent[w] = u;
                    queue.push_back(w);
                } else if parent[u] != w {
                    let len = dist[u] + dist[w] + 1;
                    best = Some(best.map_or(len, |b| b.min(len)));
                }
            }
        }
    }
    best
}

/// Every 4-cycle of a simple graph as a vertex sequence `[v0, v1, v2, v3]`,
/// each cycle listed once.
pub fn four_cycles(g: &MultiGraph) -> Vec<[usize; 4]> {
    let mut out = Vec::new();
    let n = g.order();
    for v0 in 0..n {
        for v1 in g.neighbors(v0).filter(|&x| x > v0) {
            for v2 in g.neighbors(v1).filter(|&x| x > v0 && x != v1) {
                for v3 in g.neighbors(v2).filter(|&x| x > v0 && x != v1 && x != v2) {
                    // v1 < v3 picks one of the two traversal directions
                    if v1 < v3 && g.is_adjacent(v3, v0) {
                        out.push([v0, v1, v2, v3]);
                    }
                }
            }
        }
    }
    out
}

/// Serializable edge-list form of a multigraph.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EdgeList {
    pub order: usize,
    pub edges: Vec<(usize, usize, u8)>,
}

impl From<&MultiGraph> for EdgeList {
    fn from(g: &MultiGraph) -> Self {
        Self {
            order: g.order(),
            edges: g.edges(),
        }
    }
}

impl TryFrom<&EdgeList> for MultiGraph {
    type Error = GraphError;

    fn try_from(e: &EdgeList) -> Result<Self, Self::Error> {
        MultiGraph::new(e.order, &e.edges)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cycle(n: usize) -> MultiGraph {
        let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        MultiGraph::from_edges(n, &edges).unwrap()
    }

    fn complete_bipartite(p: usize, q: usize) -> MultiGraph {
        let mut edges = Vec::new();
        for i in 0..p {
            for j in 0..q {
                edges.push((i, p + j));
            }
        }
        MultiGraph::from_edges(p + q, &edges).unwrap()
    }

    #[test]
    fn builds_k33_and_bigon() {
        assert_eq!(complete_bipartite(3, 3).edge_count(), 9);
        let bigon = MultiGraph::new(2, &[(0, 1, 2)]).unwrap();
        assert_eq!(bigon.edge_count(), 2);
        assert_eq!(bigon.degree(0), 2);
        assert!(!bigon.is_simple());
    }

    #[test]
    fn rejects_bad_edges() {
        assert_eq!(MultiGraph::new(1, &[(0, 0, 1)]), Err(GraphError::Loop(0)));
        assert!(matches!(
            MultiGraph::from_edges(3, &[(0, 3)]),
            Err(GraphError::VertexOutOfRange { vertex: 3, order: 3 })
        ));
        assert_eq!(
            MultiGraph::from_edges(3, &[(0, 1), (1, 0)]),
            Err(GraphError::DuplicatePair(0, 1))
        );
        assert!(MultiGraph::empty(33).is_err());
    }

    #[test]
    fn bipartition_of_cycles() {
        let (a, b) = bipartition(&cycle(6)).unwrap();
        assert_eq!(a, vec![0, 2, 4]);
        assert_eq!(b, vec![1, 3, 5]);
        assert!(bipartition(&cycle(5)).is_none());
    }

    #[test]
    fn connectivity() {
        assert!(is_connected(&MultiGraph::empty(0).unwrap()));
        assert!(is_connected(&cycle(7)));
        let mut edges = Vec::new();
        for i in 0..3 {
            for j in 3..6 {
                edges.push((i, j));
                edges.push((i + 6, j + 6));
            }
        }
        let two = MultiGraph::from_edges(12, &edges).unwrap();
        assert!(!is_connected(&two));
        assert_eq!(components(&two).len(), 2);
        assert_eq!(distance(&two, 0, 7), None);
    }

    #[test]
    fn contraction_merges_parallels() {
        // triangle: contracting one edge leaves a bi-gon
        let t = MultiGraph::from_edges(3, &[(0, 1), (1, 2), (0, 2)]).unwrap();
        let c = t.contract(0, 1);
        assert_eq!(c.order(), 2);
        assert_eq!(c.multiplicity(0, 1), 2);
        // contracting a bi-gon drops the loop
        let b = MultiGraph::new(2, &[(0, 1, 2)]).unwrap();
        assert_eq!(b.contract(0, 1).edge_count(), 0);
    }

    #[test]
    fn girth_and_four_cycles() {
        assert_eq!(girth(&cycle(9)), Some(9));
        assert_eq!(girth(&complete_bipartite(3, 3)), Some(4));
        assert_eq!(four_cycles(&complete_bipartite(2, 2)).len(), 1);
        // K_{3,3}: choose 2 of 3 on each side
        assert_eq!(four_cycles(&complete_bipartite(3, 3)).len(), 9);
        assert_eq!(girth(&MultiGraph::from_edges(3, &[(0, 1), (1, 2)]).unwrap()), None);
    }

    #[test]
    fn bipartite_wrapper_checks_parts() {
        let k = complete_bipartite(2, 3);
        let bg = BipartiteGraph::from_graph(k.clone()).unwrap();
        assert_eq!(bg.part_a(), vec![0, 1]);
        assert_eq!(bg.swapped().part_a(), vec![2, 3, 4]);
        assert_eq!(
            BipartiteGraph::new(k, &[true, false, false, false, false]),
            Err(GraphError::EdgeWithinPart(1, 2))
        );
        assert_eq!(BipartiteGraph::from_graph(cycle(3)), Err(GraphError::OddCycle));
    }
}
