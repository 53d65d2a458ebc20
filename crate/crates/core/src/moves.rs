//! ∇Y and Y∇ moves, cousin families, vertex splits and one-step minors.

use std::collections::{BTreeSet, HashMap, HashSet};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::MoveError;
use crate::graph::{bits, canonical_form, CanonicalForm, MultiGraph, MAX_ORDER};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum MoveKind {
    NablaY,
    YNabla,
}

/// Replaces the triangle `t` by a new degree-3 vertex joined to its corners.
/// The new vertex gets the highest label.
pub fn nabla_y(g: &MultiGraph, t: [usize; 3]) -> Result<MultiGraph, MoveError> {
    let [a, b, c] = t;
    for v in t {
        if v >= g.order() {
            return Err(MoveError::OutOfRange(v));
        }
    }
    if a == b || b == c || a == c || !g.is_adjacent(a, b) || !g.is_adjacent(b, c) || !g.is_adjacent(a, c) {
        return Err(MoveError::NotATriangle(t));
    }
    if g.order() == MAX_ORDER {
        return Err(MoveError::OrderLimit);
    }
    let mut h = g.clone();
    for (u, v) in [(a, b), (b, c), (a, c)] {
        h.set_multiplicity(u, v, g.multiplicity(u, v) - 1);
    }
    let x = h.push_vertex();
    for u in t {
        h.set_multiplicity(x, u, 1);
    }
    Ok(h)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct YNablaResult {
    pub graph: MultiGraph,
    /// Some corner pair was already adjacent and the new edge was merged
    /// into it, so the edge count dropped.
    pub simplified: bool,
}

/// Replaces the degree-3 vertex `v` by a triangle on its neighbours.
pub fn y_nabla(g: &MultiGraph, v: usize) -> Result<YNablaResult, MoveError> {
    if v >= g.order() {
        return Err(MoveError::OutOfRange(v));
    }
    if g.degree(v) != 3 {
        return Err(MoveError::WrongDegree {
            vertex: v,
            degree: g.degree(v),
        });
    }
    let nbrs: Vec<usize> = g.neighbors(v).collect();
    if nbrs.len() != 3 {
        return Err(MoveError::ParallelAtVertex(v));
    }
    let mut h = g.clone();
    let mut simplified = false;
    for (i, j) in [(0, 1), (1, 2), (0, 2)] {
        simplified |= h.is_adjacent(nbrs[i], nbrs[j]);
        h.set_multiplicity(nbrs[i], nbrs[j], 1);
    }
    Ok(YNablaResult {
        graph: h.without_vertex(v),
        simplified,
    })
}

/// Every vertex triple that spans a triangle, in increasing order.
pub fn triangles(g: &MultiGraph) -> Vec<[usize; 3]> {
    let mut out = Vec::new();
    for a in 0..g.order() {
        let up = g.neighbor_mask(a) & !((2u64 << a) - 1) as u32;
        for b in bits(up) {
            for c in bits(up & g.neighbor_mask(b) & !((2u64 << b) - 1) as u32) {
                out.push([a, b, c]);
            }
        }
    }
    out
}

/// Vertices on which [`y_nabla`] is legal.
pub fn y_candidates(g: &MultiGraph) -> Vec<usize> {
    (0..g.order())
        .filter(|&v| g.degree(v) == 3 && g.simple_degree(v) == 3)
        .collect()
}

#[derive(Clone, Debug)]
pub struct FamilyMember {
    pub form: CanonicalForm,
    /// The canonically relabelled graph.
    pub graph: MultiGraph,
    /// Number of moves from the seed along a shortest path.
    pub depth: usize,
}

#[derive(Clone, Debug)]
pub struct FamilyClosure {
    pub seed: CanonicalForm,
    /// Seed first, then breadth-first discovery order.
    pub members: Vec<FamilyMember>,
    /// `(from, to, kind)` as indices into `members`, deduplicated.
    pub edges_between: Vec<(usize, usize, MoveKind)>,
    /// Y∇ moves whose result needed simplification; these leave the family
    /// and are not followed.
    pub simplified_moves: usize,
}

impl FamilyClosure {
    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, form: &CanonicalForm) -> bool {
        self.members.iter().any(|m| &m.form == form)
    }

    pub fn forms(&self) -> BTreeSet<CanonicalForm> {
        self.members.iter().map(|m| m.form.clone()).collect()
    }
}

struct Child {
    form: CanonicalForm,
    kind: MoveKind,
}

fn children(g: &MultiGraph, with_y_nabla: bool) -> (Vec<Child>, usize) {
    let mut out = Vec::new();
    let mut simplified = 0;
    for t in triangles(g) {
        if let Ok(h) = nabla_y(g, t) {
            out.push(Child {
                form: canonical_form(&h),
                kind: MoveKind::NablaY,
            });
        }
    }
    if with_y_nabla {
        for v in y_candidates(g) {
            let r = y_nabla(g, v).expect("eligible vertex");
            if r.simplified {
                simplified += 1;
                continue;
            }
            out.push(Child {
                form: canonical_form(&r.graph),
                kind: MoveKind::YNabla,
            });
        }
    }
    (out, simplified)
}

fn closure(seed: &MultiGraph, with_y_nabla: bool) -> FamilyClosure {
    let seed_form = canonical_form(seed);
    let mut members = vec![FamilyMember {
        graph: seed_form.to_graph(),
        form: seed_form.clone(),
        depth: 0,
    }];
    let mut index: HashMap<CanonicalForm, usize> = HashMap::from([(seed_form.clone(), 0)]);
    let mut edges = BTreeSet::new();
    let mut simplified_moves = 0;
    let mut frontier = vec![0usize];
    let mut depth = 0;
    while !frontier.is_empty() {
        depth += 1;
        let expanded: Vec<(Vec<Child>, usize)> = frontier
            .par_iter()
            .map(|&i| children(&members[i].graph, with_y_nabla))
            .collect();
        let mut next = Vec::new();
        for (&from, (kids, simplified)) in frontier.iter().zip(expanded) {
            simplified_moves += simplified;
            for child in kids {
                let to = match index.get(&child.form) {
                    Some(&j) => j,
                    None => {
                        let j = members.len();
                        members.push(FamilyMember {
                            graph: child.form.to_graph(),
                            form: child.form.clone(),
                            depth,
                        });
                        index.insert(child.form, j);
                        next.push(j);
                        j
                    }
                };
                edges.insert((from, to, child.kind));
            }
        }
        frontier = next;
    }
    FamilyClosure {
        seed: seed_form,
        members,
        edges_between: edges.into_iter().collect(),
        simplified_moves,
    }
}

/// All cousins of `seed`: graphs reachable by any sequence of ∇Y and Y∇
/// moves.
pub fn family_closure(seed: &MultiGraph) -> FamilyClosure {
    closure(seed, true)
}

/// Closure under ∇Y moves only, seed included.
pub fn nabla_descendants(seed: &MultiGraph) -> BTreeSet<CanonicalForm> {
    closure(seed, false).forms()
}

/// Same as [`nabla_descendants`] but keeping the graphs.
pub fn nabla_closure(seed: &MultiGraph) -> FamilyClosure {
    closure(seed, false)
}

/// Each way to split `v` into two adjacent vertices that share out its
/// neighbours, both sides nonempty, one result per unordered split. The
/// second copy of `v` gets the highest label. Parallel edges to a neighbour
/// move together.
pub fn vertex_splits(g: &MultiGraph, v: usize) -> Vec<MultiGraph> {
    if v >= g.order() || g.order() == MAX_ORDER {
        return Vec::new();
    }
    let nbrs: Vec<usize> = g.neighbors(v).collect();
    let k = nbrs.len();
    if k < 2 {
        return Vec::new();
    }
    let mut out = Vec::new();
    // nbrs[0] always stays with v, so every unordered split appears once
    for mask in 0..(1u32 << (k - 1)) - 1 {
        let mut h = g.clone();
        let x = h.push_vertex();
        for (i, &w) in nbrs.iter().enumerate().skip(1) {
            if mask >> (i - 1) & 1 == 0 {
                h.set_multiplicity(x, w, g.multiplicity(v, w));
                h.set_multiplicity(v, w, 0);
            }
        }
        h.set_multiplicity(v, x, 1);
        out.push(h);
    }
    out
}

/// Single-edge deletions and contractions, one per isomorphism class, in
/// order of first appearance.
pub fn one_step_minors(g: &MultiGraph) -> Vec<MultiGraph> {
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    for (u, v, _) in g.edges() {
        for h in [g.delete_edge(u, v), g.contract(u, v)] {
            if seen.insert(canonical_form(&h)) {
                out.push(h);
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::graph;
    use crate::graph::is_connected;

    #[test]
    fn nabla_y_on_k7_and_k3311() {
        let h = nabla_y(&graph("k7"), [0, 1, 2]).unwrap();
        assert_eq!((h.order(), h.edge_count()), (8, 21));
        assert_eq!(h.degree(7), 3);
        let h = nabla_y(&graph("k3311"), [0, 6, 7]).unwrap();
        assert_eq!((h.order(), h.edge_count()), (9, 22));
    }

    #[test]
    fn bipartite_graphs_have_no_triangle() {
        let g = graph("heawood");
        assert!(triangles(&g).is_empty());
        assert_eq!(nabla_y(&g, [0, 1, 2]), Err(MoveError::NotATriangle([0, 1, 2])));
        assert_eq!(nabla_y(&g, [0, 1, 99]), Err(MoveError::OutOfRange(99)));
    }

    #[test]
    fn y_nabla_inverts_nabla_y() {
        let k7 = graph("k7");
        let h = nabla_y(&k7, [2, 4, 6]).unwrap();
        let back = y_nabla(&h, 7).unwrap();
        assert!(!back.simplified);
        assert_eq!(canonical_form(&back.graph), canonical_form(&k7));
    }

    #[test]
    fn y_nabla_on_heawood() {
        let r = y_nabla(&graph("heawood"), 0).unwrap();
        assert!(!r.simplified);
        assert_eq!((r.graph.order(), r.graph.edge_count()), (13, 21));
        assert_eq!(triangles(&r.graph).len(), 1);
    }

    #[test]
    fn y_nabla_flags_simplification() {
        // K4: every vertex has pairwise adjacent neighbours
        let k4 = MultiGraph::from_edges(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap();
        let r = y_nabla(&k4, 0).unwrap();
        assert!(r.simplified);
        assert_eq!(r.graph.edge_count(), 3);
        assert!(r.graph.is_simple());
    }

    #[test]
    fn y_nabla_errors() {
        let k7 = graph("k7");
        assert_eq!(y_nabla(&k7, 0), Err(MoveError::WrongDegree { vertex: 0, degree: 6 }));
        let g = MultiGraph::new(3, &[(0, 1, 2), (0, 2, 1)]).unwrap();
        assert_eq!(y_nabla(&g, 0), Err(MoveError::ParallelAtVertex(0)));
    }

    #[test]
    fn triangle_free_seeds_have_no_descendants() {
        for name in ["heawood", "k33"] {
            let g = graph(name);
            let d = nabla_descendants(&g);
            assert_eq!(d.len(), 1);
            assert!(d.contains(&canonical_form(&g)));
        }
    }

    #[test]
    fn splitting_a_cycle_lengthens_it() {
        let c4 = MultiGraph::from_edges(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
        let c5 = MultiGraph::from_edges(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)]).unwrap();
        let splits = vertex_splits(&c4, 2);
        assert_eq!(splits.len(), 1);
        assert_eq!(canonical_form(&splits[0]), canonical_form(&c5));
    }

    #[test]
    fn k33_splits() {
        let g = graph("k33");
        let splits = vertex_splits(&g, 0);
        assert_eq!(splits.len(), 3);
        for s in &splits {
            assert_eq!(s.edge_count(), 10);
            assert!(is_connected(s));
            assert!(crate::graph::bipartition(s).is_none());
        }
        assert!(vertex_splits(&MultiGraph::from_edges(2, &[(0, 1)]).unwrap(), 0).is_empty());
    }

    #[test]
    fn k33_one_step_minors() {
        let m = one_step_minors(&graph("k33"));
        assert_eq!(m.len(), 2);
        assert!(m.iter().all(|h| h.edge_count() == 8));
        assert!(one_step_minors(&graph("cousin110")).iter().all(|h| h.edge_count() <= 21));
    }
}
