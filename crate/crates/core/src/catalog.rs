//! Named graphs used throughout the classification.

use thiserror::Error;

use crate::graph::{bipartition, MultiGraph};

#[derive(Clone, Debug)]
pub struct CatalogEntry {
    pub name: &'static str,
    pub graph: MultiGraph,
    /// How the graph is constructed.
    pub provenance: &'static str,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CatalogError {
    #[error("unknown catalog graph {0:?} (known: {known})", known = NAMES.join(", "))]
    Unknown(String),
}

/// Canonical catalog names.
pub const NAMES: [&str; 9] = [
    "k7",
    "k3311",
    "heawood",
    "cousin110",
    "cousin89",
    "k33",
    "k33e",
    "k33tilde",
    "p10tilde",
];

struct Spec {
    name: &'static str,
    aliases: &'static [&'static str],
    order: usize,
    edges: usize,
    bipartite: bool,
    provenance: &'static str,
    build: fn() -> MultiGraph,
}

const SPECS: [Spec; 9] = [
    Spec {
        name: "k7",
        aliases: &["K7"],
        order: 7,
        edges: 21,
        bipartite: false,
        provenance: "complete graph on seven vertices",
        build: k7,
    },
    Spec {
        name: "k3311",
        aliases: &["K3311", "k_3311"],
        order: 8,
        edges: 22,
        bipartite: false,
        provenance: "complete multipartite graph with parts of sizes 3, 3, 1, 1",
        build: k3311,
    },
    Spec {
        name: "heawood",
        aliases: &["c14", "C14"],
        order: 14,
        edges: 21,
        bipartite: true,
        provenance: "cycle on 0..13 with chords i, i+5 for even i (LCF [5,-5]^7); even vertices form one part",
        build: heawood,
    },
    Spec {
        name: "cousin110",
        aliases: &["c110"],
        order: 10,
        edges: 22,
        bipartite: true,
        provenance: "three degree-5 vertices on each side joined to the whole opposite part, \
                     plus one edge between the remaining degree-3 vertices; \
                     equals K_{5,5} minus a path with three edges",
        build: cousin110,
    },
    Spec {
        name: "cousin89",
        aliases: &["c89"],
        order: 14,
        edges: 22,
        bipartite: true,
        provenance: "Heawood graph plus the chord 0-3 between two vertices at distance 3",
        build: cousin89,
    },
    Spec {
        name: "k33",
        aliases: &["K33"],
        order: 6,
        edges: 9,
        bipartite: true,
        provenance: "complete bipartite graph K_{3,3}",
        build: k33,
    },
    Spec {
        name: "k33e",
        aliases: &["k33+e"],
        order: 6,
        edges: 10,
        bipartite: false,
        provenance: "K_{3,3} plus an edge inside one part",
        build: k33_plus_edge,
    },
    Spec {
        name: "k33tilde",
        aliases: &[],
        order: 9,
        edges: 12,
        bipartite: true,
        provenance: "K_{3,3} with the three edges at one vertex (the s-vertex) subdivided",
        build: k33_tilde,
    },
    Spec {
        name: "p10tilde",
        aliases: &[],
        order: 10,
        edges: 14,
        bipartite: true,
        provenance: "k33tilde plus a degree-2 vertex (the t-vertex) joined to two unsubdivided-side \
                     degree-3 vertices",
        build: p10_tilde,
    },
];

/// Looks up a catalog graph by name or alias (case-insensitive).
pub fn named(name: &str) -> Result<CatalogEntry, CatalogError> {
    let key = name.trim().to_ascii_lowercase();
    let spec = SPECS
        .iter()
        .find(|s| s.name == key || s.aliases.iter().any(|a| a.to_ascii_lowercase() == key))
        .ok_or_else(|| CatalogError::Unknown(name.to_string()))?;
    let graph = (spec.build)();
    assert_eq!(graph.order(), spec.order, "{} order", spec.name);
    assert_eq!(graph.edge_count(), spec.edges, "{} size", spec.name);
    assert_eq!(bipartition(&graph).is_some(), spec.bipartite, "{} bipartiteness", spec.name);
    Ok(CatalogEntry {
        name: spec.name,
        graph,
        provenance: spec.provenance,
    })
}

/// Shorthand for `named(name).graph` on a name known to exist.
pub fn graph(name: &str) -> MultiGraph {
    named(name).expect("catalog name").graph
}

fn simple(order: usize, edges: &[(usize, usize)]) -> MultiGraph {
    MultiGraph::from_edges(order, edges).expect("catalog construction")
}

fn complete_multipartite(sizes: &[usize]) -> MultiGraph {
    let mut part = Vec::new();
    for (p, &s) in sizes.iter().enumerate() {
        part.extend(std::iter::repeat_n(p, s));
    }
    let n = part.len();
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if part[u] != part[v] {
                edges.push((u, v));
            }
        }
    }
    simple(n, &edges)
}

fn k7() -> MultiGraph {
    complete_multipartite(&[1; 7])
}

fn k3311() -> MultiGraph {
    complete_multipartite(&[3, 3, 1, 1])
}

fn k33() -> MultiGraph {
    complete_multipartite(&[3, 3])
}

fn heawood() -> MultiGraph {
    // Hamiltonian cycle 0..13 with LCF chords [5,-5]^7
    let mut edges = Vec::new();
    for i in 0..14 {
        edges.push((i, (i + 1) % 14));
        if i % 2 == 0 {
            edges.push((i, (i + 5) % 14));
        }
    }
    simple(14, &edges)
}

fn cousin89() -> MultiGraph {
    heawood().with_edge(0, 3).expect("0 and 3 are non-adjacent")
}

fn cousin110() -> MultiGraph {
    // A = 0..5, B = 5..10; 0,1,2 and 5,6,7 have degree 5
    let mut edges = Vec::new();
    for a in 0..3 {
        for b in 5..10 {
            edges.push((a, b));
        }
    }
    for a in 3..5 {
        for b in 5..8 {
            edges.push((a, b));
        }
    }
    edges.push((3, 8));
    simple(10, &edges)
}

fn k33_plus_edge() -> MultiGraph {
    k33().with_edge(0, 1).expect("0 and 1 share a part")
}

fn k33_tilde() -> MultiGraph {
    // d1..d3 = 0..3, s-vertex d4 = 3, d'1 d'2 = 4 5, subdivision vertices 6 7 8
    let mut edges = Vec::new();
    for d in 0..3 {
        edges.push((4, d));
        edges.push((5, d));
        edges.push((3, 6 + d));
        edges.push((6 + d, d));
    }
    simple(9, &edges)
}

fn p10_tilde() -> MultiGraph {
    let mut edges = k33_tilde()
        .edges()
        .into_iter()
        .map(|(u, v, _)| (u, v))
        .collect::<Vec<_>>();
    edges.push((9, 0));
    edges.push((9, 1));
    simple(10, &edges)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{distance, girth};

    #[test]
    fn every_name_builds() {
        for name in NAMES {
            assert_eq!(named(name).unwrap().name, name);
        }
        assert_eq!(named("C14").unwrap().name, "heawood");
        assert!(matches!(named("petersen"), Err(CatalogError::Unknown(_))));
    }

    #[test]
    fn heawood_structure() {
        let h = graph("heawood");
        assert!(h.degrees().iter().all(|&d| d == 3));
        assert_eq!(girth(&h), Some(6));
        assert_eq!(distance(&h, 0, 3), Some(3));
        assert!(h.is_adjacent(0, 1));
    }

    #[test]
    fn tilde_graphs_have_expected_degrees() {
        let k = graph("k33tilde");
        let mut d = k.degrees();
        d.sort_unstable();
        assert_eq!(d, vec![2, 2, 2, 3, 3, 3, 3, 3, 3]);
        let p = graph("p10tilde");
        let mut d = p.degrees();
        d.sort_unstable();
        assert_eq!(d, vec![2, 2, 2, 2, 3, 3, 3, 3, 4, 4]);
        // removing the t-vertex gives back k33tilde
        assert_eq!(p.without_vertex(9), k);
    }
}
