//! Planarity, `K_{3,3}` recognition and minor containment.

mod lr;
mod minor;

use crate::graph::{bipartition, MultiGraph};

pub use lr::is_planar;
pub use minor::{contains_subgraph, has_minor, MinorQuery, DEFAULT_BUDGET};

/// Simple, six vertices, nine edges, cubic, and bipartite with 3/3 parts.
pub fn is_k33(g: &MultiGraph) -> bool {
    g.order() == 6
        && g.edge_count() == 9
        && g.is_simple()
        && (0..6).all(|v| g.degree(v) == 3)
        && bipartition(g).is_some_and(|(a, b)| a.len() == 3 && b.len() == 3)
}

/// Planarity decided only by searching for `K_5` and `K_{3,3}` minors.
pub fn is_planar_by_minors(g: &MultiGraph, budget: u64) -> Result<bool, crate::error::MinorError> {
    let k5 = MultiGraph::from_edges(5, &[(0, 1), (0, 2), (0, 3), (0, 4), (1, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4)])
        .expect("K5");
    let k33 = MultiGraph::from_edges(6, &[(0, 3), (0, 4), (0, 5), (1, 3), (1, 4), (1, 5), (2, 3), (2, 4), (2, 5)])
        .expect("K33");
    let host = g.underlying_simple();
    let has_k33 = has_minor(&MinorQuery::new(host.clone(), k33).with_budget(budget))?;
    if has_k33 {
        return Ok(false);
    }
    Ok(!has_minor(&MinorQuery::new(host, k5).with_budget(budget))?)
}
