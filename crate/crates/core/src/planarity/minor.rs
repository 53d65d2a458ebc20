//! Exact minor containment for desk-sized graphs.
//!
//! `H` is a minor of `G` iff `H` is a subgraph of some contraction of `G`, so
//! the search walks contractions of the host (deduplicated by canonical form)
//! and tests subgraph containment at every node.

use std::collections::HashSet;

use crate::error::MinorError;
use crate::graph::{bits, canonical_form, is_connected, CanonicalForm, MultiGraph};

pub const DEFAULT_BUDGET: u64 = 2_000_000;

#[derive(Clone, Debug)]
pub struct MinorQuery {
    pub host: MultiGraph,
    pub pattern: MultiGraph,
    /// Maximum number of search nodes to expand before giving up.
    pub budget: u64,
}

impl MinorQuery {
    pub fn new(host: MultiGraph, pattern: MultiGraph) -> Self {
        Self {
            host,
            pattern,
            budget: DEFAULT_BUDGET,
        }
    }

    pub fn with_budget(mut self, budget: u64) -> Self {
        self.budget = budget;
        self
    }
}

pub fn has_minor(q: &MinorQuery) -> Result<bool, MinorError> {
    let pattern = q.pattern.underlying_simple();
    if !is_connected(&pattern) {
        return Err(MinorError::PatternDisconnected);
    }
    if pattern.order() == 0 {
        return Ok(true);
    }
    let min_pattern_degree = (0..pattern.order())
        .map(|v| pattern.degree(v))
        .min()
        .unwrap_or(0);
    let mut search = Search {
        pattern: &pattern,
        min_pattern_degree,
        seen: HashSet::new(),
        expanded: 0,
        budget: q.budget,
    };
    let host = search.prune(q.host.underlying_simple());
    search.visit(host)
}

struct Search<'a> {
    pattern: &'a MultiGraph,
    min_pattern_degree: usize,
    seen: HashSet<CanonicalForm>,
    expanded: u64,
    budget: u64,
}

impl Search<'_> {
    /// Removes host vertices that no minor model of the pattern needs:
    /// degree ≤ 1 when every pattern vertex has degree ≥ 2, and degree-2
    /// vertices are suppressed when every pattern vertex has degree ≥ 3.
    fn prune(&self, mut g: MultiGraph) -> MultiGraph {
        if self.min_pattern_degree < 2 {
            return g;
        }
        loop {
            let Some(v) = (0..g.order()).find(|&v| {
                let d = g.simple_degree(v);
                d <= 1 || (d == 2 && self.min_pattern_degree >= 3)
            }) else {
                return g;
            };
            if g.simple_degree(v) == 2 {
                let u = g.neighbors(v).next().expect("degree two");
                g = g.contract(u, v).underlying_simple();
            } else {
                g = g.without_vertex(v);
            }
        }
    }

    fn visit(&mut self, g: MultiGraph) -> Result<bool, MinorError> {
        let p = self.pattern;
        if g.order() < p.order() || g.edge_count() < p.edge_count() {
            return Ok(false);
        }
        if !self.seen.insert(canonical_form(&g)) {
            return Ok(false);
        }
        self.expanded += 1;
        if self.expanded > self.budget {
            return Err(MinorError::BudgetExhausted(self.budget));
        }
        if contains_subgraph(&g, p) {
            return Ok(true);
        }
        if g.order() == p.order() {
            return Ok(false);
        }
        for (u, v, _) in g.edges() {
            let child = self.prune(g.contract(u, v).underlying_simple());
            if self.visit(child)? {
                return Ok(true);
            }
        }
        Ok(false)
    }
}

/// Whether `pattern` embeds injectively into `host` as a (not necessarily
/// induced) subgraph.
pub fn contains_subgraph(host: &MultiGraph, pattern: &MultiGraph) -> bool {
    let np = pattern.order();
    if np > host.order() {
        return false;
    }
    if np == 0 {
        return true;
    }
    // most constrained first: BFS from the highest-degree vertex, each
    // component in turn
    let mut order = Vec::with_capacity(np);
    let mut placed = 0u32;
    while order.len() < np {
        let start = (0..np)
            .filter(|&v| placed >> v & 1 == 0)
            .max_by_key(|&v| (pattern.simple_degree(v), std::cmp::Reverse(v)))
            .expect("unplaced vertex");
        placed |= 1 << start;
        let mut i = order.len();
        order.push(start);
        while i < order.len() {
            let v = order[i];
            for w in pattern.neighbors(v) {
                if placed >> w & 1 == 0 {
                    placed |= 1 << w;
                    order.push(w);
                }
            }
            i += 1;
        }
    }
    let mut map = vec![usize::MAX; np];
    extend(host, pattern, &order, 0, &mut map, 0)
}

fn extend(
    host: &MultiGraph,
    pattern: &MultiGraph,
    order: &[usize],
    depth: usize,
    map: &mut [usize],
    used: u32,
) -> bool {
    if depth == order.len() {
        return true;
    }
    let v = order[depth];
    let need = pattern.simple_degree(v);
    let full = if host.order() == 32 {
        u32::MAX
    } else {
        (1u32 << host.order()) - 1
    };
    let mut candidates = full & !used;
    for w in pattern.neighbors(v) {
        if map[w] != usize::MAX {
            candidates &= host.neighbor_mask(map[w]);
        }
    }
    for x in bits(candidates) {
        if host.simple_degree(x) < need {
            continue;
        }
        map[v] = x;
        if extend(host, pattern, order, depth + 1, map, used | 1 << x) {
            return true;
        }
    }
    map[v] = usize::MAX;
    false
}
