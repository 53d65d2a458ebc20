//! Two-vertex deletion followed by exhaustive degree-1 removal and degree-2
//! contraction, plus the closed-form edge count that predicts its size.

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::error::ReduceError;
use crate::graph::{bits, MultiGraph};
use crate::planarity::{is_k33, is_planar};

/// One elementary operation of a reduction. Vertex labels refer to the input
/// graph.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "op", rename_all = "snake_case")]
pub enum Step {
    DeleteVertex { vertex: usize },
    RemoveIsolated { vertex: usize },
    RemovePendant { vertex: usize, neighbor: usize },
    /// A degree-2 vertex merged into `into`; `into` and `other` gain an edge.
    Contract { vertex: usize, into: usize, other: usize },
    /// The loop left behind when a degree-2 vertex sat on a bi-gon.
    DeleteLoop { at: usize },
}

/// Term-by-term evaluation of the closed-form edge count for a pair `a`, `b`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CountBreakdown {
    /// Edges incident to `a` or `b`.
    pub ne: usize,
    pub v3a: usize,
    pub v3b: usize,
    pub v3ab: usize,
    pub v4ab: usize,
    pub vy: usize,
    /// Some vertex other than `a`, `b` has two or more neighbours among the
    /// common degree-3 neighbours, so the reduction removes more than the
    /// formula accounts for.
    pub degenerate: bool,
    /// The vertices that drop to degree two, `V3(a) ∪ V3(b) ∪ V4(a,b)`, are
    /// pairwise non-adjacent and share no neighbour besides `a`, `b`. The
    /// formula is then exact.
    pub separated: bool,
    /// `|E| - NE - (NV3 + V4ab + VY)`.
    pub predicted: i64,
}

impl CountBreakdown {
    pub fn nv3(&self) -> usize {
        self.v3a + self.v3b - self.v3ab
    }
}

#[derive(Clone, Debug)]
pub struct ReductionResult {
    pub reduced: MultiGraph,
    pub edge_count: usize,
    pub breakdown: CountBreakdown,
    pub trace: Vec<Step>,
    /// `kept[i]` is the input label of reduced vertex `i`.
    pub kept: Vec<usize>,
}

impl ReductionResult {
    /// SHA-256 of the JSON-serialized trace, hex encoded.
    pub fn trace_digest(&self) -> String {
        let json = serde_json::to_vec(&self.trace).expect("steps serialize");
        hex::encode(Sha256::digest(json))
    }
}

/// Evaluates every set in the count equation directly from its definition.
pub fn count_equation(g: &MultiGraph, a: usize, b: usize) -> CountBreakdown {
    let deg = g.degrees();
    let pair = 1u32 << a | 1u32 << b;
    let nbr_a = g.neighbor_mask(a) & !pair;
    let nbr_b = g.neighbor_mask(b) & !pair;
    let of_degree = |mask: u32, d: usize| bits(mask).filter(|&v| deg[v] == d).fold(0u32, |m, v| m | 1 << v);
    let v3a = of_degree(nbr_a, 3);
    let v3b = of_degree(nbr_b, 3);
    let v3ab = v3a & v3b;
    let v4ab = of_degree(nbr_a, 4) & of_degree(nbr_b, 4);
    let mut vy = 0u32;
    for d in bits(v3ab) {
        vy |= of_degree(g.neighbor_mask(d) & !pair, 3);
    }
    let degenerate = (0..g.order())
        .filter(|&c| c != a && c != b)
        .any(|c| (g.neighbor_mask(c) & v3ab).count_ones() >= 2);
    let drops = v3a | v3b | v4ab;
    let separated = bits(drops).all(|x| {
        bits(drops & !(1 << x)).all(|y| !g.is_adjacent(x, y) && g.neighbor_mask(x) & g.neighbor_mask(y) & !pair == 0)
    });
    let ne = deg[a] + deg[b] - g.multiplicity(a, b) as usize;
    let mut out = CountBreakdown {
        ne,
        v3a: v3a.count_ones() as usize,
        v3b: v3b.count_ones() as usize,
        v3ab: v3ab.count_ones() as usize,
        v4ab: v4ab.count_ones() as usize,
        vy: vy.count_ones() as usize,
        degenerate,
        separated,
        predicted: 0,
    };
    out.predicted = g.edge_count() as i64 - ne as i64 - (out.nv3() + out.v4ab + out.vy) as i64;
    out
}

/// Deletes `a` and `b`, then processes the lowest-indexed vertex of degree at
/// most two until none remains.
pub fn reduce(g: &MultiGraph, a: usize, b: usize) -> Result<ReductionResult, ReduceError> {
    reduce_in_order(g, a, b, |_| 0)
}

/// [`reduce`] with a caller-chosen processing order: `pick` receives the
/// current low-degree vertices in increasing order and returns an index into
/// that slice.
pub fn reduce_in_order(
    g: &MultiGraph,
    a: usize,
    b: usize,
    mut pick: impl FnMut(&[usize]) -> usize,
) -> Result<ReductionResult, ReduceError> {
    let n = g.order();
    for v in [a, b] {
        if v >= n {
            return Err(ReduceError::OutOfRange(v));
        }
    }
    if a == b {
        return Err(ReduceError::SameVertex(a));
    }
    let breakdown = count_equation(g, a, b);
    let mut work = g.clone();
    let mut alive: u32 = if n == 32 { u32::MAX } else { (1u32 << n) - 1 };
    let mut trace = Vec::new();
    for v in [a, b] {
        for u in bits(work.neighbor_mask(v)) {
            work.set_multiplicity(v, u, 0);
        }
        alive &= !(1 << v);
        trace.push(Step::DeleteVertex { vertex: v });
    }
    let mut candidates = Vec::with_capacity(n);
    loop {
        candidates.clear();
        candidates.extend(bits(alive).filter(|&v| work.degree(v) <= 2));
        if candidates.is_empty() {
            break;
        }
        let v = candidates[pick(&candidates).min(candidates.len() - 1)];
        let nbrs: Vec<usize> = work.neighbors(v).collect();
        match (work.degree(v), nbrs.as_slice()) {
            (0, _) => trace.push(Step::RemoveIsolated { vertex: v }),
            (1, &[u]) => {
                work.set_multiplicity(v, u, 0);
                trace.push(Step::RemovePendant { vertex: v, neighbor: u });
            }
            (2, &[u, w]) => {
                work.set_multiplicity(v, u, 0);
                work.set_multiplicity(v, w, 0);
                work.add_multiplicity(u, w, 1);
                trace.push(Step::Contract {
                    vertex: v,
                    into: u,
                    other: w,
                });
            }
            (2, &[u]) => {
                work.set_multiplicity(v, u, 0);
                trace.push(Step::Contract {
                    vertex: v,
                    into: u,
                    other: u,
                });
                trace.push(Step::DeleteLoop { at: u });
            }
            _ => unreachable!("degree at most two"),
        }
        alive &= !(1 << v);
    }
    let kept: Vec<usize> = bits(alive).collect();
    let reduced = work.induced(&kept);
    Ok(ReductionResult {
        edge_count: reduced.edge_count(),
        reduced,
        breakdown,
        trace,
        kept,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    /// The reduced graph is planar, so the input is not intrinsically
    /// knotted.
    Eliminates,
    Fails,
}

/// Which test established planarity of the reduced graph.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Rule {
    /// At most eight edges, or exactly nine without being `K_{3,3}`.
    EdgeCount,
    /// Larger, but an embedding exists.
    Embedding,
}

/// The edge-count criterion alone.
pub fn verdict_by_count(result: &ReductionResult) -> Verdict {
    match result.edge_count {
        0..=8 => Verdict::Eliminates,
        9 if !is_k33(&result.reduced) => Verdict::Eliminates,
        _ => Verdict::Fails,
    }
}

pub fn rule(result: &ReductionResult) -> Option<Rule> {
    if verdict_by_count(result) == Verdict::Eliminates {
        Some(Rule::EdgeCount)
    } else if is_planar(&result.reduced) {
        Some(Rule::Embedding)
    } else {
        None
    }
}

pub fn verdict(result: &ReductionResult) -> Verdict {
    match rule(result) {
        Some(_) => Verdict::Eliminates,
        None => Verdict::Fails,
    }
}

pub fn obstruction_check(
    g: &MultiGraph,
    a: usize,
    b: usize,
) -> Result<(Verdict, ReductionResult), ReduceError> {
    let r = reduce(g, a, b)?;
    Ok((verdict(&r), r))
}

#[derive(Clone, Debug)]
pub struct Elimination {
    pub pair: (usize, usize),
    pub result: ReductionResult,
}

/// First eliminating pair in lexicographic order, if any. `None` only means
/// this obstruction does not apply.
pub fn obstruction_scan(g: &MultiGraph) -> Option<Elimination> {
    let n = g.order();
    for a in 0..n {
        for b in a + 1..n {
            let (v, result) = obstruction_check(g, a, b).expect("valid pair");
            if v == Verdict::Eliminates {
                return Some(Elimination {
                    pair: (a, b),
                    result,
                });
            }
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::graph;
    use crate::graph::canonical_form;

    #[test]
    fn k3311_singletons_reduce_to_k33() {
        let g = graph("k3311");
        let (v, r) = obstruction_check(&g, 6, 7).unwrap();
        assert_eq!(r.edge_count, 9);
        assert_eq!(canonical_form(&r.reduced), canonical_form(&graph("k33")));
        assert_eq!(v, Verdict::Fails);
    }

    #[test]
    fn same_vertex_is_an_error() {
        assert_eq!(reduce(&graph("k33"), 1, 1).unwrap_err(), ReduceError::SameVertex(1));
        assert_eq!(reduce(&graph("k33"), 1, 6).unwrap_err(), ReduceError::OutOfRange(6));
    }

    #[test]
    fn heawood_adjacent_pair() {
        let g = graph("heawood");
        let r = reduce(&g, 0, 1).unwrap();
        assert_eq!(r.edge_count, 12);
        let c = r.breakdown;
        assert_eq!((c.ne, c.nv3(), c.v3ab, c.v4ab, c.vy), (5, 4, 0, 0, 0));
        assert_eq!(c.predicted, 12);
    }

    #[test]
    fn bigon_contraction_drops_the_loop() {
        // a bi-gon hanging off a triangle collapses completely
        let g = MultiGraph::new(6, &[(0, 1, 2), (1, 2, 1), (1, 3, 1), (2, 3, 1)]).unwrap();
        let r = reduce(&g, 4, 5).unwrap();
        assert_eq!(r.edge_count, 0);
        assert!(r.trace.iter().any(|s| matches!(s, Step::DeleteLoop { .. })));
        // a 4-cycle with a doubled edge stops at a triple edge
        let g = MultiGraph::new(6, &[(0, 1, 2), (1, 2, 1), (2, 3, 1), (3, 0, 1)]).unwrap();
        let r = reduce(&g, 4, 5).unwrap();
        assert_eq!(r.edge_count, 3);
        assert_eq!(r.reduced.multiplicity(0, 1), 3);
    }

    #[test]
    fn k33_is_always_eliminated() {
        let e = obstruction_scan(&graph("k33")).unwrap();
        assert_eq!(e.pair, (0, 1));
        assert!(e.result.edge_count <= 8);
    }

    #[test]
    fn trace_digest_is_stable() {
        let g = graph("cousin110");
        let x = reduce(&g, 0, 1).unwrap();
        let y = reduce(&g, 0, 1).unwrap();
        assert_eq!(x.trace_digest(), y.trace_digest());
        assert_eq!(x.trace_digest().len(), 64);
    }
}
