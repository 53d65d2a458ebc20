//! Reference implementations used as test oracles. Nothing here touches the
//! canonical labeller.

#![allow(dead_code)]

use std::collections::VecDeque;

use ikforge::graph::{BipartiteGraph, MultiGraph};
use rand::seq::SliceRandom;
use rand::Rng;

type Invariant = (u32, usize, Vec<(usize, u8)>);

/// Per-vertex invariant: colour, degree, sorted neighbour degrees with
/// multiplicity.
fn invariants(g: &MultiGraph, colors: &[u32]) -> Vec<Invariant> {
    (0..g.order())
        .map(|v| {
            let mut nd: Vec<(usize, u8)> = g.neighbors(v).map(|u| (g.degree(u), g.multiplicity(v, u))).collect();
            nd.sort_unstable();
            (colors[v], g.degree(v), nd)
        })
        .collect()
}

/// Colour-preserving isomorphism by backtracking.
pub fn isomorphic_colored(a: &MultiGraph, ca: &[u32], b: &MultiGraph, cb: &[u32]) -> bool {
    let n = a.order();
    if n != b.order() || a.edge_count() != b.edge_count() {
        return false;
    }
    let ia = invariants(a, ca);
    let ib = invariants(b, cb);
    let mut sa = ia.clone();
    let mut sb = ib.clone();
    sa.sort();
    sb.sort();
    if sa != sb {
        return false;
    }
    // map vertices of `a` in BFS order so each new vertex is constrained early
    let mut order = Vec::with_capacity(n);
    let mut placed = vec![false; n];
    for s in 0..n {
        if placed[s] {
            continue;
        }
        placed[s] = true;
        let mut q = VecDeque::from([s]);
        while let Some(v) = q.pop_front() {
            order.push(v);
            for u in a.neighbors(v) {
                if !placed[u] {
                    placed[u] = true;
                    q.push_back(u);
                }
            }
        }
    }
    let mut map = vec![usize::MAX; n];
    let mut used = vec![false; n];
    extend(a, b, &ia, &ib, &order, 0, &mut map, &mut used)
}

#[allow(clippy::too_many_arguments)]
fn extend(
    a: &MultiGraph,
    b: &MultiGraph,
    ia: &[Invariant],
    ib: &[Invariant],
    order: &[usize],
    k: usize,
    map: &mut [usize],
    used: &mut [bool],
) -> bool {
    if k == order.len() {
        return true;
    }
    let v = order[k];
    for w in 0..b.order() {
        if used[w] || ia[v] != ib[w] {
            continue;
        }
        let ok = order[..k].iter().all(|&u| a.multiplicity(u, v) == b.multiplicity(map[u], w));
        if !ok {
            continue;
        }
        map[v] = w;
        used[w] = true;
        if extend(a, b, ia, ib, order, k + 1, map, used) {
            return true;
        }
        used[w] = false;
    }
    map[v] = usize::MAX;
    false
}

pub fn isomorphic(a: &MultiGraph, b: &MultiGraph) -> bool {
    isomorphic_colored(a, &vec![0; a.order()], b, &vec![0; b.order()])
}

/// Isomorphic as bipartite graphs, parts allowed to swap.
pub fn bipartite_isomorphic(a: &BipartiteGraph, b: &BipartiteGraph) -> bool {
    let ca: Vec<u32> = (0..a.order()).map(|v| u32::from(a.in_part_a(v))).collect();
    let cb: Vec<u32> = (0..b.order()).map(|v| u32::from(b.in_part_a(v))).collect();
    let swapped: Vec<u32> = cb.iter().map(|c| 1 - c).collect();
    isomorphic_colored(a.graph(), &ca, b.graph(), &cb) || isomorphic_colored(a.graph(), &ca, b.graph(), &swapped)
}

/// Every labelled 0/1 matrix with the given row and column sums.
pub fn labelled_biadjacency(rows: &[usize], cols: &[usize]) -> Vec<Vec<Vec<bool>>> {
    fn rec(rows: &[usize], left: &mut Vec<usize>, i: usize, cur: &mut Vec<Vec<bool>>, out: &mut Vec<Vec<Vec<bool>>>) {
        if i == rows.len() {
            if left.iter().all(|&c| c == 0) {
                out.push(cur.clone());
            }
            return;
        }
        let m = left.len();
        for mask in 0u32..1 << m {
            if mask.count_ones() as usize != rows[i] {
                continue;
            }
            if (0..m).any(|j| mask >> j & 1 == 1 && left[j] == 0) {
                continue;
            }
            let row: Vec<bool> = (0..m).map(|j| mask >> j & 1 == 1).collect();
            for j in 0..m {
                left[j] -= usize::from(row[j]);
            }
            cur.push(row);
            rec(rows, left, i + 1, cur, out);
            cur.pop();
            for j in 0..m {
                if mask >> j & 1 == 1 {
                    left[j] += 1;
                }
            }
        }
    }
    let mut out = Vec::new();
    rec(rows, &mut cols.to_vec(), 0, &mut Vec::new(), &mut out);
    out
}

/// Isomorphism classes among all labelled realisations.
pub fn brute_force_classes(rows: &[usize], cols: &[usize], connected_only: bool) -> Vec<BipartiteGraph> {
    let mut classes: Vec<BipartiteGraph> = Vec::new();
    for m in labelled_biadjacency(rows, cols) {
        let g = BipartiteGraph::from_biadjacency(&m).unwrap();
        if connected_only && !connected(g.graph()) {
            continue;
        }
        if !classes.iter().any(|c| bipartite_isomorphic(c, &g)) {
            classes.push(g);
        }
    }
    classes
}

pub fn connected(g: &MultiGraph) -> bool {
    let n = g.order();
    if n == 0 {
        return true;
    }
    let mut seen = vec![false; n];
    let mut stack = vec![0];
    seen[0] = true;
    while let Some(v) = stack.pop() {
        for u in g.neighbors(v) {
            if !seen[u] {
                seen[u] = true;
                stack.push(u);
            }
        }
    }
    seen.into_iter().all(|s| s)
}

/// Some closed walk of odd length exists: search the parity double cover.
pub fn has_odd_cycle(g: &MultiGraph) -> bool {
    let n = g.order();
    for s in 0..n {
        let mut seen = vec![[false; 2]; n];
        seen[s][0] = true;
        let mut stack = vec![(s, 0usize)];
        while let Some((v, p)) = stack.pop() {
            for u in g.neighbors(v) {
                let q = 1 - p;
                if u == s && q == 1 {
                    return true;
                }
                if !seen[u][q] {
                    seen[u][q] = true;
                    stack.push((u, q));
                }
            }
        }
    }
    false
}

/// Random simple graph on `n` vertices with about `m` edges.
pub fn random_simple(rng: &mut impl Rng, n: usize, m: usize) -> MultiGraph {
    let mut pairs = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            pairs.push((u, v));
        }
    }
    let take = m.min(pairs.len());
    let chosen = pairs.partial_shuffle(rng, take).0.to_vec();
    MultiGraph::from_edges(n, &chosen).unwrap()
}

/// Random multigraph: a simple graph with some edges doubled.
pub fn random_multi(rng: &mut impl Rng, n: usize, m: usize) -> MultiGraph {
    let g = random_simple(rng, n, m);
    let edges: Vec<(usize, usize, u8)> = g
        .edges()
        .into_iter()
        .map(|(u, v, _)| (u, v, if rng.gen_bool(0.2) { 2 } else { 1 }))
        .collect();
    MultiGraph::new(n, &edges).unwrap()
}

pub fn random_permutation(rng: &mut impl Rng, n: usize) -> Vec<usize> {
    let mut p: Vec<usize> = (0..n).collect();
    p.shuffle(rng);
    p
}
