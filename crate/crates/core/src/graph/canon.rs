//! Canonical labelling by colour refinement plus individualisation.
//!
//! The search tree is the usual one: refine to an equitable ordered
//! partition, individualise each vertex of the first non-singleton cell, and
//! recurse. Every leaf is a vertex ordering; the certificate is the
//! lexicographically largest leaf encoding. Automorphisms discovered at equal
//! leaves prune sibling subtrees that lie in the same orbit of the pointwise
//! stabiliser of the current prefix.

use std::cmp::Ordering;
use std::fmt;
use std::hash::{Hash, Hasher};

use super::{BipartiteGraph, MultiGraph};

const TAG_PLAIN: u8 = 0;
const TAG_COLORED: u8 = 1;
const MAX_STORED_AUTOMORPHISMS: usize = 256;

/// Relabelling-invariant certificate together with the labelling that
/// produced it. Equality, ordering and hashing look only at the certificate.
#[derive(Clone)]
pub struct CanonicalForm {
    certificate: Vec<u8>,
    labeling: Vec<usize>,
}

impl CanonicalForm {
    pub fn certificate(&self) -> &[u8] {
        &self.certificate
    }

    /// `labeling[v]` is the canonical position of input vertex `v`.
    pub fn labeling(&self) -> &[usize] {
        &self.labeling
    }

    pub fn to_hex(&self) -> String {
        hex::encode(&self.certificate)
    }

    /// Rebuilds the canonically labelled graph from the certificate.
    pub fn to_graph(&self) -> MultiGraph {
        decode_graph(&self.certificate).expect("certificates are produced internally")
    }
}

/// Decodes a certificate byte string into the canonically labelled graph;
/// `None` if the bytes are not a well-formed certificate.
pub fn decode_graph(cert: &[u8]) -> Option<MultiGraph> {
    let (&n, rest) = cert.split_first()?;
    let n = n as usize;
    let (&tag, mut rest) = rest.split_first()?;
    match tag {
        TAG_PLAIN => {}
        TAG_COLORED => rest = rest.get(n..)?,
        _ => return None,
    }
    if rest.len() != n * n.saturating_sub(1) / 2 {
        return None;
    }
    let mut g = MultiGraph::empty(n).ok()?;
    let mut k = 0;
    for i in 0..n {
        for j in i + 1..n {
            if rest[k] > 0 {
                g.set_multiplicity(i, j, rest[k]);
            }
            k += 1;
        }
    }
    Some(g)
}

impl PartialEq for CanonicalForm {
    fn eq(&self, other: &Self) -> bool {
        self.certificate == other.certificate
    }
}

impl Eq for CanonicalForm {}

impl Hash for CanonicalForm {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.certificate.hash(state);
    }
}

impl PartialOrd for CanonicalForm {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for CanonicalForm {
    fn cmp(&self, other: &Self) -> Ordering {
        self.certificate.cmp(&other.certificate)
    }
}

impl fmt::Debug for CanonicalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CanonicalForm({})", self.to_hex())
    }
}

/// Canonical form of an uncoloured multigraph.
pub fn canonical_form(g: &MultiGraph) -> CanonicalForm {
    let colors = vec![0u32; g.order()];
    run(g, &colors, false)
}

/// Canonical form respecting a vertex colouring; colours are compared by value.
pub fn canonical_form_colored(g: &MultiGraph, colors: &[u32]) -> CanonicalForm {
    assert_eq!(colors.len(), g.order());
    run(g, colors, true)
}

/// Canonical form of a bipartite graph that also canonicalises the part
/// assignment: a graph and its part-swapped copy get the same certificate.
pub fn canonical_form_bipartite(g: &BipartiteGraph) -> CanonicalForm {
    let n = g.order();
    let straight: Vec<u32> = (0..n).map(|v| u32::from(!g.in_part_a(v))).collect();
    let swapped: Vec<u32> = straight.iter().map(|c| 1 - c).collect();
    let x = run(g.graph(), &straight, true);
    let y = run(g.graph(), &swapped, true);
    x.max(y)
}

fn run(g: &MultiGraph, colors: &[u32], colored: bool) -> CanonicalForm {
    let n = g.order();
    let mut search = Search {
        g,
        colors,
        colored,
        best: None,
        automorphisms: Vec::new(),
    };
    let mut keyed: Vec<(u32, usize)> = (0..n).map(|v| (colors[v], v)).collect();
    keyed.sort_unstable();
    let mut cells: Vec<Vec<usize>> = Vec::new();
    for (i, &(c, v)) in keyed.iter().enumerate() {
        if i == 0 || keyed[i - 1].0 != c {
            cells.push(Vec::new());
        }
        cells.last_mut().expect("pushed above").push(v);
    }
    let mut prefix = Vec::new();
    search.explore(cells, &mut prefix);
    let (certificate, order) = search.best.expect("the search always reaches a leaf");
    let mut labeling = vec![0; n];
    for (pos, &v) in order.iter().enumerate() {
        labeling[v] = pos;
    }
    CanonicalForm {
        certificate,
        labeling,
    }
}

fn search_leaf_bytes(g: &MultiGraph, colors: &[u32], colored: bool, order: &[usize]) -> Vec<u8> {
    let n = order.len();
    let mut out = Vec::with_capacity(2 + n + n * n / 2);
    out.push(g.order() as u8);
    if colored {
        out.push(TAG_COLORED);
        out.extend(order.iter().map(|&v| colors[v] as u8));
    } else {
        out.push(TAG_PLAIN);
    }
    for i in 0..n {
        for j in i + 1..n {
            out.push(g.multiplicity(order[i], order[j]));
        }
    }
    out
}

struct Search<'a> {
    g: &'a MultiGraph,
    colors: &'a [u32],
    colored: bool,
    best: Option<(Vec<u8>, Vec<usize>)>,
    automorphisms: Vec<Vec<usize>>,
}

impl Search<'_> {
    fn explore(&mut self, cells: Vec<Vec<usize>>, prefix: &mut Vec<usize>) {
        let cells = refine(self.g, cells);
        let Some(t) = cells.iter().position(|c| c.len() > 1) else {
            let order: Vec<usize> = cells.into_iter().map(|c| c[0]).collect();
            self.leaf(order);
            return;
        };
        let target = cells[t].clone();
        let mut tried: Vec<usize> = Vec::new();
        for &v in &target {
            if !tried.is_empty() && self.same_orbit_as_tried(v, &tried, prefix) {
                continue;
            }
            tried.push(v);
            let mut child = Vec::with_capacity(cells.len() + 1);
            child.extend_from_slice(&cells[..t]);
            child.push(vec![v]);
            child.push(target.iter().copied().filter(|&w| w != v).collect());
            child.extend_from_slice(&cells[t + 1..]);
            prefix.push(v);
            self.explore(child, prefix);
            prefix.pop();
        }
    }

    fn leaf(&mut self, order: Vec<usize>) {
        let enc = search_leaf_bytes(self.g, self.colors, self.colored, &order);
        match &self.best {
            None => self.best = Some((enc, order)),
            Some((best, best_order)) => match enc.cmp(best) {
                Ordering::Greater => self.best = Some((enc, order)),
                Ordering::Equal => {
                    if self.automorphisms.len() < MAX_STORED_AUTOMORPHISMS {
                        let mut gamma = vec![0; order.len()];
                        for (i, &v) in best_order.iter().enumerate() {
                            gamma[v] = order[i];
                        }
                        self.automorphisms.push(gamma);
                    }
                }
                Ordering::Less => {}
            },
        }
    }

    /// Whether `v` shares an orbit with an already explored sibling under the
    /// known automorphisms that fix `prefix` pointwise.
    fn same_orbit_as_tried(&self, v: usize, tried: &[usize], prefix: &[usize]) -> bool {
        let n = self.g.order();
        let mut parent: Vec<usize> = (0..n).collect();
        fn find(p: &mut [usize], mut x: usize) -> usize {
            while p[x] != x {
                p[x] = p[p[x]];
                x = p[x];
            }
            x
        }
        let mut any = false;
        for gamma in &self.automorphisms {
            if prefix.iter().any(|&p| gamma[p] != p) {
                continue;
            }
            any = true;
            for (x, &y) in gamma.iter().enumerate() {
                let (rx, ry) = (find(&mut parent, x), find(&mut parent, y));
                if rx != ry {
                    parent[rx] = ry;
                }
            }
        }
        if !any {
            return false;
        }
        let rv = find(&mut parent, v);
        tried.iter().any(|&w| find(&mut parent, w) == rv)
    }
}

/// Splits cells by their multiplicity-weighted neighbour counts into every
/// cell until the ordered partition is equitable.
fn refine(g: &MultiGraph, mut cells: Vec<Vec<usize>>) -> Vec<Vec<usize>> {
    let n = g.order();
    let mut cell_of = vec![0usize; n];
    loop {
        let k = cells.len();
        if k == n {
            return cells;
        }
        for (i, c) in cells.iter().enumerate() {
            for &v in c {
                cell_of[v] = i;
            }
        }
        let mut next: Vec<Vec<usize>> = Vec::with_capacity(n);
        for c in &cells {
            if c.len() == 1 {
                next.push(c.clone());
                continue;
            }
            let mut keyed: Vec<(Vec<u16>, usize)> = c
                .iter()
                .map(|&v| {
                    let mut sig = vec![0u16; k];
                    for u in g.neighbors(v) {
                        sig[cell_of[u]] += g.multiplicity(v, u) as u16;
                    }
                    (sig, v)
                })
                .collect();
            keyed.sort_unstable();
            for (i, (sig, v)) in keyed.iter().enumerate() {
                if i == 0 || keyed[i - 1].0 != *sig {
                    next.push(Vec::new());
                }
                next.last_mut().expect("pushed above").push(*v);
            }
        }
        if next.len() == k {
            return next;
        }
        cells = next;
    }
}
