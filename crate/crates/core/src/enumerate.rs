//! Isomorph-free generation of bipartite graphs with prescribed degrees.
//!
//! Rows of the biadjacency matrix are part A, columns part B, each sorted by
//! non-increasing degree. Within a run of equal row degrees the rows must be
//! lexicographically non-increasing, and likewise for columns; the
//! lexicographically largest matrix of every orbit satisfies both, so this
//! prunes without losing classes. A canonical-form set then removes the
//! duplicates the ordering rule lets through.

use std::collections::HashSet;
use std::fmt;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::graph::{
    canonical_form_bipartite, is_connected, BipartiteGraph, DegreeProfile, ProfileError,
};

pub const TARGET_EDGES: usize = 22;

/// Degree profiles of both parts, normalized so `a >= b`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct ProfilePair {
    pub a: DegreeProfile,
    pub b: DegreeProfile,
}

impl ProfilePair {
    pub fn new(x: DegreeProfile, y: DegreeProfile) -> Self {
        if y > x {
            Self { a: y, b: x }
        } else {
            Self { a: x, b: y }
        }
    }

    pub fn max_degree(&self) -> usize {
        self.a.max_degree().max(self.b.max_degree()).unwrap_or(0)
    }

    /// Some vertex has degree six or more.
    pub fn has_high_degree(&self) -> bool {
        self.max_degree() >= 6
    }

    /// Parses `A=3,1,1 B=2,3,0` style selectors (either order, any separator
    /// between the two halves).
    pub fn parse_selector(parts: &[&str]) -> Result<Self, ProfileError> {
        let joined = parts.join(" ");
        let bad = || ProfileError::Parse(joined.clone());
        let mut a = None;
        let mut b = None;
        for tok in joined.split_whitespace().flat_map(|t| t.split(';')) {
            if tok.is_empty() {
                continue;
            }
            let (key, val) = tok.split_once('=').ok_or_else(bad)?;
            let p: DegreeProfile = val.parse()?;
            match key.trim().to_ascii_uppercase().as_str() {
                "A" => a = Some(p),
                "B" => b = Some(p),
                _ => return Err(bad()),
            }
        }
        match (a, b) {
            (Some(a), Some(b)) => Ok(Self::new(a, b)),
            _ => Err(bad()),
        }
    }
}

impl fmt::Display for ProfilePair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.a, self.b)
    }
}

impl fmt::Debug for ProfilePair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Every single-part profile with degrees in `3..=max_degree` whose degree
/// sum is 22, largest first.
pub fn part_profiles(max_degree: usize) -> Vec<DegreeProfile> {
    let max_degree = max_degree.min(7);
    let mut out = Vec::new();
    let mut counts = [0u8; 5];
    fn rec(d: usize, max_degree: usize, left: usize, counts: &mut [u8; 5], out: &mut Vec<DegreeProfile>) {
        if d > max_degree {
            if left == 0 {
                let c = *counts;
                out.push(DegreeProfile::extended(c[4], c[3], c[2], c[1], c[0]));
            }
            return;
        }
        for k in 0..=left / d {
            counts[d - 3] = k as u8;
            rec(d + 1, max_degree, left - k * d, counts, out);
        }
        counts[d - 3] = 0;
    }
    if max_degree >= 3 {
        rec(3, max_degree, TARGET_EDGES, &mut counts, &mut out);
    }
    out.sort_unstable_by(|x, y| y.cmp(x));
    out
}

/// All normalized profile pairs with degrees in `3..=max_degree`.
pub fn admissible_profiles(max_degree: usize) -> Vec<ProfilePair> {
    let parts = part_profiles(max_degree);
    let mut out = Vec::new();
    for (i, &x) in parts.iter().enumerate() {
        for &y in &parts[i..] {
            out.push(ProfilePair::new(x, y));
        }
    }
    out
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct GenerationStats {
    /// Complete matrices reached by the ordered search.
    pub matrices: u64,
    /// Matrices dropped because an isomorphic graph was already emitted.
    pub duplicates: u64,
    /// Matrices dropped by the connectivity filter.
    pub disconnected: u64,
    pub emitted: u64,
}

/// Enumerates bipartite graphs with the given part degree sequences, one per
/// isomorphism class (part swaps included), calling `visit` on each.
///
/// Part A occupies vertices `0..rows.len()` in the given degree order.
pub fn generate_biadjacency(
    row_degrees: &[usize],
    col_degrees: &[usize],
    connected_only: bool,
    mut visit: impl FnMut(BipartiteGraph),
) -> GenerationStats {
    let mut rows: Vec<usize> = row_degrees.to_vec();
    let mut cols: Vec<usize> = col_degrees.to_vec();
    rows.sort_unstable_by(|x, y| y.cmp(x));
    cols.sort_unstable_by(|x, y| y.cmp(x));
    let mut stats = GenerationStats::default();
    if rows.iter().sum::<usize>() != cols.iter().sum::<usize>()
        || rows.iter().any(|&d| d > cols.len())
        || cols.iter().any(|&d| d > rows.len())
        || cols.len() > 16
    {
        return stats;
    }
    let mut search = Orderly {
        rows: &rows,
        cols: &cols,
        matrix: vec![0u32; rows.len()],
        remaining: cols.clone(),
        seen: HashSet::new(),
        connected_only,
        stats: &mut stats,
    };
    search.fill(0, &mut visit);
    stats
}

struct Orderly<'a> {
    rows: &'a [usize],
    cols: &'a [usize],
    /// Row bitmasks, column 0 in the most significant used bit.
    matrix: Vec<u32>,
    remaining: Vec<usize>,
    seen: HashSet<crate::graph::CanonicalForm>,
    connected_only: bool,
    stats: &'a mut GenerationStats,
}

impl Orderly<'_> {
    fn col_bit(&self, j: usize) -> u32 {
        1 << (self.cols.len() - 1 - j)
    }

    fn fill(&mut self, i: usize, visit: &mut impl FnMut(BipartiteGraph)) {
        let nrows = self.rows.len();
        if i == nrows {
            self.complete(visit);
            return;
        }
        let ncols = self.cols.len();
        let rows_left = nrows - i;
        // a column that still needs every remaining row must be taken now
        let mut forced = 0u32;
        let mut open = 0u32;
        for j in 0..ncols {
            if self.remaining[j] > rows_left {
                return;
            }
            if self.remaining[j] > 0 {
                open |= self.col_bit(j);
            }
            if self.remaining[j] == rows_left {
                forced |= self.col_bit(j);
            }
        }
        let bound = if i > 0 && self.rows[i] == self.rows[i - 1] {
            self.matrix[i - 1]
        } else {
            u32::MAX
        };
        let want = self.rows[i] as u32;
        let mut candidates: Vec<u32> = (0..1u32 << ncols)
            .filter(|&m| m.count_ones() == want && m & !open == 0 && m & forced == forced && m <= bound)
            .collect();
        candidates.sort_unstable_by(|x, y| y.cmp(x));
        for m in candidates {
            if !self.columns_ordered(i, m) {
                continue;
            }
            self.matrix[i] = m;
            for j in 0..ncols {
                if m & self.col_bit(j) != 0 {
                    self.remaining[j] -= 1;
                }
            }
            self.fill(i + 1, visit);
            for j in 0..ncols {
                if m & self.col_bit(j) != 0 {
                    self.remaining[j] += 1;
                }
            }
        }
        self.matrix[i] = 0;
    }

    /// With row `i` set to `m`, equal-degree neighbouring columns keep
    /// non-increasing prefixes.
    fn columns_ordered(&self, i: usize, m: u32) -> bool {
        for j in 0..self.cols.len().saturating_sub(1) {
            if self.cols[j] != self.cols[j + 1] {
                continue;
            }
            let (bj, bk) = (self.col_bit(j), self.col_bit(j + 1));
            let prefix_equal = self.matrix[..i].iter().all(|r| (r & bj == 0) == (r & bk == 0));
            if prefix_equal && m & bj == 0 && m & bk != 0 {
                return false;
            }
        }
        true
    }

    fn complete(&mut self, visit: &mut impl FnMut(BipartiteGraph)) {
        self.stats.matrices += 1;
        let ncols = self.cols.len();
        let rows: Vec<Vec<bool>> = self
            .matrix
            .iter()
            .map(|&m| (0..ncols).map(|j| m & self.col_bit(j) != 0).collect())
            .collect();
        let g = BipartiteGraph::from_biadjacency(&rows).expect("valid biadjacency");
        if self.connected_only && !is_connected(g.graph()) {
            self.stats.disconnected += 1;
            return;
        }
        if !self.seen.insert(canonical_form_bipartite(&g)) {
            self.stats.duplicates += 1;
            return;
        }
        self.stats.emitted += 1;
        visit(g);
    }
}

/// Streams every connected graph realizing `pair`, one per isomorphism class.
pub fn generate_with(pair: &ProfilePair, visit: impl FnMut(BipartiteGraph)) -> GenerationStats {
    generate_biadjacency(&pair.a.degrees(), &pair.b.degrees(), true, visit)
}

pub fn generate(pair: &ProfilePair) -> Vec<BipartiteGraph> {
    let mut out = Vec::new();
    generate_with(pair, |g| out.push(g));
    out
}

/// [`generate`] over every admissible pair, profiles processed in parallel;
/// output follows the order of [`admissible_profiles`].
pub fn generate_all(max_degree: usize) -> Vec<(ProfilePair, BipartiteGraph)> {
    generate_profiles(&admissible_profiles(max_degree))
}

pub fn generate_profiles(pairs: &[ProfilePair]) -> Vec<(ProfilePair, BipartiteGraph)> {
    let chunks: Vec<Vec<(ProfilePair, BipartiteGraph)>> = pairs
        .par_iter()
        .map(|p| generate(p).into_iter().map(|g| (*p, g)).collect())
        .collect();
    chunks.into_iter().flatten().collect()
}
