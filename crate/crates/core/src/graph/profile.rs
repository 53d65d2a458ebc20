use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use super::BipartiteGraph;

pub const MIN_DEGREE: usize = 3;
pub const MAX_DEGREE: usize = 7;
/// Edge count every profile of the classification describes.
pub const TARGET_EDGES: usize = 22;

/// Vertex counts of one part by degree, for degrees 3 through 7.
///
/// Written `[n5,n4,n3]` when no vertex exceeds degree 5 and
/// `[n7,n6,n5,n4,n3]` otherwise. Profiles order by `(n7, n6, n5, n4, n3)`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
pub struct DegreeProfile {
    /// `counts[d - 3]` vertices of degree `d`.
    counts: [u8; 5],
}

impl DegreeProfile {
    /// The short `[n5, n4, n3]` form.
    pub const fn new(n5: u8, n4: u8, n3: u8) -> Self {
        Self {
            counts: [n3, n4, n5, 0, 0],
        }
    }

    pub const fn extended(n7: u8, n6: u8, n5: u8, n4: u8, n3: u8) -> Self {
        Self {
            counts: [n3, n4, n5, n6, n7],
        }
    }

    /// Profile of a degree list; `None` if a degree falls outside 3..=7.
    pub fn from_degrees(degrees: impl IntoIterator<Item = usize>) -> Option<Self> {
        let mut p = Self::default();
        for d in degrees {
            if !(MIN_DEGREE..=MAX_DEGREE).contains(&d) {
                return None;
            }
            p.counts[d - MIN_DEGREE] += 1;
        }
        Some(p)
    }

    pub fn count(&self, degree: usize) -> usize {
        if (MIN_DEGREE..=MAX_DEGREE).contains(&degree) {
            self.counts[degree - MIN_DEGREE] as usize
        } else {
            0
        }
    }

    pub fn part_size(&self) -> usize {
        self.counts.iter().map(|&c| c as usize).sum()
    }

    pub fn degree_sum(&self) -> usize {
        (MIN_DEGREE..=MAX_DEGREE).map(|d| d * self.count(d)).sum()
    }

    pub fn max_degree(&self) -> Option<usize> {
        (MIN_DEGREE..=MAX_DEGREE).rev().find(|&d| self.count(d) > 0)
    }

    /// Degrees in non-increasing order, one per vertex.
    pub fn degrees(&self) -> Vec<usize> {
        (MIN_DEGREE..=MAX_DEGREE)
            .rev()
            .flat_map(|d| std::iter::repeat_n(d, self.count(d)))
            .collect()
    }

    fn key(&self) -> [u8; 5] {
        let c = self.counts;
        [c[4], c[3], c[2], c[1], c[0]]
    }
}

impl Ord for DegreeProfile {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.key().cmp(&other.key())
    }
}

impl PartialOrd for DegreeProfile {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for DegreeProfile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let c = self.counts;
        if c[3] == 0 && c[4] == 0 {
            write!(f, "[{},{},{}]", c[2], c[1], c[0])
        } else {
            write!(f, "[{},{},{},{},{}]", c[4], c[3], c[2], c[1], c[0])
        }
    }
}

impl fmt::Debug for DegreeProfile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for DegreeProfile {
    type Err = ProfileError;

    /// Parses `n5,n4,n3` or `n7,n6,n5,n4,n3`, with optional brackets.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || ProfileError::Parse(s.to_string());
        let inner = s.trim().trim_start_matches('[').trim_end_matches(']');
        let nums = inner
            .split(',')
            .map(|t| t.trim().parse::<u8>())
            .collect::<Result<Vec<_>, _>>()
            .map_err(|_| bad())?;
        match nums[..] {
            [n5, n4, n3] => Ok(Self::new(n5, n4, n3)),
            [n7, n6, n5, n4, n3] => Ok(Self::extended(n7, n6, n5, n4, n3)),
            _ => Err(bad()),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ProfileError {
    #[error("vertex {vertex} has degree {degree}, outside 3..=7")]
    DegreeOutOfRange { vertex: usize, degree: usize },
    #[error("graph has {0} edges; degree profiles describe 22-edge graphs")]
    EdgeCount(usize),
    #[error("cannot parse degree profile {0:?}")]
    Parse(String),
}

/// Per-part degree profiles of a 22-edge bipartite graph, ordered so the
/// first is not smaller than the second.
pub fn degree_profile(
    g: &BipartiteGraph,
) -> Result<(DegreeProfile, DegreeProfile), ProfileError> {
    let graph = g.graph();
    for v in 0..graph.order() {
        let d = graph.degree(v);
        if !(MIN_DEGREE..=MAX_DEGREE).contains(&d) {
            return Err(ProfileError::DegreeOutOfRange {
                vertex: v,
                degree: d,
            });
        }
    }
    if graph.edge_count() != TARGET_EDGES {
        return Err(ProfileError::EdgeCount(graph.edge_count()));
    }
    let pa = DegreeProfile::from_degrees(g.part_a().iter().map(|&v| graph.degree(v)))
        .expect("degrees checked");
    let pb = DegreeProfile::from_degrees(g.part_b().iter().map(|&v| graph.degree(v)))
        .expect("degrees checked");
    Ok(if pb > pa { (pb, pa) } else { (pa, pb) })
}
